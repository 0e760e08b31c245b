#pragma once

#include <span>
#include <vector>

namespace dichromat {

/// Dense 2D image of real intensities, row-major.
struct Image {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Image() = default;
    Image(int r, int c, double fill = 0.0);

    double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    size_t size() const { return data.size(); }
    bool same_shape(const Image& o) const { return rows == o.rows && cols == o.cols; }
};

/// Per-pixel forward-difference vectors: horiz = differences along columns,
/// vert = differences along rows. Both components share the image shape.
struct GradientField {
    Image horiz;
    Image vert;

    int rows() const { return horiz.rows; }
    int cols() const { return horiz.cols; }
};

/// Ordered stack of same-shaped slices (space or time).
struct Volume {
    std::vector<Image> slices;

    int count() const { return static_cast<int>(slices.size()); }
    int rows() const { return slices.empty() ? 0 : slices.front().rows; }
    int cols() const { return slices.empty() ? 0 : slices.front().cols; }
    void validate() const; // throws dimension_error on shape mismatch / empty
};

struct NormalizeResult {
    Image scaled;
    double peak = 0.0;
};

/// Scale an image by its maximum so values land in [0,1]. A non-positive peak
/// leaves the image unchanged (the caller treats that slice as silent).
/// Throws value_error on NaN/Inf input.
NormalizeResult normalize(const Image& img);

/// Forward differences with replicate boundary: trailing row/column of each
/// component is exactly zero, so constants are in the null space.
GradientField gradient(const Image& img);

/// Exact adjoint of `gradient` under the unweighted inner product. Entries of
/// the field at the trailing edges do not contribute (structural zeros of the
/// forward map).
Image gradient_adjoint(const GradientField& g);

/// sqrt(sum_i w_i x_i^2). Negative weights are rejected.
double weighted_l2_norm(std::span<const double> x, std::span<const double> w);

/// Weighted norm of a gradient field: the same per-pixel weight multiplies
/// both components.
double weighted_l2_norm(const GradientField& g, const Image& w);

/// sqrt(sum of squared entries).
double frobenius_norm(const Image& img);

double dot(std::span<const double> a, std::span<const double> b);
double sum_squares(std::span<const double> a);

bool all_finite(std::span<const double> a);

} // namespace dichromat
