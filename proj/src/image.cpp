#include "dichromat/image.hpp"

#include <algorithm>
#include <cmath>

#include "dichromat/errors.hpp"
#include "dichromat/parallel.hpp"

namespace dichromat {

Image::Image(int r, int c, double fill) : rows(r), cols(c) {
    if (r <= 0 || c <= 0) throw dimension_error("image dimensions must be positive");
    data.assign(static_cast<size_t>(r) * static_cast<size_t>(c), fill);
}

void Volume::validate() const {
    if (slices.empty()) throw dimension_error("volume must contain at least one slice");
    for (const Image& s : slices) {
        if (!s.same_shape(slices.front()))
            throw dimension_error("volume slices must share dimensions");
    }
}

bool all_finite(std::span<const double> a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

NormalizeResult normalize(const Image& img) {
    if (!all_finite(img.data)) throw value_error("normalize: image contains NaN/Inf");
    double peak = *std::max_element(img.data.begin(), img.data.end());
    NormalizeResult out{img, peak};
    if (peak > 0.0) {
        for (double& v : out.scaled.data) v /= peak;
    }
    return out;
}

GradientField gradient(const Image& img) {
    const int rows = img.rows, cols = img.cols;
    GradientField g{Image(rows, cols), Image(rows, cols)};
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < rows; ++i) {
        const double* src = img.data.data() + static_cast<size_t>(i) * cols;
        const double* below = (i + 1 < rows) ? src + cols : nullptr;
        double* h = g.horiz.data.data() + static_cast<size_t>(i) * cols;
        double* v = g.vert.data.data() + static_cast<size_t>(i) * cols;
        for (int j = 0; j + 1 < cols; ++j) h[j] = src[j + 1] - src[j];
        h[cols - 1] = 0.0;
        if (below) {
            for (int j = 0; j < cols; ++j) v[j] = below[j] - src[j];
        } else {
            for (int j = 0; j < cols; ++j) v[j] = 0.0;
        }
    }
    return g;
}

Image gradient_adjoint(const GradientField& g) {
    if (!g.horiz.same_shape(g.vert)) throw dimension_error("gradient field components differ in shape");
    const int rows = g.rows(), cols = g.cols();
    Image out(rows, cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < rows; ++i) {
        const double* h = g.horiz.data.data() + static_cast<size_t>(i) * cols;
        const double* v = g.vert.data.data() + static_cast<size_t>(i) * cols;
        const double* vup = (i > 0) ? g.vert.data.data() + static_cast<size_t>(i - 1) * cols : nullptr;
        double* o = out.data.data() + static_cast<size_t>(i) * cols;
        for (int j = 0; j < cols; ++j) {
            double acc = 0.0;
            if (j > 0) acc += h[j - 1];
            if (j + 1 < cols) acc -= h[j];
            if (vup) acc += vup[j];
            if (i + 1 < rows) acc -= v[j];
            o[j] = acc;
        }
    }
    return out;
}

double weighted_l2_norm(std::span<const double> x, std::span<const double> w) {
    if (x.size() != w.size()) throw dimension_error("weighted_l2_norm: size mismatch");
    for (double wi : w)
        if (wi < 0.0) throw value_error("weighted_l2_norm: negative weight");
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * x[i];
    return std::sqrt(s);
}

double weighted_l2_norm(const GradientField& g, const Image& w) {
    if (!g.horiz.same_shape(w)) throw dimension_error("weighted_l2_norm: weight shape mismatch");
    for (double wi : w.data)
        if (wi < 0.0) throw value_error("weighted_l2_norm: negative weight");
    const int rows = w.rows, cols = w.cols;
    double s = sum_over_rows(rows, [&](int i) {
        const double* h = g.horiz.data.data() + static_cast<size_t>(i) * cols;
        const double* v = g.vert.data.data() + static_cast<size_t>(i) * cols;
        const double* ww = w.data.data() + static_cast<size_t>(i) * cols;
        double acc = 0.0;
        for (int j = 0; j < cols; ++j) acc += ww[j] * (h[j] * h[j] + v[j] * v[j]);
        return acc;
    });
    return std::sqrt(s);
}

double frobenius_norm(const Image& img) {
    return std::sqrt(sum_squares(img.data));
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw dimension_error("dot: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double sum_squares(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

} // namespace dichromat
