#pragma once

#include "dichromat/image.hpp"

namespace dichromat {

/// Composed blur + downsampling forward model: each low-res pixel is the area
/// average of the high-res intensity over its (possibly fractional) footprint.
/// For integer factors this is exact block averaging. The operator is applied
/// matrix-free through separable 1D weight bands; `adjoint` is the exact
/// transpose under the standard inner product.
class DegradationOperator {
public:
    struct Band {
        int first = 0;              // first source index touched
        std::vector<double> w;      // weights, normalized to sum 1
    };

    DegradationOperator() = default;

    int hi_rows() const { return hi_rows_; }
    int hi_cols() const { return hi_cols_; }
    int lo_rows() const { return lo_rows_; }
    int lo_cols() const { return lo_cols_; }

    /// hi_dims -> lo_dims. Throws dimension_error unless hi >= lo >= 1
    /// componentwise.
    static DegradationOperator make(int hi_rows, int hi_cols, int lo_rows, int lo_cols);

    Image apply(const Image& hi) const;
    Image adjoint(const Image& lo) const;

    const std::vector<Band>& row_bands() const { return row_bands_; }
    const std::vector<Band>& col_bands() const { return col_bands_; }

private:
    int hi_rows_ = 0, hi_cols_ = 0, lo_rows_ = 0, lo_cols_ = 0;
    std::vector<Band> row_bands_, col_bands_;         // lo index -> hi weights
    std::vector<Band> row_bands_rev_, col_bands_rev_; // hi index -> lo weights
};

inline DegradationOperator make_operator(int hi_rows, int hi_cols, int lo_rows, int lo_cols) {
    return DegradationOperator::make(hi_rows, hi_cols, lo_rows, lo_cols);
}

} // namespace dichromat
