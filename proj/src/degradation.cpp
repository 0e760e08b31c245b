#include "dichromat/degradation.hpp"

#include <algorithm>
#include <cmath>

#include "dichromat/errors.hpp"

namespace dichromat {
namespace {

// Overlap of the unit source cell [i, i+1) with the footprint
// [I*f, (I+1)*f), f = hi/lo. Weights normalized so each band sums to 1.
std::vector<DegradationOperator::Band> make_bands(int hi, int lo) {
    std::vector<DegradationOperator::Band> bands(static_cast<size_t>(lo));
    const double f = static_cast<double>(hi) / static_cast<double>(lo);
    for (int I = 0; I < lo; ++I) {
        const double a = I * f;
        const double b = (I + 1) * f;
        int i0 = static_cast<int>(std::floor(a));
        int i1 = std::min(hi, static_cast<int>(std::ceil(b)));
        DegradationOperator::Band band;
        band.first = -1;
        for (int i = i0; i < i1; ++i) {
            double ov = std::min(static_cast<double>(i + 1), b) - std::max(static_cast<double>(i), a);
            if (ov <= 1e-12) continue;
            if (band.first < 0) band.first = i;
            band.w.push_back(ov);
        }
        double s = 0.0;
        for (double v : band.w) s += v;
        for (double& v : band.w) v /= s;
        bands[static_cast<size_t>(I)] = std::move(band);
    }
    return bands;
}

std::vector<DegradationOperator::Band> reverse_bands(const std::vector<DegradationOperator::Band>& fwd, int hi) {
    std::vector<DegradationOperator::Band> rev(static_cast<size_t>(hi));
    std::vector<std::vector<std::pair<int, double>>> tmp(static_cast<size_t>(hi));
    for (int I = 0; I < static_cast<int>(fwd.size()); ++I) {
        const auto& band = fwd[static_cast<size_t>(I)];
        for (size_t k = 0; k < band.w.size(); ++k)
            tmp[static_cast<size_t>(band.first) + k].emplace_back(I, band.w[k]);
    }
    for (int i = 0; i < hi; ++i) {
        auto& entries = tmp[static_cast<size_t>(i)];
        DegradationOperator::Band band;
        band.first = entries.empty() ? 0 : entries.front().first;
        for (auto& [I, w] : entries) band.w.push_back(w);
        rev[static_cast<size_t>(i)] = std::move(band);
    }
    return rev;
}

} // namespace

DegradationOperator DegradationOperator::make(int hi_rows, int hi_cols, int lo_rows, int lo_cols) {
    if (lo_rows <= 0 || lo_cols <= 0) throw dimension_error("degradation: low-res dims must be positive");
    if (hi_rows < lo_rows || hi_cols < lo_cols)
        throw dimension_error("degradation: high-res dims must be >= low-res dims");
    DegradationOperator op;
    op.hi_rows_ = hi_rows;
    op.hi_cols_ = hi_cols;
    op.lo_rows_ = lo_rows;
    op.lo_cols_ = lo_cols;
    op.row_bands_ = make_bands(hi_rows, lo_rows);
    op.col_bands_ = make_bands(hi_cols, lo_cols);
    op.row_bands_rev_ = reverse_bands(op.row_bands_, hi_rows);
    op.col_bands_rev_ = reverse_bands(op.col_bands_, hi_cols);
    return op;
}

Image DegradationOperator::apply(const Image& hi) const {
    if (hi.rows != hi_rows_ || hi.cols != hi_cols_)
        throw dimension_error("degradation apply: input does not match hi dims");
    Image tmp(lo_rows_, hi_cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int I = 0; I < lo_rows_; ++I) {
        const Band& band = row_bands_[static_cast<size_t>(I)];
        double* dst = tmp.data.data() + static_cast<size_t>(I) * hi_cols_;
        std::fill(dst, dst + hi_cols_, 0.0);
        for (size_t k = 0; k < band.w.size(); ++k) {
            const double wk = band.w[k];
            const double* src = hi.data.data() + (static_cast<size_t>(band.first) + k) * hi_cols_;
            for (int j = 0; j < hi_cols_; ++j) dst[j] += wk * src[j];
        }
    }
    Image out(lo_rows_, lo_cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int I = 0; I < lo_rows_; ++I) {
        const double* src = tmp.data.data() + static_cast<size_t>(I) * hi_cols_;
        double* dst = out.data.data() + static_cast<size_t>(I) * lo_cols_;
        for (int J = 0; J < lo_cols_; ++J) {
            const Band& band = col_bands_[static_cast<size_t>(J)];
            double acc = 0.0;
            for (size_t k = 0; k < band.w.size(); ++k) acc += band.w[k] * src[band.first + static_cast<int>(k)];
            dst[J] = acc;
        }
    }
    return out;
}

Image DegradationOperator::adjoint(const Image& lo) const {
    if (lo.rows != lo_rows_ || lo.cols != lo_cols_)
        throw dimension_error("degradation adjoint: input does not match lo dims");
    Image tmp(lo_rows_, hi_cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int I = 0; I < lo_rows_; ++I) {
        const double* src = lo.data.data() + static_cast<size_t>(I) * lo_cols_;
        double* dst = tmp.data.data() + static_cast<size_t>(I) * hi_cols_;
        for (int j = 0; j < hi_cols_; ++j) {
            const Band& band = col_bands_rev_[static_cast<size_t>(j)];
            double acc = 0.0;
            for (size_t k = 0; k < band.w.size(); ++k) acc += band.w[k] * src[band.first + static_cast<int>(k)];
            dst[j] = acc;
        }
    }
    Image out(hi_rows_, hi_cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < hi_rows_; ++i) {
        const Band& band = row_bands_rev_[static_cast<size_t>(i)];
        double* dst = out.data.data() + static_cast<size_t>(i) * hi_cols_;
        std::fill(dst, dst + hi_cols_, 0.0);
        for (size_t k = 0; k < band.w.size(); ++k) {
            const double wk = band.w[k];
            const double* src = tmp.data.data() + (static_cast<size_t>(band.first) + k) * hi_cols_;
            for (int j = 0; j < hi_cols_; ++j) dst[j] += wk * src[j];
        }
    }
    return out;
}

} // namespace dichromat
