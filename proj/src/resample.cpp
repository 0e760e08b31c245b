#include "dichromat/resample.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "dichromat/errors.hpp"

namespace dichromat {
namespace {

using cd = std::complex<double>;

int clampi(int v, int lo, int hi) { return std::clamp(v, lo, hi); }

Image resample_nearest(const Image& img, int out_rows, int out_cols) {
    Image out(out_rows, out_cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < out_rows; ++i) {
        const double y = (i + 0.5) * static_cast<double>(img.rows) / out_rows - 0.5;
        const int r = clampi(static_cast<int>(std::floor(y + 0.5)), 0, img.rows - 1);
        for (int j = 0; j < out_cols; ++j) {
            const double x = (j + 0.5) * static_cast<double>(img.cols) / out_cols - 0.5;
            const int c = clampi(static_cast<int>(std::floor(x + 0.5)), 0, img.cols - 1);
            out.at(i, j) = img.at(r, c);
        }
    }
    return out;
}

Image resample_bilinear(const Image& img, int out_rows, int out_cols) {
    Image out(out_rows, out_cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < out_rows; ++i) {
        const double y = (i + 0.5) * static_cast<double>(img.rows) / out_rows - 0.5;
        const int i0 = static_cast<int>(std::floor(y));
        const double fy = y - i0;
        const int r0 = clampi(i0, 0, img.rows - 1);
        const int r1 = clampi(i0 + 1, 0, img.rows - 1);
        for (int j = 0; j < out_cols; ++j) {
            const double x = (j + 0.5) * static_cast<double>(img.cols) / out_cols - 0.5;
            const int j0 = static_cast<int>(std::floor(x));
            const double fx = x - j0;
            const int c0 = clampi(j0, 0, img.cols - 1);
            const int c1 = clampi(j0 + 1, 0, img.cols - 1);
            out.at(i, j) = img.at(r0, c0) * (1.0 - fy) * (1.0 - fx) + img.at(r0, c1) * (1.0 - fy) * fx +
                           img.at(r1, c0) * fy * (1.0 - fx) + img.at(r1, c1) * fy * fx;
        }
    }
    return out;
}

// Naive O(N^2) DFT along one axis; fine for the image sizes this library
// targets and keeps the baseline dependency-free.
void dft_axis(std::vector<cd>& a, int rows, int cols, bool along_cols, bool inverse) {
    const int n = along_cols ? cols : rows;
    const int m = along_cols ? rows : cols;
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cd> tw(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double ang = sign * 2.0 * std::numbers::pi * k / n;
        tw[static_cast<size_t>(k)] = cd(std::cos(ang), std::sin(ang));
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < m; ++t) {
        std::vector<cd> line(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s)
            line[static_cast<size_t>(s)] = along_cols ? a[static_cast<size_t>(t) * cols + s]
                                                      : a[static_cast<size_t>(s) * cols + t];
        std::vector<cd> res(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            cd acc(0.0, 0.0);
            long long idx = 0;
            for (int s = 0; s < n; ++s) {
                acc += line[static_cast<size_t>(s)] * tw[static_cast<size_t>(idx)];
                idx += k;
                if (idx >= n) idx -= static_cast<long long>(n) * ((idx) / n);
            }
            res[static_cast<size_t>(k)] = acc;
        }
        for (int s = 0; s < n; ++s) {
            if (along_cols)
                a[static_cast<size_t>(t) * cols + s] = res[static_cast<size_t>(s)];
            else
                a[static_cast<size_t>(s) * cols + t] = res[static_cast<size_t>(s)];
        }
    }
}

// Spectrum embedding for one dimension, centered frequencies. Entries map a
// source DFT bin onto an output bin with a factor; even-length Nyquist bins
// are split (upsampling) or folded (downsampling).
struct FreqMap {
    int src, dst;
    double factor;
};

std::vector<FreqMap> embed_axis(int n, int L) {
    auto wrap = [](int q, int len) { return q < 0 ? q + len : q; }; // centered freq -> bin index
    std::vector<FreqMap> maps;
    const int qlo = -(n / 2), qhi = (n - 1) / 2; // source centered range
    for (int q = qlo; q <= qhi; ++q) {
        const int src = wrap(q, n);
        if (L >= n) {
            if (n % 2 == 0 && q == qlo && L > n) {
                maps.push_back({src, wrap(-q, L), 0.5}); // +Nyquist copy
                maps.push_back({src, wrap(q, L), 0.5});
            } else {
                maps.push_back({src, wrap(q, L), 1.0});
            }
        } else {
            const int lo = -(L / 2), hi = (L - 1) / 2;
            if (q < lo || q > hi) {
                if (L % 2 == 0 && q == -lo) maps.push_back({src, wrap(lo, L), 1.0}); // fold +Nyquist
                continue;
            }
            maps.push_back({src, wrap(q, L), 1.0});
        }
    }
    return maps;
}

Image resample_sinc(const Image& img, int out_rows, int out_cols) {
    const int nr = img.rows, nc = img.cols;
    std::vector<cd> spec(img.data.begin(), img.data.end());
    dft_axis(spec, nr, nc, true, false);
    dft_axis(spec, nr, nc, false, false);

    std::vector<cd> out_spec(static_cast<size_t>(out_rows) * out_cols, cd(0.0, 0.0));
    const auto rmap = embed_axis(nr, out_rows);
    const auto cmap = embed_axis(nc, out_cols);
    for (const auto& rm : rmap)
        for (const auto& cm : cmap)
            out_spec[static_cast<size_t>(rm.dst) * out_cols + cm.dst] +=
                rm.factor * cm.factor * spec[static_cast<size_t>(rm.src) * nc + cm.src];

    dft_axis(out_spec, out_rows, out_cols, true, true);
    dft_axis(out_spec, out_rows, out_cols, false, true);

    // Inverse carried no normalization; 1/(nr*nc) preserves the zero-frequency
    // term, i.e. mean(out) = mean(in).
    const double scale = 1.0 / (static_cast<double>(nr) * nc);
    Image out(out_rows, out_cols);
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = out_spec[i].real() * scale;
    return out;
}

} // namespace

Image resample(const Image& img, int out_rows, int out_cols, ResampleMethod method) {
    if (out_rows <= 0 || out_cols <= 0) throw dimension_error("resample: output dims must be positive");
    switch (method) {
        case ResampleMethod::nearest: return resample_nearest(img, out_rows, out_cols);
        case ResampleMethod::bilinear: return resample_bilinear(img, out_rows, out_cols);
        case ResampleMethod::sinc_zerofill: return resample_sinc(img, out_rows, out_cols);
    }
    throw value_error("resample: unknown method");
}

Image weight_map(const Image& metabolic, int anat_rows, int anat_cols) {
    Image w = resample(metabolic, anat_rows, anat_cols, ResampleMethod::bilinear);
    for (double& v : w.data) v = std::max(v, 0.0);
    return w;
}

} // namespace dichromat
