#include "dichromat/reference.hpp"

#include <algorithm>
#include <cmath>

namespace dichromat::ref {

GradientField gradient(const Image& img) {
    GradientField g{Image(img.rows, img.cols), Image(img.rows, img.cols)};
    for (int i = 0; i < img.rows; ++i) {
        for (int j = 0; j < img.cols; ++j) {
            g.horiz.at(i, j) = (j + 1 < img.cols) ? img.at(i, j + 1) - img.at(i, j) : 0.0;
            g.vert.at(i, j) = (i + 1 < img.rows) ? img.at(i + 1, j) - img.at(i, j) : 0.0;
        }
    }
    return g;
}

Image gradient_adjoint(const GradientField& g) {
    const int rows = g.rows(), cols = g.cols();
    Image out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) {
                out.at(i, j) -= g.horiz.at(i, j);
                out.at(i, j + 1) += g.horiz.at(i, j);
            }
            if (i + 1 < rows) {
                out.at(i, j) -= g.vert.at(i, j);
                out.at(i + 1, j) += g.vert.at(i, j);
            }
        }
    }
    return out;
}

Image degrade_apply(const DegradationOperator& op, const Image& hi) {
    Image out(op.lo_rows(), op.lo_cols());
    const auto& rb = op.row_bands();
    const auto& cb = op.col_bands();
    for (int I = 0; I < op.lo_rows(); ++I) {
        for (int J = 0; J < op.lo_cols(); ++J) {
            double acc = 0.0;
            for (size_t a = 0; a < rb[I].w.size(); ++a)
                for (size_t b = 0; b < cb[J].w.size(); ++b)
                    acc += rb[I].w[a] * cb[J].w[b] *
                           hi.at(rb[I].first + static_cast<int>(a), cb[J].first + static_cast<int>(b));
            out.at(I, J) = acc;
        }
    }
    return out;
}

Image degrade_adjoint(const DegradationOperator& op, const Image& lo) {
    Image out(op.hi_rows(), op.hi_cols());
    const auto& rb = op.row_bands();
    const auto& cb = op.col_bands();
    for (int I = 0; I < op.lo_rows(); ++I) {
        for (int J = 0; J < op.lo_cols(); ++J) {
            const double v = lo.at(I, J);
            for (size_t a = 0; a < rb[I].w.size(); ++a)
                for (size_t b = 0; b < cb[J].w.size(); ++b)
                    out.at(rb[I].first + static_cast<int>(a), cb[J].first + static_cast<int>(b)) +=
                        rb[I].w[a] * cb[J].w[b] * v;
        }
    }
    return out;
}

Image resample_bilinear(const Image& img, int out_rows, int out_cols) {
    Image out(out_rows, out_cols);
    for (int i = 0; i < out_rows; ++i) {
        const double y = (i + 0.5) * static_cast<double>(img.rows) / out_rows - 0.5;
        const int i0 = static_cast<int>(std::floor(y));
        const double fy = y - i0;
        const int r0 = std::clamp(i0, 0, img.rows - 1);
        const int r1 = std::clamp(i0 + 1, 0, img.rows - 1);
        for (int j = 0; j < out_cols; ++j) {
            const double x = (j + 0.5) * static_cast<double>(img.cols) / out_cols - 0.5;
            const int j0 = static_cast<int>(std::floor(x));
            const double fx = x - j0;
            const int c0 = std::clamp(j0, 0, img.cols - 1);
            const int c1 = std::clamp(j0 + 1, 0, img.cols - 1);
            out.at(i, j) = img.at(r0, c0) * (1.0 - fy) * (1.0 - fx) + img.at(r0, c1) * (1.0 - fy) * fx +
                           img.at(r1, c0) * fy * (1.0 - fx) + img.at(r1, c1) * fy * fx;
        }
    }
    return out;
}

double weighted_gradient_sumsq(const GradientField& g, const Image& w) {
    double s = 0.0;
    for (int i = 0; i < w.rows; ++i)
        for (int j = 0; j < w.cols; ++j) {
            const double h = g.horiz.at(i, j), v = g.vert.at(i, j);
            s += w.at(i, j) * (h * h + v * v);
        }
    return s;
}

} // namespace dichromat::ref
