#pragma once

#include "dichromat/degradation.hpp"
#include "dichromat/image.hpp"

namespace dichromat::ref {

// Plain serial implementations of the hot kernels, written as direct
// double loops over the definitions. They exist to pin down the OpenMP
// kernels in tests and to serve as the baseline in kernel_bench; nothing
// in the production path calls them.

GradientField gradient(const Image& img);
Image gradient_adjoint(const GradientField& g);

/// Direct 2D footprint sum (no separable passes).
Image degrade_apply(const DegradationOperator& op, const Image& hi);
Image degrade_adjoint(const DegradationOperator& op, const Image& lo);

Image resample_bilinear(const Image& img, int out_rows, int out_cols);

double weighted_gradient_sumsq(const GradientField& g, const Image& w);

} // namespace dichromat::ref
