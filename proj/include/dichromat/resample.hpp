#pragma once

#include "dichromat/image.hpp"

namespace dichromat {

enum class ResampleMethod { nearest, bilinear, sinc_zerofill };

/// Classical interpolation to out_dims. Pixel centers of both grids are
/// aligned at (i + 0.5)/n in normalized coordinates; nearest and bilinear
/// replicate at the borders. sinc_zerofill goes through the centered DFT
/// spectrum: symmetric zero-fill (or crop), even-length Nyquist bins split
/// between their two symmetric positions, scaled so the mean is preserved.
Image resample(const Image& img, int out_rows, int out_cols, ResampleMethod method);

/// Regularizer weight map: metabolic image bilinearly upsampled to the
/// anatomical grid and clamped below at zero.
Image weight_map(const Image& metabolic, int anat_rows, int anat_cols);

} // namespace dichromat
