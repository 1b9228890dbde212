#pragma once

#include "impulse/image.hpp"

namespace impulse {

struct QualityScore {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity exactly when mse is 0
};

/// Mean squared per-pixel difference, accumulated in integer arithmetic
/// and divided once. Throws std::invalid_argument on dimension mismatch.
double mse(const Image& reference, const Image& candidate);

/// 10 * log10(255^2 / MSE); a perfect reconstruction scores +infinity.
QualityScore psnr(const Image& reference, const Image& candidate);

}  // namespace impulse
