#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

namespace gcover {

using Cx = std::complex<double>;

/// Single knob for every approximate equality / rank decision in the library,
/// plus the seed used by the randomized routines.
struct Tolerance {
  double eps = 1e-9;
  std::uint64_t seed = 0;

  bool zero(double x, double scale = 1.0) const {
    return std::abs(x) <= eps * std::max(1.0, scale);
  }
  bool zero(Cx z, double scale = 1.0) const { return zero(std::abs(z), scale); }
  bool close(double a, double b, double scale = 1.0) const { return zero(a - b, scale); }
  bool close(Cx a, Cx b, double scale = 1.0) const { return zero(std::abs(a - b), scale); }

  Tolerance with_seed(std::uint64_t s) const { return Tolerance{eps, s}; }
};

}  // namespace gcover
