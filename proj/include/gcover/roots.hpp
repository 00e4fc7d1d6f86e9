#pragma once

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gcover/errors.hpp"
#include "gcover/tolerance.hpp"

namespace gcover {

/// Exact root of unity exp(2*pi*i*exponent/order), kept in lowest terms so
/// that `order` is the multiplicative order.
struct RootOfUnity {
  long order = 1;
  long exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(long m, long k) : order(m), exponent(((k % m) + m) % m) { reduce(); }

  void reduce() {
    long g = std::gcd(exponent, order);
    if (g == 0) g = order;  // exponent == 0
    if (g > 1) {
      order /= g;
      exponent /= g;
    }
    if (order == 1) exponent = 0;
  }

  bool is_one() const { return order == 1; }

  Cx value() const {
    if (order == 1) return Cx(1.0, 0.0);
    if (order == 2) return Cx(-1.0, 0.0);
    if (order == 4) return exponent == 1 ? Cx(0.0, 1.0) : Cx(0.0, -1.0);
    double th = 2.0 * std::numbers::pi * double(exponent) / double(order);
    return Cx(std::cos(th), std::sin(th));
  }

  RootOfUnity operator*(const RootOfUnity& o) const {
    long m = std::lcm(order, o.order);
    long k = exponent * (m / order) + o.exponent * (m / o.order);
    return RootOfUnity(m, k);
  }
  RootOfUnity inverse() const { return RootOfUnity(order, order - exponent); }
  RootOfUnity pow(long n) const {
    long k = ((exponent * (n % order)) % order + order) % order;
    return RootOfUnity(order, k);
  }
  bool operator==(const RootOfUnity& o) const {
    return order == o.order && exponent == o.exponent;
  }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {
    if (order != o.order) return order < o.order;
    return exponent < o.exponent;
  }
  std::string str() const {
    if (order == 1) return "1";
    return "zeta_" + std::to_string(order) + "^" + std::to_string(exponent);
  }
};

/// Nearest root of unity of order <= max_order, within tol.eps of z.
/// Throws NoSnapError when no candidate is close enough, AmbiguousSnapError
/// when two distinct reduced candidates both qualify.
inline RootOfUnity snap_root_of_unity(Cx z, long max_order, const Tolerance& tol) {
  if (!tol.zero(std::abs(z) - 1.0)) throw NoSnapError("snap_root_of_unity: |z| not close to 1");
  double theta = std::arg(z) / (2.0 * std::numbers::pi);
  if (theta < 0) theta += 1.0;
  bool found = false;
  RootOfUnity best;
  for (long m = 1; m <= max_order; ++m) {
    long k0 = long(std::floor(theta * double(m)));
    for (long k : {k0, k0 + 1}) {
      RootOfUnity cand(m, ((k % m) + m) % m);
      if (std::abs(z - cand.value()) <= tol.eps) {
        if (found && cand != best)
          throw AmbiguousSnapError("snap_root_of_unity: two roots within eps of z");
        best = cand;
        found = true;
      }
    }
  }
  if (!found) throw NoSnapError("snap_root_of_unity: no root of order <= " +
                                std::to_string(max_order) + " within eps");
  return best;
}

/// Snap z to a root of unity whose order divides m exactly.
inline RootOfUnity snap_root_of_order_dividing(Cx z, long m, const Tolerance& tol) {
  if (!tol.zero(std::abs(z) - 1.0)) throw NoSnapError("snap_root_of_order_dividing: |z| not 1");
  double theta = std::arg(z) / (2.0 * std::numbers::pi);
  if (theta < 0) theta += 1.0;
  long k = std::lround(theta * double(m)) % m;
  RootOfUnity cand(m, k);
  if (std::abs(z - cand.value()) > tol.eps * 10)
    throw NoSnapError("snap_root_of_order_dividing: z is not a root of order dividing " +
                      std::to_string(m));
  return cand;
}

}  // namespace gcover
