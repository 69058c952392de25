#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "analog/types.hpp"

namespace analog::detail {

// cos(qL) and sin(qL)/q as functions of q^2, so callers never divide by q.
// Below about |qL| = 1e-4 the sinc uses its Taylor series; with the quartic
// term the truncation error there is far below double precision.
// Once |Im(qL)| is large the hyperbolic functions overflow, so tan(qL)/q and
// sec(qL) are returned instead (scaled = true).
struct CosSinc {
  Complex cos;
  Complex sinc;
  Complex tanc;
  Complex sec;
  bool scaled = false;
};

inline constexpr double kSeriesThreshold = 1e-4;
inline constexpr double kScaleThreshold = 20.0;

inline CosSinc cos_sinc(Complex q_squared, double length, bool allow_scaled = true) {
  CosSinc out;
  Complex q = std::sqrt(q_squared);
  if (q.imag() < 0.0) q = -q;
  const Complex x = q * length;

  if (std::abs(x) < kSeriesThreshold) {
    const Complex x2 = q_squared * length * length;
    out.cos = std::cos(x);
    out.sinc = length * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
    return out;
  }
  if (!allow_scaled || std::abs(x.imag()) <= kScaleThreshold) {
    out.cos = std::cos(x);
    out.sinc = std::sin(x) / q;
    return out;
  }
  // Im(x) > 0 after the sign fix above; w = e^{2ix} is tiny.
  const Complex w = std::exp(2.0 * kI * x);
  out.scaled = true;
  out.sec = 2.0 * std::exp(kI * x) / (1.0 + w);
  out.tanc = (w - 1.0) / (kI * (1.0 + w)) / q;
  return out;
}

// cos(x) and sin(x) for a complex argument, or tan(x) and sec(x) once
// |Im(x)| is large enough for cos/sin to overflow.
struct CosSin {
  Complex cos;
  Complex sin;
  Complex tan;
  Complex sec;
  bool scaled = false;
};

inline CosSin cos_sin(Complex x, bool allow_scaled = true) {
  CosSin out;
  if (!allow_scaled || std::abs(x.imag()) <= kScaleThreshold) {
    out.cos = std::cos(x);
    out.sin = std::sin(x);
    return out;
  }
  // tan is odd and sec even, so evaluate at y with Im(y) > 0.
  const bool flip = x.imag() < 0.0;
  const Complex y = flip ? -x : x;
  const Complex w = std::exp(2.0 * kI * y);
  out.scaled = true;
  out.sec = 2.0 * std::exp(kI * y) / (1.0 + w);
  out.tan = (w - 1.0) / (kI * (1.0 + w));
  if (flip) out.tan = -out.tan;
  return out;
}

// sin(pi x) and cos(pi x) with exact argument reduction, so that x = 1/2
// gives exactly 1 and 0.
inline double sinpi(double x) {
  const double n = std::nearbyint(2.0 * x);
  const double r = x - 0.5 * n;  // exact, |r| <= 1/4
  const double s = std::sin(std::numbers::pi * r);
  const double c = std::cos(std::numbers::pi * r);
  switch (static_cast<long long>(std::fmod(std::fmod(n, 4.0) + 4.0, 4.0))) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

inline double cospi(double x) {
  const double n = std::nearbyint(2.0 * x);
  const double r = x - 0.5 * n;
  const double s = std::sin(std::numbers::pi * r);
  const double c = std::cos(std::numbers::pi * r);
  switch (static_cast<long long>(std::fmod(std::fmod(n, 4.0) + 4.0, 4.0))) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}

}  // namespace analog::detail
