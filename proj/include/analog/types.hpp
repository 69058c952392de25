#pragma once

#include <array>
#include <complex>
#include <span>

namespace analog {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Complex reflection/transmission pair with the derived probabilities.
struct ScatterResult {
  Complex r;
  Complex t;
  double R = 0.0;  // |r|^2
  double T = 0.0;  // |t|^2

  static ScatterResult make(Complex r, Complex t) { return {r, t, std::norm(r), std::norm(t)}; }
};

/// 2x2 complex transfer matrix, row-major.
struct TransferMatrix2 {
  Complex m11{1.0};
  Complex m12{0.0};
  Complex m21{0.0};
  Complex m22{1.0};

  static TransferMatrix2 identity() { return {}; }

  Complex det() const { return m11 * m22 - m12 * m21; }

  friend TransferMatrix2 operator*(const TransferMatrix2& a, const TransferMatrix2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
};

/// Largest entrywise |a - b|.
double max_abs_diff(const TransferMatrix2& a, const TransferMatrix2& b);

}  // namespace analog
