#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "analog/errors.hpp"
#include "analog/qm_scatter.hpp"
#include "oracles/frozen.hpp"

using namespace analog;
using namespace analog::qm;

namespace {

const double eV = constants().eV;
const double me = constants().m_e;

// Independent reference: solve the four matching conditions at z = 0 and
// z = L as a dense linear system.
std::pair<Complex, Complex> matching_solve(double vb, double width, double e, double mass = me) {
  const double hbar = constants().hbar;
  const double k = std::sqrt(2.0 * mass * e) / hbar;
  const Complex q = std::sqrt(Complex(2.0 * mass * (e - vb))) / hbar;
  const Complex eq = std::exp(kI * q * width), emq = std::exp(-kI * q * width), ek = std::exp(kI * k * width);
  // Derivative rows are divided by k so all rows have unit scale.
  const Complex p = q / k;
  Eigen::Matrix4cd m;
  m << 1.0, -1.0, -1.0, 0.0,
      -kI, -kI * p, kI * p, 0.0,
      0.0, eq, emq, -ek,
      0.0, kI * p * eq, -kI * p * emq, -kI * ek;
  Eigen::Vector4cd rhs(-1.0, -kI, 0.0, 0.0);
  const Eigen::Vector4cd x = m.fullPivLu().solve(rhs);
  return {x(0), x(3)};
}

void check_close(Complex got, Complex want, double tol) {
  INFO("got " << got.real() << "+" << got.imag() << "i, want " << want.real() << "+" << want.imag() << "i");
  CHECK(std::abs(got - want) <= tol * std::max(1.0, std::abs(want)));
}

}  // namespace

TEST_CASE("wavenumbers classify the regime") {
  const auto above = wavenumbers(2.0 * eV, {1.0 * eV, 1e-9});
  CHECK(above.q.regime == Regime::above);
  CHECK(above.q.value.imag() == 0.0);
  const auto below = wavenumbers(1.0 * eV, {2.0 * eV, 1e-9});
  CHECK(below.q.regime == Regime::below);
  CHECK(below.q.value.real() == 0.0);
  CHECK(below.q.value.imag() > 0.0);
  const auto degenerate = wavenumbers(1.0 * eV, {1.0 * eV, 1e-9});
  CHECK(degenerate.q.regime == Regime::degenerate);
  CHECK_THROWS_AS(wavenumbers(0.0, {1.0 * eV, 1e-9}), Error);
}

TEST_CASE("closed form matches the mpmath references") {
  struct Case {
    double vb, width, e;
    Complex r, t;
  };
  const Case cases[] = {
      {1.0, 1e-9, 2.0, oracle::qm_above_r, oracle::qm_above_t},
      {5.0, 1e-9, 2.5, oracle::qm_below_r, oracle::qm_below_t},
      {-3.0, 2e-9, 0.7, oracle::qm_well_r, oracle::qm_well_t},
      {1.0, 1e-9, 1.0 + 1e-7, oracle::qm_near_degenerate_r, oracle::qm_near_degenerate_t},
  };
  for (const auto& c : cases) {
    const auto res = rt_rect({c.vb * eV, c.width}, c.e * eV);
    check_close(res.r, c.r, 1e-12);
    check_close(res.t, c.t, 1e-12);
  }
}

TEST_CASE("deep tunnelling keeps relative accuracy in t") {
  const auto res = rt_rect({10.0 * eV, 5e-9}, 1.0 * eV);
  CHECK(std::abs(res.t - oracle::qm_deep_t) / std::abs(oracle::qm_deep_t) < 1e-12);
  check_close(res.r, oracle::qm_deep_r, 1e-12);
}

TEST_CASE("closed form agrees with a direct matching solve") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> height(-5.0, 5.0), energy(0.05, 5.0), width(0.1e-9, 2e-9);
  for (int i = 0; i < 500; ++i) {
    const double vb = height(rng) * eV, e = energy(rng) * eV, w = width(rng);
    if (std::abs(e - vb) < 1e-3 * eV) continue;
    const auto [r, t] = matching_solve(vb, w, e);
    const auto res = rt_rect({vb, w}, e);
    check_close(res.r, r, 1e-9);
    check_close(res.t, t, 1e-9);
  }
}

TEST_CASE("transfer matrix reproduces r and t and has unit determinant") {
  const QmBarrierSpec spec{2.0 * eV, 0.8e-9};
  for (double e : {0.5, 1.9, 2.0, 2.1, 4.0}) {
    const auto m = transfer_matrix_rect(spec, e * eV);
    // At 0.5 eV rho L = 5 and |m11|^2 ~ 1e4, so rounding alone moves det by ~1e-12.
    if (e > 1.0) CHECK(std::abs(m.det() - 1.0) < 1e-12);
    CHECK(std::abs(m.det() - 1.0) < 1e-15 * std::norm(m.m11) + 1e-15);
    CHECK(std::abs(m.m22 - std::conj(m.m11)) <= 1e-14 * std::abs(m.m11));
    CHECK(std::abs(m.m21 - std::conj(m.m12)) <= 1e-14 * std::abs(m.m11));
    const auto a = rt_from_matrix(m);
    const auto b = rt_rect(spec, e * eV);
    check_close(a.r, b.r, 1e-12);
    check_close(a.t, b.t, 1e-12);
  }
}

TEST_CASE("shifting a barrier changes only the phase of r") {
  const QmBarrierSpec spec{1.5 * eV, 1e-9};
  const double e = 1.0 * eV;
  const double k = free_wavenumber(e, me);
  const double z0 = 0.37e-9;
  const auto base = rt_from_matrix(transfer_matrix_rect(spec, e));
  const auto moved = rt_from_matrix(transfer_matrix_rect(spec, e, z0));
  check_close(moved.r, base.r * std::exp(2.0 * kI * k * z0), 1e-12);
  check_close(moved.t, base.t, 1e-12);
}

TEST_CASE("exactly degenerate energy uses the series path") {
  const auto res = rt_rect({1.0 * eV, 1e-9}, 1.0 * eV);
  CHECK(std::abs(res.T - oracle::qm_degenerate_T) < 1e-10);
  CHECK(std::abs(res.R + res.T - 1.0) < 1e-12);
}

TEST_CASE("continuity across E = Vb") {
  const QmBarrierSpec spec{1.0 * eV, 1e-9};
  const auto mid = rt_rect(spec, 1.0 * eV);
  for (double off : {-1e-9, 1e-9}) {
    const auto side = rt_rect(spec, (1.0 + off) * eV);
    CHECK(std::abs(side.r - mid.r) < 1e-5);
    CHECK(std::abs(side.t - mid.t) < 1e-5);
  }
}

TEST_CASE("delta barrier matches the matching-condition reference") {
  const double e = 1.0 * eV;
  const double k = free_wavenumber(e, me);
  const auto res = rt_delta(DeltaBarrierSpec::from_wavenumber(1e-28, k, me), k);
  check_close(res.r, oracle::delta_r, 1e-13);
  check_close(res.t, oracle::delta_t, 1e-13);
  CHECK(std::abs(res.R + res.T - 1.0) < 1e-14);
}

TEST_CASE("delta limit schedule converges at first order") {
  const double e = 1.0 * eV;
  const double area = 1e-28;
  std::vector<double> heights{1e2 * eV, 1e3 * eV, 1e4 * eV, 2e4 * eV};
  const auto rows = delta_limit_schedule(e, area, heights);
  REQUIRE(rows.size() == heights.size());
  for (const auto& row : rows) CHECK(row.width == doctest::Approx(area / row.height));
  const double err3 = std::abs(rows[2].rect.T - rows[2].delta.T) / rows[2].delta.T;
  const double err4 = std::abs(rows[3].rect.T - rows[3].delta.T) / rows[3].delta.T;
  CHECK(err3 < 0.01);
  CHECK(err3 / err4 == doctest::Approx(2.0).epsilon(0.2));
  CHECK_THROWS_AS(delta_limit_schedule(e, area, std::vector<double>{0.5 * eV}), Error);
}

TEST_CASE("cascade of two halves equals the whole barrier") {
  const double e = 0.8 * eV;
  const QmBarrierSpec whole{1.2 * eV, 1.4e-9};
  const std::vector<TransferMatrix2> halves{transfer_matrix_rect({1.2 * eV, 0.7e-9}, e, 0.0),
                                            transfer_matrix_rect({1.2 * eV, 0.7e-9}, e, 0.7e-9)};
  CHECK(max_abs_diff(cascade(halves), transfer_matrix_rect(whole, e)) < 1e-12);

  const std::vector<PotentialSegment> segs{{1.2 * eV, 0.7e-9}, {1.2 * eV, 0.7e-9}};
  const auto a = rt_piecewise(segs, e);
  const auto b = rt_rect(whole, e);
  check_close(a.r, b.r, 1e-12);
  check_close(a.t, b.t, 1e-12);
}

TEST_CASE("piecewise steps conserve flux") {
  const std::vector<PotentialSegment> segs{{0.5 * eV, 0.3e-9}, {-0.4 * eV, 0.9e-9}, {2.0 * eV, 0.2e-9}};
  const auto res = rt_piecewise(segs, 1.0 * eV);
  CHECK(std::abs(res.R + res.T - 1.0) < 1e-12);
}

TEST_CASE("invalid inputs raise typed errors") {
  CHECK_THROWS_AS(rt_rect({1.0 * eV, 1e-9}, -1.0), Error);
  CHECK_THROWS_AS(rt_closed_form(0.0, 1.0, 1e-9), Error);
  CHECK_THROWS_AS(cascade({}), Error);
}
