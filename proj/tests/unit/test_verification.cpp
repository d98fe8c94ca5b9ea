#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/algebra.hpp"
#include "core/series.hpp"
#include "core/solutions.hpp"
#include "core/verification.hpp"
#include "support/sampling.hpp"

using gh::Complex;
using gh::EvalConfig;
using gh::ErrorCode;
using gh::Params;
using namespace gh::verification;
using testing_support::Rng;

namespace {

const EvalConfig cfg{};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const gh::Error& e) {
    return e.code();
  }
  FAIL("expected gh::Error");
  return ErrorCode::InvalidArgument;
}

double slope(double h1, double e1, double h2, double e2) {
  return std::log(e1 / e2) / std::log(h1 / h2);
}

}  // namespace

TEST_CASE("GridSpec") {
  GridSpec g{0.8, 41, 0.0};
  const auto pts = g.points(1e-3);
  CHECK(!pts.empty());
  for (const Complex z : pts) CHECK(std::abs(z) <= 0.8 + 1e-12);
  GridSpec holed{0.8, 41, -1.0};
  for (const Complex z : holed.points(0.05)) CHECK(std::abs(z) >= 0.1);
  CHECK(holed.points(0.05).size() < pts.size());
  CHECK(code_of([] { GridSpec{1.0, 5, 0.0}.validate(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { GridSpec{0.5, 0, 0.0}.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("wirtinger_fd") {
  const Complex z{0.3, -0.2};
  auto w = wirtinger_fd([](Complex v) { return v; }, z, 1e-3);
  CHECK(std::abs(w.d - 1.0) < 1e-12);
  CHECK(std::abs(w.dbar) < 1e-12);
  CHECK(std::abs(w.ddbar) < 1e-9);
  w = wirtinger_fd([](Complex v) { return Complex{std::norm(v)}; }, z, 1e-3);
  CHECK(std::abs(w.d - std::conj(z)) < 1e-12);
  CHECK(std::abs(w.dbar - z) < 1e-12);
  CHECK(std::abs(w.ddbar - 1.0) < 1e-9);

  const auto e = [](Complex v) { return std::exp(v + std::conj(v)); };
  const Complex want = e(z);
  double prev = 0.0;
  for (double h : {1e-2, 5e-3}) {
    const auto r = wirtinger_fd(e, z, h);
    const double err = std::max({std::abs(r.d - want), std::abs(r.dbar - want),
                                 std::abs(r.ddbar - want)});
    CHECK(err < 2.0 * h * h);
    if (prev > 0.0) CHECK(prev / err > 3.5);
    prev = err;
  }
  CHECK_THROWS_AS(wirtinger_fd(e, z, 0.0), gh::Error);
}

TEST_CASE("residual_M") {
  const GridSpec grid{0.8, 21, -1.0};
  auto rep = residual_M({}, [](Complex z) { return Complex{z.real()}; }, grid, 1e-3);
  CHECK(rep.max_abs < 1e-12);
  CHECK(rep.points_checked > 0);
  CHECK(rep.fd_step == 1e-3);

  const GridSpec with_origin{0.8, 21, 0.0};
  rep = residual_M({}, [](Complex z) { return Complex{std::norm(z)}; }, with_origin, 1e-3);
  CHECK(std::abs(rep.max_abs - 1.0) < 1e-6);

  Rng rng(41);
  for (int i = 0; i < 5; ++i) {
    const Params p{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0)};
    const int m = rng.integer(-8, 8);
    const auto u = [&](Complex z) { return gh::solutions::mode_value(p, m, 1.0, z, cfg); };
    const auto coarse = residual_M(p, u, grid, 1e-2);
    const auto fine = residual_M(p, u, grid, 5e-3);
    CAPTURE(m);
    CHECK(slope(1e-2, coarse.max_abs, 5e-3, fine.max_abs) > 1.9);
  }
}

TEST_CASE("rescaled mode solves the rescaled equation") {
  const Params p{{0.4, 0.1}, {-0.2, 0.3}, {0.5, -0.5}};
  const double rho = 0.6;
  const Params q = gh::algebra::rescale_params(p, rho);
  const auto v = [&](Complex z) { return gh::solutions::mode_value(p, 2, 1.0, rho * z, cfg); };
  const GridSpec grid{0.8, 21, -1.0};
  CHECK(residual_M(q, v, grid, 1e-3).max_abs < 1e-5);
  CHECK(residual_M(p, v, grid, 1e-3).max_abs > 1e-2);
}

TEST_CASE("ode_recurrence_residual") {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const Params p{rng.disc(2.0), rng.disc(2.0), rng.disc(2.0)};
    const int m = rng.integer(0, 20);
    const auto coeffs = p_coefficients(p, m, 40);
    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    CHECK(ode_recurrence_residual(p, m, coeffs) < 1e-12 * scale);

    const double alpha = 3.5;
    std::vector<Complex> bumped = coeffs;
    bumped[3] += 0.25;
    std::vector<Complex> scaled = bumped;
    for (auto& c : scaled) c *= alpha;
    CHECK(ode_recurrence_residual(p, m, scaled) ==
          doctest::Approx(alpha * ode_recurrence_residual(p, m, bumped)).epsilon(1e-12));
  }
  const Params p{0.5, 0.0, 1.5};
  const std::vector<Complex> constant{1.0, 0.0, 0.0, 0.0};
  CHECK(ode_recurrence_residual(p, 2, constant) == doctest::Approx(2.5));

  // Theta(m+1, (r+sm) x) when s+t = 0.
  const Params bessel{{0.7, 0.2}, {-0.7, -0.2}, {0.3, 1.0}};
  for (int m : {0, 3, 9}) {
    const Complex a = bessel.r + bessel.s * static_cast<double>(m);
    std::vector<Complex> theta;
    for (int k = 0; k < 30; ++k) {
      theta.push_back(gh::series::poch(a, 0.0, k) /
                      (gh::series::poch(m + 1.0, 1.0, k) * std::tgamma(k + 1.0)));
    }
    CHECK(ode_recurrence_residual(bessel, m, theta) < 1e-12);
  }
  CHECK_THROWS_AS(ode_recurrence_residual(p, 0, {}), gh::Error);
}

TEST_CASE("wronskian") {
  Rng rng(43);
  for (int i = 0; i < 5; ++i) {
    const Params p{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0)};
    const int m = rng.integer(0, 10);
    CHECK(wronskian_check(p, m, 0.5, 1.5, 10000) < 1e-6);
  }
  // s + t = 0, m = 0: weight is x alone.
  CHECK(wronskian_deviation({0.5, -0.5, 1.0}, 0, 0.5, 1.5, 2000) < 1e-10);
  CHECK(wronskian_deviation({0.5, 0.2, 1.0}, 2, 0.5, 1.5, 100, {1.0, 2.0}, {2.0, 4.0}) == 0.0);
  CHECK(code_of([] { wronskian_check({}, 0, 1.0, 0.5, 10); }) == ErrorCode::InvalidArgument);
  // Far too coarse near a stiff left endpoint: refinement does not help.
  CHECK(code_of([] { wronskian_check({}, 30, 1e-3, 1.0, 2); }) == ErrorCode::StepTooCoarse);
}

TEST_CASE("lambda_map agrees with finite differences") {
  Rng rng(44);
  const double h = 1e-3;
  for (int i = 0; i < 10; ++i) {
    const gh::algebra::OperatorElement d{rng.disc(2.0), rng.disc(2.0), rng.disc(2.0),
                                         rng.disc(2.0)};
    const int m = rng.integer(0, 8);
    const std::vector<Complex> f{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0)};
    const auto t = gh::algebra::lambda_map(d, m);
    const auto u = [&](Complex z) { return homogeneous_input(m, f, z); };
    for (int j = 0; j < 5; ++j) {
      Complex z = rng.disc(0.8);
      if (std::abs(z) < 0.1) z += 0.2;
      const Complex want = std::pow(z, m) * apply_ode_to_polynomial(t, f, std::norm(z));
      CHECK(std::abs(apply_operator_fd(d, u, z, h) - want) < 1e-4);
    }
  }
}

TEST_CASE("equivalence_action_check") {
  using gh::algebra::OperatorElement;
  const OperatorElement v{{0.5, 1.0}, {-1.0, 0.25}, {2.0, 0.0}, {1.0, -0.5}};
  const std::vector<Complex> f{1.0, 1.0};
  const GridSpec grid{0.8, 21, -1.0};
  CHECK(equivalence_action_check(v, v, 2, f, grid, 1e-3) == 0.0);

  const OperatorElement w = v + Complex{0.7, -0.3} * gh::algebra::kernel_basis(2);
  const double e1 = equivalence_action_check(v, w, 2, f, grid, 1e-2);
  const double e2 = equivalence_action_check(v, w, 2, f, grid, 5e-3);
  CHECK(e1 < 1e-3);
  CHECK(e2 < e1);

  const OperatorElement far = v + OperatorElement{0.0, 0.0, 0.0, 1.0};
  CHECK(code_of([&] { equivalence_action_check(v, far, 2, f, grid, 1e-3); }) ==
        ErrorCode::NotEquivalent);
  CHECK(action_difference(v, far, 2, f, grid, 1e-3) > 0.1);
}
