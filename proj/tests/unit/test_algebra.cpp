#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/algebra.hpp"
#include "support/sampling.hpp"

using gh::Complex;
using gh::Params;
using namespace gh::algebra;
using testing_support::Rng;

namespace {

const OperatorElement kZero{};
const ODEOperator kZeroOde{};

OperatorElement random_element(Rng& rng) {
  return {rng.gaussian_integer(8), rng.gaussian_integer(8), rng.gaussian_integer(8),
          rng.gaussian_integer(8)};
}

}  // namespace

TEST_CASE("from_params") {
  CHECK(from_params({}) == OperatorElement{0.0, 0.0, 0.0, 1.0});
  CHECK(from_params({0.0, 0.0, 2.5}) == OperatorElement{-2.5, 0.0, 0.0, 1.0});
  CHECK(from_params({1.0, 2.0, 3.0}) == OperatorElement{-3.0, -1.0, -2.0, 1.0});
}

TEST_CASE("bracket") {
  const OperatorElement ddbar{0.0, 0.0, 0.0, 1.0};
  const OperatorElement zd{0.0, 1.0, 0.0, 0.0};
  const OperatorElement zbdb{0.0, 0.0, 1.0, 0.0};
  CHECK(bracket(ddbar, zd) == ddbar);
  CHECK(bracket(ddbar, zbdb) == ddbar);
  CHECK(bracket(zd, ddbar) == -1.0 * ddbar);
  CHECK(bracket(zd, zbdb) == kZero);
  CHECK(bracket(OperatorElement{0.0, 1.0, -1.0, 0.0}, ddbar) == kZero);

  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng);
    const auto y = random_element(rng);
    const auto z = random_element(rng);
    const Complex alpha = rng.gaussian_integer(5);
    CHECK(bracket(x, x) == kZero);
    CHECK(bracket(x, y) + bracket(y, x) == kZero);
    CHECK(bracket(alpha * x + y, z) == alpha * bracket(x, z) + bracket(y, z));
    CHECK(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)) ==
          kZero);
  }
}

TEST_CASE("lambda_map") {
  const Params p{{0.5, -1.0}, {2.0, 0.25}, {-1.5, 0.5}};
  for (int m : {0, 1, 4, 11}) {
    const ODEOperator t = lambda_map(from_params(p), m);
    CHECK(t == ODEOperator{1.0, m + 1.0, -(p.s + p.t), -(p.r + p.s * static_cast<double>(m))});
  }
  CHECK(lambda_map(OperatorElement{1.0, 0.0, 0.0, 0.0}, 3) == ODEOperator{0.0, 0.0, 0.0, 1.0});
  for (int m : {0, 1, 5, 17}) CHECK(lambda_map(kernel_basis(m), m) == kZeroOde);
  for (int m : {0, 1, 5, 17}) {
    for (int mp : {0, 2, 6, 30}) {
      if (mp == m) continue;
      const ODEOperator t = lambda_map(kernel_basis(m), mp);
      CHECK(t.q0 == Complex{static_cast<double>(mp - m)});
    }
  }
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng);
    const auto y = random_element(rng);
    const Complex alpha = rng.gaussian_integer(5);
    const Complex beta = rng.gaussian_integer(5);
    const int m = rng.integer(0, 30);
    CHECK(lambda_map(alpha * x + beta * y, m) ==
          alpha * lambda_map(x, m) + beta * lambda_map(y, m));
  }
  CHECK_THROWS_AS(lambda_map(kZero, -1), gh::Error);
}

TEST_CASE("lambda_map_signed swaps z d and z-bar d-bar") {
  const OperatorElement d{1.0, 2.0, 3.0, 4.0};
  CHECK(lambda_map_signed(d, 5) == lambda_map(d, 5));
  CHECK(lambda_map_signed(d, -5) == lambda_map(OperatorElement{1.0, 3.0, 2.0, 4.0}, 5));
}

TEST_CASE("kernel_basis and equivalent") {
  CHECK(kernel_basis(0) == OperatorElement{0.0, 1.0, -1.0, 0.0});
  CHECK(kernel_basis(7) == OperatorElement{-7.0, 1.0, -1.0, 0.0});
  CHECK_THROWS_AS(kernel_basis(-1), gh::Error);

  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto v = random_element(rng);
    const int m = rng.integer(0, 20);
    const auto same = equivalent(v, v, m);
    CHECK(same.equivalent);
    CHECK(same.mu == Complex{});
    const auto shifted = equivalent(v + 2.0 * kernel_basis(m), v, m);
    CHECK(shifted.equivalent);
    CHECK(std::abs(shifted.mu - 2.0) < 1e-14);

    const Complex mu = rng.gaussian_integer(4);
    const Params p{rng.gaussian_integer(3), rng.gaussian_integer(3), rng.gaussian_integer(3)};
    const Params q{p.s + mu, p.t - mu, p.r - mu * static_cast<double>(m)};
    CHECK(equivalent(from_params(p), from_params(q), m).equivalent);

    // Anything killed by lambda_map is a multiple of the kernel basis.
    const OperatorElement k = mu * kernel_basis(m);
    CHECK(lambda_map(k, m) == kZeroOde);
    CHECK(equivalent(k, kZero, m).equivalent);
  }
  CHECK_FALSE(equivalent(kernel_basis(3), kZero, 4).equivalent);
  CHECK_FALSE(equivalent({0.0, 0.0, 0.0, 1.0}, kZero, 0).equivalent);
}

TEST_CASE("rescale_params") {
  const Params p{{1.0, 1.0}, {-2.0, 0.5}, {0.0, 3.0}};
  const Params same = rescale_params(p, 1.0);
  CHECK(same.s == p.s);
  CHECK(same.t == p.t);
  CHECK(same.r == p.r);
  const Params four = rescale_params({1.0, 1.0, 1.0}, 2.0);
  CHECK(four.s == Complex{4.0});
  CHECK(four.t == Complex{4.0});
  CHECK(four.r == Complex{4.0});
  CHECK_THROWS_AS(rescale_params(p, 0.0), gh::Error);
}
