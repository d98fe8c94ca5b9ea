#include "core/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gh::series {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_nonnegative(int m, const char* what) {
  if (m < 0) {
    std::ostringstream os;
    os << what << " must be nonnegative, got " << m;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

// sup over real k >= K of |a + k b| / |c + k d|.
//
// The square of the ratio is N(k)/D(k) with N, D real quadratics, so the
// supremum on [K, inf) is attained at K, at a stationary point beyond K, or
// in the limit k -> inf. Infinite when D has a real zero at or beyond K, or
// when d = 0 and b != 0.
class RatioSup {
 public:
  RatioSup(Complex a, Complex b, Complex c, Complex d)
      : n2_(std::norm(b)),
        n1_(2.0 * std::real(a * std::conj(b))),
        n0_(std::norm(a)),
        d2_(std::norm(d)),
        d1_(2.0 * std::real(c * std::conj(d))),
        d0_(std::norm(c)) {
    if (d2_ == 0.0) {
      limit_ = n2_ > 0.0 ? kInf : n0_ / d0_;
    } else {
      limit_ = n2_ / d2_;
      const Complex root = -c / d;
      if (root.imag() == 0.0) denominator_root_ = root.real();
    }
    // Numerator of d/dk (N/D): A k^2 + B k + C.
    const double A = n2_ * d1_ - n1_ * d2_;
    const double B = 2.0 * (n2_ * d0_ - n0_ * d2_);
    const double C = n1_ * d0_ - n0_ * d1_;
    if (A == 0.0) {
      if (B != 0.0) stationary_[n_stationary_++] = -C / B;
    } else {
      const double disc = B * B - 4.0 * A * C;
      if (disc >= 0.0) {
        const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
        stationary_[n_stationary_++] = q / A;
        if (q != 0.0) stationary_[n_stationary_++] = C / q;
      }
    }
  }

  double operator()(double K) const {
    if (limit_ == kInf) return kInf;
    if (denominator_root_ >= K) return kInf;
    double best = std::max(squared(K), limit_);
    for (int i = 0; i < n_stationary_; ++i)
      if (stationary_[i] > K) best = std::max(best, squared(stationary_[i]));
    // Relative slack for rounding in the quadratic forms.
    return std::sqrt(best) * (1.0 + 1e-12);
  }

 private:
  double squared(double k) const {
    const double den = (d2_ * k + d1_) * k + d0_;
    if (den <= 0.0) return kInf;
    return std::max(0.0, (n2_ * k + n1_) * k + n0_) / den;
  }

  double n2_, n1_, n0_, d2_, d1_, d0_;
  double limit_ = 0.0;
  double denominator_root_ = -kInf;
  double stationary_[2] = {0.0, 0.0};
  int n_stationary_ = 0;
};

// Decides whether the tail sum_{j>=1} term_{K+j} of G is certainly below tol,
// given |term_K|. Two bounds are available; each is >= |term_K| * q, where q
// bounds the next term ratio, which gives a cheap early exit.
class TailBound {
 public:
  TailBound(const GArgs& g, double abs_z)
      : abs_z_(abs_z),
        zero_d_(g.d == Complex{}),
        abs_c_(std::abs(g.c)),
        ratio_(g.a, g.b, g.c, g.d),
        step_ratio_(g.a, g.b, Complex{1.0}, Complex{1.0}) {}

  bool below(double abs_term, int K, double tol) const {
    if (abs_term == 0.0 || abs_z_ == 0.0) return true;
    const double k1 = K + 1.0;
    if (zero_d_) {
      // term ratio |a+kb| |z| / (|c| (k+1)); only the geometric bound applies.
      const double q = abs_z_ / abs_c_ * step_ratio_(K);
      if (!(q < 1.0)) return false;
      return abs_term * q / (1.0 - q) < tol;
    }
    const double C = ratio_(K);
    if (C == kInf) return false;
    const double x = C * abs_z_;
    const double q = x / k1;
    if (abs_term * q >= tol) return false;
    if (q < 1.0 && abs_term * q / (1.0 - q) < tol) return true;
    // |term_{K+j}| <= |term_K| x^j / ((K+1) j!), summed over j >= 1.
    const double log_expm1 = x > 700.0 ? x : std::log(std::expm1(x));
    return std::log(abs_term) + log_expm1 - std::log(k1) < std::log(tol);
  }

 private:
  double abs_z_;
  bool zero_d_;
  double abs_c_;
  RatioSup ratio_;
  RatioSup step_ratio_;
};

[[noreturn]] void throw_no_convergence(const char* what, int terms, Complex z) {
  std::ostringstream os;
  os << what << ": tail bound not below tol after " << terms
     << " terms at z = " << z;
  throw Error(ErrorCode::NoConvergence, os.str());
}

}  // namespace

Complex poch(Complex x, Complex y, unsigned n) {
  Complex value{1.0};
  for (unsigned j = 0; j < n; ++j) value *= x + static_cast<double>(j) * y;
  return value;
}

bool has_pole(Complex c, Complex d) {
  if (d == Complex{}) return c == Complex{};
  const Complex q = -c / d;
  const double n = std::round(q.real());
  if (n < 0.0) return false;
  return std::abs(c + n * d) <= 8.0 * kEps * (std::abs(c) + n * std::abs(d));
}

GArgs p_args(const Params& params, int m) {
  require_nonnegative(m, "mode index m");
  const double md = m;
  return {params.r + params.s * md, params.s + params.t, Complex{md + 1.0},
          Complex{1.0}};
}

Complex eval_G(const GArgs& g, Complex z, const EvalConfig& cfg) {
  cfg.validate();
  if (has_pole(g.c, g.d)) {
    std::ostringstream os;
    os << "G series: denominator c + n d vanishes (c = " << g.c
       << ", d = " << g.d << ")";
    throw Error(ErrorCode::DenominatorPole, os.str());
  }
  const TailBound tail(g, std::abs(z));
  Complex term{1.0};
  Complex sum{1.0};
  for (int k = 0;; ++k) {
    if (tail.below(std::abs(term), k, cfg.tol)) return sum;
    if (k + 1 >= cfg.max_terms) throw_no_convergence("G series", k + 1, z);
    const double kd = k;
    term *= (g.a + kd * g.b) * z / ((g.c + kd * g.d) * (kd + 1.0));
    sum += term;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      std::ostringstream os;
      os << "G series overflowed at term " << k + 1 << ", z = " << z;
      throw Error(ErrorCode::NoConvergence, os.str());
    }
  }
}

Complex eval_P(const Params& params, int m, Complex z, const EvalConfig& cfg) {
  return eval_G(p_args(params, m), z, cfg);
}

Complex eval_kummer(Complex a, Complex b, Complex z, const EvalConfig& cfg) {
  if (has_pole(b, Complex{1.0})) {
    std::ostringstream os;
    os << "Kummer function: b = " << b << " is a nonpositive integer";
    throw Error(ErrorCode::DenominatorPole, os.str());
  }
  return eval_G({a, Complex{1.0}, b, Complex{1.0}}, z, cfg);
}

Complex eval_theta(int m, Complex z, const EvalConfig& cfg) {
  require_nonnegative(m, "Theta index m");
  return eval_G({Complex{1.0}, Complex{}, Complex{m + 1.0}, Complex{1.0}}, z,
                cfg);
}

Complex eval_bessel_I(int n, Complex z, const EvalConfig& cfg) {
  cfg.validate();
  require_nonnegative(n, "Bessel order n");
  const Complex half = 0.5 * z;
  // (z/2)^n / n!, accumulated factor by factor to stay in range for large n.
  Complex lead{1.0};
  for (int j = 1; j <= n; ++j) lead *= half / static_cast<double>(j);

  const Complex w = half * half;
  const double abs_w = std::abs(w);
  Complex term = lead;
  Complex sum = lead;
  for (int k = 0;; ++k) {
    // Ratio |w| / ((k+1)(n+k+1)) is decreasing in k.
    const double q = abs_w / ((k + 1.0) * (n + k + 1.0));
    const double t = std::abs(term);
    // I_n(z) can be far below 1 for large n; the tail must also be small
    // relative to the sum.
    const double target = cfg.tol * std::min(1.0, std::abs(sum));
    if (t == 0.0 || (q < 1.0 && t * q / (1.0 - q) < target)) return sum;
    if (k + 1 >= cfg.max_terms) throw_no_convergence("Bessel I series", k + 1, z);
    term *= w / ((k + 1.0) * (n + k + 1.0));
    sum += term;
  }
}

Complex deriv_G(const GArgs& g, unsigned n, Complex z, const EvalConfig& cfg) {
  if (has_pole(g.c, g.d)) {
    std::ostringstream os;
    os << "G derivative: denominator c + n d vanishes (c = " << g.c
       << ", d = " << g.d << ")";
    throw Error(ErrorCode::DenominatorPole, os.str());
  }
  const double nd = n;
  const Complex scale = poch(g.a, g.b, n) / poch(g.c, g.d, n);
  return scale * eval_G({g.a + nd * g.b, g.b, g.c + nd * g.d, g.d}, z, cfg);
}

double growth_bound(const Params& params, double abs_z) {
  if (!(abs_z >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "growth_bound: |z| must be nonnegative");
  return std::exp((std::abs(params.r) + std::abs(params.s) +
                   std::abs(params.s + params.t)) *
                  abs_z);
}

double asymptotic_gap(const Params& params, int m, double radius, int n_grid,
                      const EvalConfig& cfg) {
  if (!(radius > 0.0))
    throw Error(ErrorCode::InvalidArgument, "asymptotic_gap: radius must be positive");
  if (n_grid < 1)
    throw Error(ErrorCode::InvalidArgument, "asymptotic_gap: n_grid must be positive");
  const GArgs g = p_args(params, m);
  double gap = 0.0;
  const double step = n_grid > 1 ? 2.0 * radius / (n_grid - 1) : 0.0;
  for (int i = 0; i < n_grid; ++i) {
    for (int j = 0; j < n_grid; ++j) {
      const Complex z = n_grid > 1 ? Complex{-radius + i * step, -radius + j * step}
                                   : Complex{};
      if (std::abs(z) > radius * (1.0 + 1e-12)) continue;
      gap = std::max(gap, std::abs(eval_G(g, z, cfg) - std::exp(params.s * z)));
    }
  }
  return gap;
}

}  // namespace gh::series
