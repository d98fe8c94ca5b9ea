#include "gharmonics/gharmonics.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/series.hpp"
#include "core/solutions.hpp"
#include "core/verification.hpp"

struct gh_solution {
  gh::solutions::SolutionSeries series;
};

namespace {

thread_local std::string last_error;

// Thrown from inside sampler adapters when a user callback reports failure.
struct CallbackAbort {};

gh::Complex to_cpp(gh_complex z) { return {z.re, z.im}; }
gh_complex to_c(gh::Complex z) { return {z.real(), z.imag()}; }

gh::Params to_cpp(const gh_params& p) { return {to_cpp(p.s), to_cpp(p.t), to_cpp(p.r)}; }
gh_params to_c(const gh::Params& p) { return {to_c(p.s), to_c(p.t), to_c(p.r)}; }

gh::algebra::OperatorElement to_cpp(const gh_operator& d) {
  return {to_cpp(d.a1), to_cpp(d.a2), to_cpp(d.a3), to_cpp(d.a4)};
}
gh_operator to_c(const gh::algebra::OperatorElement& d) {
  return {to_c(d.a1), to_c(d.a2), to_c(d.a3), to_c(d.a4)};
}
gh_ode_operator to_c(const gh::algebra::ODEOperator& t) {
  return {to_c(t.q2), to_c(t.q1c), to_c(t.q1l), to_c(t.q0)};
}

gh::EvalConfig to_cpp(const gh_eval_config* cfg) {
  if (cfg == nullptr) return {};
  return {cfg->tol, cfg->max_terms, cfg->fd_step};
}

gh::verification::GridSpec to_cpp(const gh_grid& g) {
  return {g.radius, g.n, g.exclude_origin_radius};
}

gh_residual_report to_c(const gh::verification::ResidualReport& r) {
  return {r.max_abs, to_c(r.argmax_point), r.points_checked, r.fd_step};
}

gh_status to_status(gh::ErrorCode code) {
  switch (code) {
    case gh::ErrorCode::InvalidArgument: return GH_ERR_INVALID_ARGUMENT;
    case gh::ErrorCode::DenominatorPole: return GH_ERR_DENOMINATOR_POLE;
    case gh::ErrorCode::NoConvergence: return GH_ERR_NO_CONVERGENCE;
    case gh::ErrorCode::BadSampleCount: return GH_ERR_BAD_SAMPLE_COUNT;
    case gh::ErrorCode::DivisorNearZero: return GH_ERR_DIVISOR_NEAR_ZERO;
    case gh::ErrorCode::StepTooCoarse: return GH_ERR_STEP_TOO_COARSE;
    case gh::ErrorCode::NotEquivalent: return GH_ERR_NOT_EQUIVALENT;
  }
  return GH_ERR_INTERNAL;
}

gh_status fail(gh_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
gh_status guarded(Fn&& fn) {
  try {
    fn();
    return GH_OK;
  } catch (const gh::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const CallbackAbort&) {
    return fail(GH_ERR_CALLBACK, "sampler callback reported failure");
  } catch (const std::bad_alloc&) {
    return fail(GH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GH_ERR_INTERNAL, "unknown exception");
  }
}

#define GH_REQUIRE_NONNULL(ptr)                                            \
  do {                                                                     \
    if ((ptr) == nullptr)                                                  \
      return fail(GH_ERR_INVALID_ARGUMENT, "null pointer: " #ptr);         \
  } while (0)

gh::solutions::Sampler adapt(gh_sampler_fn fn, void* user) {
  return [fn, user](gh::Complex z) {
    gh_complex out{0.0, 0.0};
    if (fn(user, to_c(z), &out) != 0) throw CallbackAbort{};
    return to_cpp(out);
  };
}

}  // namespace

extern "C" {

const char* gh_last_error(void) { return last_error.c_str(); }

const char* gh_status_string(gh_status status) {
  switch (status) {
    case GH_OK: return "ok";
    case GH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GH_ERR_DENOMINATOR_POLE: return "denominator pole";
    case GH_ERR_NO_CONVERGENCE: return "no convergence";
    case GH_ERR_BAD_SAMPLE_COUNT: return "bad sample count";
    case GH_ERR_DIVISOR_NEAR_ZERO: return "divisor near zero";
    case GH_ERR_STEP_TOO_COARSE: return "step too coarse";
    case GH_ERR_NOT_EQUIVALENT: return "not equivalent";
    case GH_ERR_CALLBACK: return "callback failure";
    case GH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gh_version(void) { return "1.0.0"; }

gh_eval_config gh_default_eval_config(void) {
  const gh::EvalConfig cfg;
  return {cfg.tol, cfg.max_terms, cfg.fd_step};
}

gh_status gh_poch(gh_complex x, gh_complex y, unsigned n, gh_complex* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::series::poch(to_cpp(x), to_cpp(y), n)); });
}

gh_status gh_eval_g(gh_complex a, gh_complex b, gh_complex c, gh_complex d, gh_complex z,
                    const gh_eval_config* cfg, gh_complex* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = to_c(gh::series::eval_G({to_cpp(a), to_cpp(b), to_cpp(c), to_cpp(d)},
                                   to_cpp(z), to_cpp(cfg)));
  });
}

gh_status gh_eval_p(const gh_params* params, int m, gh_complex z,
                    const gh_eval_config* cfg, gh_complex* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = to_c(gh::series::eval_P(to_cpp(*params), m, to_cpp(z), to_cpp(cfg)));
  });
}

gh_status gh_eval_kummer(gh_complex a, gh_complex b, gh_complex z,
                         const gh_eval_config* cfg, gh_complex* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = to_c(gh::series::eval_kummer(to_cpp(a), to_cpp(b), to_cpp(z), to_cpp(cfg)));
  });
}

gh_status gh_eval_theta(int m, gh_complex z, const gh_eval_config* cfg, gh_complex* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::series::eval_theta(m, to_cpp(z), to_cpp(cfg))); });
}

gh_status gh_eval_bessel_i(int n, gh_complex z, const gh_eval_config* cfg,
                           gh_complex* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded(
      [&] { *out = to_c(gh::series::eval_bessel_I(n, to_cpp(z), to_cpp(cfg))); });
}

gh_status gh_deriv_g(gh_complex a, gh_complex b, gh_complex c, gh_complex d, unsigned n,
                     gh_complex z, const gh_eval_config* cfg, gh_complex* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = to_c(gh::series::deriv_G({to_cpp(a), to_cpp(b), to_cpp(c), to_cpp(d)}, n,
                                    to_cpp(z), to_cpp(cfg)));
  });
}

gh_status gh_growth_bound(const gh_params* params, double abs_z, double* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = gh::series::growth_bound(to_cpp(*params), abs_z); });
}

gh_status gh_asymptotic_gap(const gh_params* params, int m, double radius, int n_grid,
                            const gh_eval_config* cfg, double* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = gh::series::asymptotic_gap(to_cpp(*params), m, radius, n_grid, to_cpp(cfg));
  });
}

gh_status gh_from_params(const gh_params* params, gh_operator* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::algebra::from_params(to_cpp(*params))); });
}

gh_status gh_bracket(const gh_operator* d1, const gh_operator* d2, gh_operator* out) {
  GH_REQUIRE_NONNULL(d1);
  GH_REQUIRE_NONNULL(d2);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::algebra::bracket(to_cpp(*d1), to_cpp(*d2))); });
}

gh_status gh_lambda_map(const gh_operator* d, int m, gh_ode_operator* out) {
  GH_REQUIRE_NONNULL(d);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::algebra::lambda_map_signed(to_cpp(*d), m)); });
}

gh_status gh_kernel_basis(int m, gh_operator* out) {
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::algebra::kernel_basis(m)); });
}

gh_status gh_equivalent(const gh_operator* v, const gh_operator* w, int m, int* equivalent,
                        gh_complex* mu) {
  GH_REQUIRE_NONNULL(v);
  GH_REQUIRE_NONNULL(w);
  GH_REQUIRE_NONNULL(equivalent);
  GH_REQUIRE_NONNULL(mu);
  return guarded([&] {
    if (m < 0)
      throw gh::Error(gh::ErrorCode::InvalidArgument, "mode index must be nonnegative");
    const auto witness = gh::algebra::equivalent(to_cpp(*v), to_cpp(*w), m);
    *equivalent = witness.equivalent ? 1 : 0;
    *mu = to_c(witness.mu);
  });
}

gh_status gh_rescale_params(const gh_params* params, double rho, gh_params* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] { *out = to_c(gh::algebra::rescale_params(to_cpp(*params), rho)); });
}

gh_status gh_solution_create(const gh_params* params, const gh_eval_config* cfg,
                             gh_solution** out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = new gh_solution{gh::solutions::SolutionSeries(to_cpp(*params), to_cpp(cfg))};
  });
}

gh_status gh_solution_from_taylor(const gh_params* params, const gh_eval_config* cfg,
                                  const gh_complex* d_plus, size_t n_plus,
                                  const gh_complex* d_minus, size_t n_minus,
                                  gh_solution** out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  if (n_plus > 0) GH_REQUIRE_NONNULL(d_plus);
  if (n_minus > 0) GH_REQUIRE_NONNULL(d_minus);
  return guarded([&] {
    std::vector<gh::Complex> plus, minus;
    for (size_t i = 0; i < n_plus; ++i) plus.push_back(to_cpp(d_plus[i]));
    for (size_t i = 0; i < n_minus; ++i) minus.push_back(to_cpp(d_minus[i]));
    *out = new gh_solution{
        gh::solutions::modes_from_taylor(to_cpp(*params), plus, minus, to_cpp(cfg))};
  });
}

void gh_solution_destroy(gh_solution* sol) { delete sol; }

gh_status gh_solution_add_mode(gh_solution* sol, int m, gh_complex k) {
  GH_REQUIRE_NONNULL(sol);
  return guarded([&] { sol->series.add_mode(m, to_cpp(k)); });
}

gh_status gh_solution_check_bound(const gh_solution* sol, double bound, double rho0) {
  GH_REQUIRE_NONNULL(sol);
  return guarded([&] { sol->series.check_bound({bound, rho0}); });
}

gh_status gh_solution_mode_count(const gh_solution* sol, size_t* out) {
  GH_REQUIRE_NONNULL(sol);
  GH_REQUIRE_NONNULL(out);
  *out = sol->series.modes().size();
  return GH_OK;
}

gh_status gh_solution_get_mode(const gh_solution* sol, size_t index, int* m,
                               gh_complex* k) {
  GH_REQUIRE_NONNULL(sol);
  GH_REQUIRE_NONNULL(m);
  GH_REQUIRE_NONNULL(k);
  const auto& modes = sol->series.modes();
  if (index >= modes.size())
    return fail(GH_ERR_INVALID_ARGUMENT, "mode index out of range");
  *m = modes[index].m;
  *k = to_c(modes[index].k);
  return GH_OK;
}

gh_status gh_solution_params(const gh_solution* sol, gh_params* out) {
  GH_REQUIRE_NONNULL(sol);
  GH_REQUIRE_NONNULL(out);
  *out = to_c(sol->series.params());
  return GH_OK;
}

gh_status gh_solution_eval(const gh_solution* sol, gh_complex z, gh_complex* out) {
  GH_REQUIRE_NONNULL(sol);
  GH_REQUIRE_NONNULL(out);
  return guarded(
      [&] { *out = to_c(gh::solutions::eval_solution(sol->series, to_cpp(z))); });
}

gh_status gh_mode_value(const gh_params* params, int m, gh_complex k, gh_complex z,
                        const gh_eval_config* cfg, gh_complex* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = to_c(gh::solutions::mode_value(to_cpp(*params), m, to_cpp(k), to_cpp(z),
                                          to_cpp(cfg)));
  });
}

gh_status gh_decompose_circle(const gh_complex* values, size_t n, double rho,
                              gh_complex* out) {
  GH_REQUIRE_NONNULL(values);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    gh::solutions::CircleSamples samples{rho, {}};
    for (size_t i = 0; i < n; ++i) samples.values.push_back(to_cpp(values[i]));
    const auto coeffs = gh::solutions::decompose_circle(samples);
    const int offset = static_cast<int>((n - 1) / 2);
    for (const auto& [m, c] : coeffs) out[m + offset] = to_c(c);
  });
}

namespace {

void copy_extraction(const gh::solutions::Extraction& e, gh_complex* out,
                     int* alias_warning) {
  for (size_t i = 0; i < e.coefficients.size(); ++i) out[i] = to_c(e.coefficients[i].k);
  if (alias_warning != nullptr) *alias_warning = e.alias_warning ? 1 : 0;
}

}  // namespace

gh_status gh_extract_from_samples(const gh_params* params, const gh_complex* values,
                                  size_t n, double rho, int m_lo, int m_hi,
                                  const gh_eval_config* cfg, gh_complex* out,
                                  int* alias_warning) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(values);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    gh::solutions::CircleSamples samples{rho, {}};
    for (size_t i = 0; i < n; ++i) samples.values.push_back(to_cpp(values[i]));
    copy_extraction(gh::solutions::extract_from_samples(samples, to_cpp(*params), m_lo,
                                                        m_hi, to_cpp(cfg)),
                    out, alias_warning);
  });
}

gh_status gh_extract_coefficients(gh_sampler_fn sampler, void* user,
                                  const gh_params* params, int m_lo, int m_hi, double rho,
                                  size_t n, const gh_eval_config* cfg, gh_complex* out,
                                  int* alias_warning) {
  GH_REQUIRE_NONNULL(sampler);
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    copy_extraction(gh::solutions::extract_coefficients(adapt(sampler, user),
                                                        to_cpp(*params), m_lo, m_hi, rho,
                                                        static_cast<int>(n), to_cpp(cfg)),
                    out, alias_warning);
  });
}

gh_status gh_fejer_reconstruct(gh_polar_sampler_fn sampler, void* user, int N,
                               gh_complex z, gh_complex* out) {
  GH_REQUIRE_NONNULL(sampler);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const gh::solutions::PolarSampler polar = [sampler, user](double rho, double theta) {
      gh_complex value{0.0, 0.0};
      if (sampler(user, rho, theta, &value) != 0) throw CallbackAbort{};
      return to_cpp(value);
    };
    *out = to_c(gh::solutions::fejer_reconstruct(polar, N, to_cpp(z)));
  });
}

gh_status gh_grid_points(const gh_grid* grid, double h, gh_complex* out, size_t capacity,
                         size_t* count) {
  GH_REQUIRE_NONNULL(grid);
  GH_REQUIRE_NONNULL(count);
  return guarded([&] {
    const auto pts = to_cpp(*grid).points(h);
    if (out != nullptr) {
      if (capacity < pts.size())
        throw gh::Error(gh::ErrorCode::InvalidArgument, "grid_points: output buffer too small");
      for (size_t i = 0; i < pts.size(); ++i) out[i] = to_c(pts[i]);
    }
    *count = pts.size();
  });
}

gh_status gh_residual_solution(const gh_params* params, const gh_solution* sol,
                               const gh_grid* grid, double h, gh_residual_report* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(sol);
  GH_REQUIRE_NONNULL(grid);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto& series = sol->series;
    const gh::solutions::Sampler u = [&series](gh::Complex z) {
      return gh::solutions::eval_solution(series, z);
    };
    *out = to_c(gh::verification::residual_M(to_cpp(*params), u, to_cpp(*grid), h));
  });
}

gh_status gh_residual_sampler(const gh_params* params, gh_sampler_fn sampler, void* user,
                              const gh_grid* grid, double h, gh_residual_report* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(sampler);
  GH_REQUIRE_NONNULL(grid);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = to_c(gh::verification::residual_M(to_cpp(*params), adapt(sampler, user),
                                             to_cpp(*grid), h));
  });
}

gh_status gh_p_coefficients(const gh_params* params, int m, size_t count, gh_complex* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    const auto coeffs =
        gh::verification::p_coefficients(to_cpp(*params), m, static_cast<int>(count));
    for (size_t i = 0; i < coeffs.size(); ++i) out[i] = to_c(coeffs[i]);
  });
}

gh_status gh_ode_recurrence_residual(const gh_params* params, int m,
                                     const gh_complex* coeffs, size_t count, double* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(coeffs);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    std::vector<gh::Complex> f;
    for (size_t i = 0; i < count; ++i) f.push_back(to_cpp(coeffs[i]));
    *out = gh::verification::ode_recurrence_residual(to_cpp(*params), m, f);
  });
}

gh_status gh_wronskian_check(const gh_params* params, int m, double x0, double x1,
                             int steps, double* out) {
  GH_REQUIRE_NONNULL(params);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    *out = gh::verification::wronskian_check(to_cpp(*params), m, x0, x1, steps);
  });
}

gh_status gh_equivalence_action_check(const gh_operator* v, const gh_operator* w, int m,
                                      const gh_complex* f_poly, size_t n_poly,
                                      const gh_grid* grid, double h, double* out) {
  GH_REQUIRE_NONNULL(v);
  GH_REQUIRE_NONNULL(w);
  GH_REQUIRE_NONNULL(f_poly);
  GH_REQUIRE_NONNULL(grid);
  GH_REQUIRE_NONNULL(out);
  return guarded([&] {
    std::vector<gh::Complex> f;
    for (size_t i = 0; i < n_poly; ++i) f.push_back(to_cpp(f_poly[i]));
    *out = gh::verification::equivalence_action_check(to_cpp(*v), to_cpp(*w), m, f,
                                                      to_cpp(*grid), h);
  });
}

}  // extern "C"
