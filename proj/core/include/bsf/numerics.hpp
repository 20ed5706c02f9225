// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared numerical machinery: adaptive quadrature, a bracketing root finder
// and a damped fixed-point iteration. All routines are pure functions of
// their inputs and safe to call concurrently.

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "bsf/errors.hpp"

namespace bsf::numerics {

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_iter = 200;

  // Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_iter >= 1.
  void validate() const;
};

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Adaptive Gauss quadrature of f over (a, b); b may be +infinity, in which
/// case the tail is folded onto [0,1) with x = a + u/(1-u). Endpoints are
/// never evaluated, so integrable endpoint singularities are allowed.
/// Returns I with estimated error <= max(abs_tol, rel_tol*|I|), otherwise
/// throws NonConvergence after max_iter interval refinements.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const Tolerance& tol = {});

/// Same, but the domain is pre-split at the given interior breakpoints
/// (points outside (a,b) are ignored). Use this when the integrand has known
/// peaks or kinks; the adaptive refinement then isolates them quickly.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    std::span<const double> breakpoints,
                    const Tolerance& tol = {});

/// Bracketing root finder (Brent). Requires f(lo)*f(hi) <= 0, else throws
/// NoBracket. Converges when |f(r)| <= abs_tol or the bracket width drops
/// below rel_tol*|r|; throws NonConvergence after max_iter steps.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol = {});

/// Damped fixed-point iteration x <- (1-damping)*x + damping*g(x), stopping
/// when ||g(x)-x||_inf <= abs_tol. damping must lie in (0,1]. Throws
/// NonConvergence after max_iter steps (callers may retry with lower damping).
std::vector<double> fixed_point(
    const std::function<std::vector<double>(const std::vector<double>&)>& g,
    std::vector<double> x0, double damping, const Tolerance& tol = {});

/// Scalar convenience wrapper for fixed_point.
double fixed_point(const std::function<double(double)>& g, double x0,
                   double damping, const Tolerance& tol = {});

}  // namespace bsf::numerics
