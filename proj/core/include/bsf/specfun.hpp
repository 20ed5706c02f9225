// SPDX-License-Identifier: Apache-2.0
#pragma once

// Special functions used by the gas thermodynamics: the Bose-Einstein
// polylogarithm g_s(z), the Riemann zeta function, Gamma and the upper
// incomplete Gamma. Everything is evaluated in double precision; target
// accuracy is 1e-12 relative (1e-10 for gamma_upper).

#include "bsf/errors.hpp"

namespace bsf::specfun {

/// Li_s(z) = sum_{l>=1} z^l / l^s for z in [0,1].
///
/// For z <= 0.9 the defining series is summed directly. For z in (0.9, 1) the
/// series loses accuracy exactly where the physics lives (criticality), so an
/// expansion of Li_s(e^mu) in powers of mu = ln z is used instead, with the
/// Gamma(1-s) (-mu)^(s-1) singular term for non-integer s and the matching
/// logarithmic term for integer s. The two routes agree to ~1e-12 at the
/// fixed crossover z = 0.9.
///
/// Throws DivergentValue for z = 1 with s <= 1 and DomainError for z outside
/// [0, 1]. Orders s within 1e-9 of an integer are evaluated with the integer
/// formula.
double polylog(double s, double z);

/// Riemann zeta, s > 1 (DomainError otherwise).
double zeta(double s);

/// Gamma(s), s > 0 (DomainError otherwise).
double gamma_fn(double s);

/// Upper incomplete Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt for s >= 0,
/// x > 0. s = 0 gives the exponential integral E_1(x).
double gamma_upper(double s, double x);

namespace detail {

// Analytic continuation of zeta to s < 1 (s != 1), needed by the polylog
// expansion near z = 1. Valid down to s ~ -30.
double zeta_any(double s);

// Route-forcing variants, exposed for the crossover agreement tests only.
double polylog_series(double s, double z);
double polylog_expansion(double s, double z);

}  // namespace detail

}  // namespace bsf::specfun
