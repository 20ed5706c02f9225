// SPDX-License-Identifier: Apache-2.0
#include "bsf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace bsf::numerics {

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1)
    raise(ErrorCode::DomainError,
          "Tolerance requires abs_tol > 0, rel_tol > 0, max_iter >= 1");
}

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1), strictly interior
  std::vector<double> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n. Computed once per
// order; accuracy is limited only by double rounding.
GaussRule make_gauss(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

const GaussRule& gauss7() {
  static const GaussRule rule = make_gauss(7);
  return rule;
}

const GaussRule& gauss15() {
  static const GaussRule rule = make_gauss(15);
  return rule;
}

struct Segment {
  double a, b;
  double value;  // G15 estimate
  double error;  // |G15 - G7|
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& lo = gauss7();
  const GaussRule& hi = gauss15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s7 = 0.0, s15 = 0.0;
  for (int i = 0; i < 7; ++i)
    s7 += lo.weights[i] * f(mid + half * lo.nodes[i]);
  for (int i = 0; i < 15; ++i)
    s15 += hi.weights[i] * f(mid + half * hi.nodes[i]);
  s7 *= half;
  s15 *= half;
  return {a, b, s15, std::abs(s15 - s7)};
}

struct WorseError {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.error < y.error;
  }
};

double adaptive(const std::function<double(double)>& f, double a, double b,
                std::span<const double> breakpoints, const Tolerance& tol) {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double p : breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::priority_queue<Segment, std::vector<Segment>, WorseError> heap;
  double total = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) continue;
    Segment s = evaluate(f, cuts[i], cuts[i + 1]);
    total += s.value;
    err += s.error;
    heap.push(s);
  }

  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if (err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total)))
      return total;
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at machine resolution; stop refining it
      continue;
    }
    Segment left = evaluate(f, worst.a, mid);
    Segment right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  if (err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) return total;
  std::ostringstream msg;
  msg << "quadrature error estimate " << err << " above tolerance after "
      << tol.max_iter << " refinements (estimate " << total << ")";
  raise(ErrorCode::NonConvergence, msg.str());
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    std::span<const double> breakpoints, const Tolerance& tol) {
  tol.validate();
  if (!(a < b)) raise(ErrorCode::DomainError, "integration bounds need a < b");
  if (std::isinf(b)) {
    if (std::isinf(a))
      raise(ErrorCode::DomainError, "lower integration bound must be finite");
    // x = a + u/(1-u), dx = du/(1-u)^2 maps [0,1) onto [a, inf).
    auto g = [&f, a](double u) {
      const double w = 1.0 - u;
      return f(a + u / w) / (w * w);
    };
    std::vector<double> mapped;
    mapped.reserve(breakpoints.size());
    for (double p : breakpoints)
      if (p > a && std::isfinite(p)) mapped.push_back((p - a) / (1.0 + p - a));
    return adaptive(g, 0.0, 1.0, mapped, tol);
  }
  return adaptive(f, a, b, breakpoints, tol);
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const Tolerance& tol) {
  return integrate_1d(f, a, b, std::span<const double>{}, tol);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol) {
  tol.validate();
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    raise(ErrorCode::NoBracket, "f has the same sign at both bracket ends");

  // Brent: inverse-quadratic / secant steps guarded by bisection.
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        0.5 * tol.rel_tol * std::abs(b) + 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 1e-300;
    const double xm = 0.5 * (c - b);
    if (std::abs(fb) <= tol.abs_tol || std::abs(xm) <= tol1) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  raise(ErrorCode::NonConvergence, "root finder exhausted max_iter");
}

std::vector<double> fixed_point(
    const std::function<std::vector<double>(const std::vector<double>&)>& g,
    std::vector<double> x0, double damping, const Tolerance& tol) {
  tol.validate();
  if (!(damping > 0.0) || damping > 1.0)
    raise(ErrorCode::DomainError, "damping must lie in (0, 1]");
  std::vector<double> x = std::move(x0);
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    std::vector<double> gx = g(x);
    if (gx.size() != x.size())
      raise(ErrorCode::DomainError, "fixed-point map changed dimension");
    double resid = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      resid = std::max(resid, std::abs(gx[i] - x[i]));
    if (resid <= tol.abs_tol) return x;
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = (1.0 - damping) * x[i] + damping * gx[i];
  }
  raise(ErrorCode::NonConvergence, "fixed-point iteration exhausted max_iter");
}

double fixed_point(const std::function<double(double)>& g, double x0,
                   double damping, const Tolerance& tol) {
  auto wrap = [&g](const std::vector<double>& v) {
    return std::vector<double>{g(v[0])};
  };
  return fixed_point(wrap, std::vector<double>{x0}, damping, tol)[0];
}

}  // namespace bsf::numerics

namespace bsf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::DivergentValue: return "DivergentValue";
    case ErrorCode::DivergentOccupation: return "DivergentOccupation";
    case ErrorCode::NormalizationFailure: return "NormalizationFailure";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace bsf
