/*
 *            Copyright 2026 The casimir-born Authors
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace casimir {

namespace {

// Value together with an error estimate; inner integrals of an iterated
// quadrature hand their error up through this.
using ValErr = std::pair<double, double>;
using Integrand1E = std::function<ValErr(double)>;

struct Rule {
  std::vector<double> x;   // Kronrod abscissae, x[0] = 0
  std::vector<double> wk;  // Kronrod weights
  std::vector<double> wg;  // Gauss weights aligned with x (zero on Kronrod-only nodes)
};

const Rule& gk21() {
  static const Rule rule = [] {
    using K = boost::math::quadrature::gauss_kronrod<double, 21>;
    using G = boost::math::quadrature::gauss<double, 10>;
    Rule r;
    r.x.assign(K::abscissa().begin(), K::abscissa().end());
    r.wk.assign(K::weights().begin(), K::weights().end());
    r.wg.assign(r.x.size(), 0.0);
    const auto& gx = G::abscissa();
    const auto& gw = G::weights();
    for (std::size_t j = 0; j < gx.size(); ++j) {
      for (std::size_t i = 0; i < r.x.size(); ++i) {
        if (std::abs(r.x[i] - gx[j]) < 1e-14) r.wg[i] = gw[j];
      }
    }
    return r;
  }();
  return rule;
}

struct Panel {
  double a, b;
  double value;
  double err;
};

struct PanelOrder {
  bool operator()(const Panel& p, const Panel& q) const {
    if (p.err != q.err) return p.err < q.err;
    return p.a > q.a;  // tie-break keeps the schedule deterministic
  }
};

Panel eval_panel(const Integrand1E& f, double a, double b) {
  const Rule& r = gk21();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double k = 0.0, g = 0.0, inner_err = 0.0;
  {
    const ValErr v = f(c);
    k += r.wk[0] * v.first;
    g += r.wg[0] * v.first;
    inner_err += r.wk[0] * v.second;
  }
  for (std::size_t i = 1; i < r.x.size(); ++i) {
    const ValErr lo = f(c - h * r.x[i]);
    const ValErr hi = f(c + h * r.x[i]);
    const double s = lo.first + hi.first;
    k += r.wk[i] * s;
    g += r.wg[i] * s;
    inner_err += r.wk[i] * (lo.second + hi.second);
  }
  return {a, b, h * k, std::abs(h * (k - g)) + std::abs(h) * inner_err};
}

double neumaier_sum(const std::vector<double>& v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double t = s + x;
    c += (std::abs(s) >= std::abs(x)) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return s + c;
}

QuadResult adaptive(const Integrand1E& f, double a, double b, const QuadSpec& spec,
                    int initial_panels = 4) {
  const std::size_t per_panel = 2 * gk21().x.size() - 1;
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  std::vector<Panel> frozen;  // panels too narrow to split further
  QuadResult res;
  double total = 0.0, total_err = 0.0;
  for (int i = 0; i < initial_panels; ++i) {
    const double lo = a + (b - a) * i / initial_panels;
    const double hi = (i + 1 == initial_panels) ? b : a + (b - a) * (i + 1) / initial_panels;
    Panel p = eval_panel(f, lo, hi);
    res.evals += per_panel;
    total += p.value;
    total_err += p.err;
    heap.push(p);
  }
  auto done = [&] {
    return total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };
  while (!done()) {
    if (heap.empty()) break;
    if (res.evals + 2 * per_panel > spec.max_evals) break;
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      frozen.push_back(worst);
      continue;
    }
    Panel l = eval_panel(f, worst.a, mid);
    Panel r = eval_panel(f, mid, worst.b);
    res.evals += 2 * per_panel;
    total += l.value + r.value - worst.value;
    total_err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
  }
  std::vector<Panel> all = std::move(frozen);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
  std::vector<double> vals, errs;
  vals.reserve(all.size());
  errs.reserve(all.size());
  for (const Panel& p : all) {
    vals.push_back(p.value);
    errs.push_back(p.err);
  }
  res.value = neumaier_sum(vals);
  res.err_estimate = neumaier_sum(errs);
  res.converged = std::isfinite(res.value) &&
                  res.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
  return res;
}

Integrand1E lift(const Integrand1& f) {
  return [&f](double x) { return ValErr{f(x), 0.0}; };
}

// (0, inf) -> (0, 1), x = s t / (1 - t).
Integrand1E map_semi_inf(const Integrand1E& f, double s) {
  return [&f, s](double t) {
    const double om = 1.0 - t;
    const ValErr v = f(s * t / om);
    const double jac = s / (om * om);
    return ValErr{v.first * jac, v.second * jac};
  };
}

}  // namespace

void validate(const QuadSpec& spec) {
  if (!(spec.rel_tol > 0.0)) throw std::invalid_argument("quadrature: rel_tol must be positive");
  if (!(spec.abs_tol >= 0.0)) throw std::invalid_argument("quadrature: abs_tol must be >= 0");
  if (spec.max_evals < 64) throw std::invalid_argument("quadrature: max_evals must be >= 64");
  if (!(spec.scale > 0.0)) throw std::invalid_argument("quadrature: scale must be positive");
}

QuadResult integrate_interval(const Integrand1& f, double a, double b, const QuadSpec& spec) {
  validate(spec);
  const Integrand1E g = lift(f);
  return adaptive(g, a, b, spec);
}

QuadResult integrate_semi_inf(const Integrand1& f, const QuadSpec& spec) {
  validate(spec);
  const Integrand1E g = lift(f);
  const Integrand1E m = map_semi_inf(g, spec.scale);
  return adaptive(m, 0.0, 1.0, spec);
}

namespace {

// Outer integral over an Integrand1E whose values come from inner
// integrations; the inner flags and eval counts are accumulated here. Inner
// errors already feed the outer estimate, so an inner integral that misses
// its relative target (typically where the integrand vanishes on an edge of
// the quadrant and only rounding noise is left) fails the result only when
// its error is significant against the largest inner value.
struct InnerLog {
  std::size_t evals = 0;
  double max_value = 0.0;
  double max_failed_err = 0.0;

  void add(const QuadResult& r) {
    evals += r.evals;
    max_value = std::max(max_value, std::abs(r.value));
    if (!r.converged)
      max_failed_err = std::max(max_failed_err, std::isfinite(r.err_estimate) ? r.err_estimate : HUGE_VAL);
  }
  bool converged(const QuadSpec& in) const {
    return max_failed_err <= std::max(in.abs_tol, in.rel_tol * max_value);
  }
};

QuadSpec inner_spec(const QuadSpec& spec) {
  QuadSpec s = spec;
  s.rel_tol = spec.rel_tol * 0.1;
  s.abs_tol = spec.abs_tol * 0.1;
  return s;
}

QuadSpec outer_spec(const QuadSpec& spec) {
  QuadSpec s = spec;
  s.rel_tol = spec.rel_tol * 0.5;
  s.abs_tol = spec.abs_tol * 0.5;
  return s;
}

QuadResult finish(QuadResult outer, const InnerLog& log, const QuadSpec& spec) {
  outer.evals += log.evals;
  outer.converged = outer.converged && log.converged(inner_spec(spec)) &&
                    outer.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(outer.value));
  return outer;
}

}  // namespace

QuadResult integrate_quadrant_polar(const Integrand2& f, double eps_mid, const QuadSpec& spec) {
  validate(spec);
  if (!(eps_mid >= 1.0)) throw std::domain_error("polar map: eps_mid must be >= 1");
  const double rs = 1.0 / std::sqrt(eps_mid);
  const QuadSpec in = inner_spec(spec);
  InnerLog log;
  const Integrand1E theta_integrand = [&](double th) {
    const double c = std::cos(th), s = std::sin(th) * rs;
    const Integrand1E radial = [&](double x) { return ValErr{f(x * c, x * s) * x * rs, 0.0}; };
    const Integrand1E mapped = map_semi_inf(radial, in.scale);
    const QuadResult r = adaptive(mapped, 0.0, 1.0, in);
    log.add(r);
    return ValErr{r.value, r.err_estimate};
  };
  QuadResult outer = adaptive(theta_integrand, 0.0, 0.5 * std::numbers::pi, outer_spec(spec));
  outer.evals = 0;
  return finish(outer, log, spec);
}

QuadResult integrate_quadrant_iterated(const Integrand2& f, const QuadSpec& spec) {
  validate(spec);
  const QuadSpec in = inner_spec(spec);
  InnerLog log;
  const Integrand1E xi_integrand = [&](double xi) {
    const Integrand1E kk = [&](double k) { return ValErr{f(k, xi), 0.0}; };
    const Integrand1E mapped = map_semi_inf(kk, in.scale);
    const QuadResult r = adaptive(mapped, 0.0, 1.0, in);
    log.add(r);
    return ValErr{r.value, r.err_estimate};
  };
  const Integrand1E outer_mapped = map_semi_inf(xi_integrand, spec.scale);
  QuadResult outer = adaptive(outer_mapped, 0.0, 1.0, outer_spec(spec));
  outer.evals = 0;
  return finish(outer, log, spec);
}

QuadResult integrate_quadrant(const Integrand2& f, double eps_mid, const QuadSpec& spec) {
  return spec.mapping == Mapping::Polar ? integrate_quadrant_polar(f, eps_mid, spec)
                                        : integrate_quadrant_iterated(f, spec);
}

QuadResult combine(const QuadResult& a, const QuadResult& b, double wa, double wb) {
  QuadResult r;
  r.value = wa * a.value + wb * b.value;
  r.err_estimate = std::abs(wa) * a.err_estimate + std::abs(wb) * b.err_estimate;
  r.evals = a.evals + b.evals;
  r.converged = a.converged && b.converged;
  return r;
}

}  // namespace casimir
