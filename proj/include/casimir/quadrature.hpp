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

#ifndef CASIMIR_QUADRATURE_HPP
#define CASIMIR_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace casimir {

/// Exp: iterated k_par (inner) and xi (outer) integration, each semi-infinite
/// axis mapped by x = scale t / (1 - t). Polar: k = x cos(theta),
/// xi = x sin(theta) / sqrt(eps_mid), for non-dispersive integrands.
enum class Mapping { Exp, Polar };

struct QuadSpec {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  std::size_t max_evals = 200000;  // per one-dimensional integration
  Mapping mapping = Mapping::Exp;
  double scale = 1.0;  // length of the semi-infinite map, x = scale t / (1 - t)
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evals = 0;
  bool converged = true;
};

using Integrand1 = std::function<double(double)>;
using Integrand2 = std::function<double(double k_par, double xi)>;

void validate(const QuadSpec& spec);

/// Adaptive Gauss-Kronrod (21 point) with global subdivision on [a, b].
QuadResult integrate_interval(const Integrand1& f, double a, double b, const QuadSpec& spec);

/// Integral over (0, inf) through the rational map.
QuadResult integrate_semi_inf(const Integrand1& f, const QuadSpec& spec);

/// Quadrant integral in polar variables; f takes (k_par, xi).
QuadResult integrate_quadrant_polar(const Integrand2& f, double eps_mid, const QuadSpec& spec);

/// Quadrant integral as iterated semi-infinite integrals, k_par inner.
QuadResult integrate_quadrant_iterated(const Integrand2& f, const QuadSpec& spec);

/// Dispatches on spec.mapping. eps_mid is only used by the polar map.
QuadResult integrate_quadrant(const Integrand2& f, double eps_mid, const QuadSpec& spec);

/// Weighted sum of two results; error estimates add and convergence flags are and-ed.
QuadResult combine(const QuadResult& a, const QuadResult& b, double wa = 1.0, double wb = 1.0);

}  // namespace casimir

#endif
