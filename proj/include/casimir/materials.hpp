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

#ifndef CASIMIR_MATERIALS_HPP
#define CASIMIR_MATERIALS_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace casimir {

/// Non-dispersive dielectric.
struct Constant {
  double eps = 1.0;
};

/// Single-resonance model on the imaginary axis:
/// eps(i xi) = 1 + wp^2 / (w0^2 + xi^2 + gamma xi).
struct DrudeLorentz {
  double wp = 0.0;
  double w0 = 0.0;
  double gamma = 0.0;
};

/// Tabulated eps(i xi), monotone cubic between nodes and clamped outside.
class Tabulated {
 public:
  Tabulated(std::vector<double> xi, std::vector<double> eps);

  double operator()(double xi) const;
  const std::vector<double>& xi() const { return xi_; }
  const std::vector<double>& eps() const { return eps_; }

 private:
  std::vector<double> xi_;
  std::vector<double> eps_;
  std::function<double(double)> cubic_;  // empty below four nodes
};

/// Permittivity on the positive imaginary frequency axis. Immutable.
class Permittivity {
 public:
  using Model = std::variant<Constant, DrudeLorentz, Tabulated>;

  Permittivity() : model_(Constant{1.0}) {}
  Permittivity(Model m);  // validates

  static Permittivity constant(double eps) { return Permittivity(Constant{eps}); }
  static Permittivity drude_lorentz(double wp, double w0, double gamma) {
    return Permittivity(DrudeLorentz{wp, w0, gamma});
  }
  static Permittivity table(std::vector<double> xi, std::vector<double> eps) {
    return Permittivity(Tabulated(std::move(xi), std::move(eps)));
  }

  double operator()(double xi) const;
  bool is_dispersive() const { return !std::holds_alternative<Constant>(model_); }
  /// Value of a non-dispersive model; throws for dispersive ones.
  double constant_value() const;
  const Model& model() const { return model_; }

 private:
  Model model_;
};

/// eps(i xi); xi must be positive.
double eval_permittivity(const Permittivity& model, double xi);

/// delta eps = object - background.
struct Contrast {
  Permittivity object;
  Permittivity background;

  double operator()(double xi) const { return object(xi) - background(xi); }
};

double eval_contrast(const Contrast& c, double xi);

Permittivity permittivity_from_json(const nlohmann::json& j);
nlohmann::json permittivity_to_json(const Permittivity& p);

}  // namespace casimir

#endif
