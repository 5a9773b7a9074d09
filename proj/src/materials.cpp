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

#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <math.h>  // pchip.hpp calls isnan unqualified
#include <boost/math/interpolators/pchip.hpp>

namespace casimir {

namespace {

void require_xi(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi))
    throw std::domain_error("permittivity: imaginary frequency must be positive");
}

}  // namespace

Tabulated::Tabulated(std::vector<double> xi, std::vector<double> eps)
    : xi_(std::move(xi)), eps_(std::move(eps)) {
  if (xi_.size() != eps_.size() || xi_.size() < 2)
    throw std::invalid_argument("table: need at least two (xi, eps) pairs of equal length");
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (!(xi_[i] > 0.0)) throw std::invalid_argument("table: xi nodes must be positive");
    if (i > 0 && !(xi_[i] > xi_[i - 1]))
      throw std::invalid_argument("table: xi nodes must be strictly increasing");
    if (!(eps_[i] >= 1.0)) throw std::invalid_argument("table: eps must be >= 1");
    if (i > 0 && eps_[i] > eps_[i - 1])
      throw std::invalid_argument("table: eps(i xi) must be non-increasing");
  }
  if (xi_.size() >= 4) {
    auto x = xi_;
    auto y = eps_;
    cubic_ = boost::math::interpolators::pchip<std::vector<double>>(std::move(x), std::move(y));
  }
}

double Tabulated::operator()(double xi) const {
  if (xi <= xi_.front()) return eps_.front();
  if (xi >= xi_.back()) return eps_.back();
  if (cubic_) return cubic_(xi);
  // Too few nodes for a cubic: piecewise linear is monotone as well.
  auto it = std::upper_bound(xi_.begin(), xi_.end(), xi);
  std::size_t i = static_cast<std::size_t>(it - xi_.begin());
  double t = (xi - xi_[i - 1]) / (xi_[i] - xi_[i - 1]);
  return eps_[i - 1] + t * (eps_[i] - eps_[i - 1]);
}

Permittivity::Permittivity(Model m) : model_(std::move(m)) {
  if (auto* c = std::get_if<Constant>(&model_)) {
    if (!(c->eps >= 1.0) || !std::isfinite(c->eps))
      throw std::invalid_argument("constant permittivity must be finite and >= 1");
  } else if (auto* d = std::get_if<DrudeLorentz>(&model_)) {
    if (!(d->wp >= 0.0) || !(d->w0 >= 0.0) || !(d->gamma >= 0.0))
      throw std::invalid_argument("drude_lorentz parameters must be non-negative");
  }
}

double Permittivity::operator()(double xi) const {
  require_xi(xi);
  return std::visit(
      [xi](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return m.eps;
        } else if constexpr (std::is_same_v<T, DrudeLorentz>) {
          return 1.0 + m.wp * m.wp / (m.w0 * m.w0 + xi * xi + m.gamma * xi);
        } else {
          return m(xi);
        }
      },
      model_);
}

double Permittivity::constant_value() const {
  if (auto* c = std::get_if<Constant>(&model_)) return c->eps;
  throw std::domain_error("operation requires a non-dispersive (constant) permittivity");
}

double eval_permittivity(const Permittivity& model, double xi) { return model(xi); }

double eval_contrast(const Contrast& c, double xi) { return c(xi); }

Permittivity permittivity_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Permittivity::constant(j.get<double>());
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") return Permittivity::constant(j.at("eps").get<double>());
  if (type == "drude_lorentz")
    return Permittivity::drude_lorentz(j.at("wp").get<double>(), j.value("w0", 0.0),
                                       j.value("gamma", 0.0));
  if (type == "table")
    return Permittivity::table(j.at("xi").get<std::vector<double>>(),
                               j.at("eps").get<std::vector<double>>());
  throw std::invalid_argument("unknown material type '" + type + "'");
}

nlohmann::json permittivity_to_json(const Permittivity& p) {
  return std::visit(
      [](const auto& m) -> nlohmann::json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return {{"type", "constant"}, {"eps", m.eps}};
        } else if constexpr (std::is_same_v<T, DrudeLorentz>) {
          return {{"type", "drude_lorentz"}, {"wp", m.wp}, {"w0", m.w0}, {"gamma", m.gamma}};
        } else {
          return {{"type", "table"}, {"xi", m.xi()}, {"eps", m.eps()}};
        }
      },
      p.model());
}

}  // namespace casimir
