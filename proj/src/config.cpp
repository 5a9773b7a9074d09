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

#include "casimir/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace casimir {

const std::vector<std::string> kCommands = {"force", "energy-profile", "energy-total", "box-density",
                                            "verify"};

std::vector<double> parse_grid(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("grid: cannot parse '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("grid: cannot parse '" + s + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("grid: expected a:b:n");
    const double a = num(parts[0]), b = num(parts[1]), nf = num(parts[2]);
    if (nf < 1 || nf != std::floor(nf)) throw std::invalid_argument("grid: n must be a positive integer");
    const auto n = static_cast<std::size_t>(nf);
    if (n == 1) return {a};
    for (std::size_t i = 0; i < n; ++i) out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(num(item));
  if (out.empty()) throw std::invalid_argument("grid: empty");
  return out;
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["eps"] = permittivity_to_json(c.eps);
  j["eps_mid"] = permittivity_to_json(c.eps_mid);
  j["L"] = c.L;
  j["d"] = c.d ? nlohmann::json(*c.d) : nlohmann::json(nullptr);
  j["lambda"] = c.lambda ? nlohmann::json(*c.lambda) : nlohmann::json(nullptr);
  j["z"] = c.z ? nlohmann::json(*c.z) : nlohmann::json(nullptr);
  j["z_grid"] = c.z_grid;
  j["x_grid"] = c.x_grid;
  j["y_grid"] = c.y_grid;
  j["delta"] = c.delta;
  j["dL"] = c.dL;
  j["margin"] = c.margin;
  j["seed"] = c.seed;
  j["n_samples"] = c.n_samples;
  j["xi_nodes"] = c.xi_nodes;
  j["rel_tol"] = c.rel_tol;
  j["quick"] = c.quick;
  j["format"] = c.format;
  return j;
}

RunConfig config_from_json(const nlohmann::json& in, RunConfig c) {
  const nlohmann::json& j = (in.contains("config") && in["config"].is_object()) ? in["config"] : in;
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  static const std::vector<std::string> known = {
      "command", "eps", "eps_mid", "L", "d", "lambda", "z", "z_grid", "x_grid", "y_grid", "delta", "dL",
      "margin", "seed", "n_samples", "xi_nodes", "rel_tol", "quick", "out", "format"};
  for (const auto& item : j.items())
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      throw std::invalid_argument("config: unknown key '" + item.key() + "'");
  try {
    if (j.contains("command")) c.command = j["command"].get<std::string>();
    if (j.contains("eps")) c.eps = permittivity_from_json(j["eps"]);
    if (j.contains("eps_mid")) c.eps_mid = permittivity_from_json(j["eps_mid"]);
    if (j.contains("L")) c.L = j["L"].get<double>();
    auto opt = [&](const char* key, std::optional<double>& field) {
      if (!j.contains(key)) return;
      field = j[key].is_null() ? std::nullopt : std::optional<double>(j[key].get<double>());
    };
    opt("d", c.d);
    opt("lambda", c.lambda);
    opt("z", c.z);
    if (j.contains("z_grid")) c.z_grid = j["z_grid"].get<std::vector<double>>();
    if (j.contains("x_grid")) c.x_grid = j["x_grid"].get<std::vector<double>>();
    if (j.contains("y_grid")) c.y_grid = j["y_grid"].get<std::vector<double>>();
    if (j.contains("delta")) c.delta = j["delta"].get<double>();
    if (j.contains("dL")) c.dL = j["dL"].get<double>();
    if (j.contains("margin")) c.margin = j["margin"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n_samples")) c.n_samples = j["n_samples"].get<std::size_t>();
    if (j.contains("xi_nodes")) c.xi_nodes = j["xi_nodes"].get<std::size_t>();
    if (j.contains("rel_tol")) c.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("quick")) c.quick = j["quick"].get<bool>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig resolve(RunConfig c) {
  auto fail = [](const std::string& m) { throw std::invalid_argument("config: " + m); };
  if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end())
    fail("unknown command '" + c.command + "'");
  if (!(c.L > 0.0) || !std::isfinite(c.L)) fail("L must be positive");
  if (!(c.rel_tol > 0.0) || c.rel_tol >= 1.0) fail("rel_tol must lie in (0, 1)");
  if (c.format.empty())
    c.format = (c.command == "energy-profile" || c.command == "box-density") ? "csv"
               : (c.command == "verify")                                      ? "text"
                                                                              : "json";
  if (c.format != "csv" && c.format != "json" && c.format != "text") fail("format must be csv or json");
  if (c.format == "text" && c.command != "verify") fail("text format is only available for verify");
  if (c.format == "csv" && (c.command == "force" || c.command == "energy-total" || c.command == "verify"))
    fail("command '" + c.command + "' emits JSON only");

  if (c.command == "force") {
    if (!c.z) c.z = 0.5 * c.L;
    if (!(*c.z > 0.0 && *c.z < c.L)) fail("z must lie inside the gap");
  } else if (c.command == "energy-profile") {
    if (c.z_grid.empty()) {
      for (int i = 0; i <= 60; ++i) c.z_grid.push_back(-c.L + 3.0 * c.L * i / 60.0);
    }
    if (c.margin == 0.0) c.margin = 1e-3 * c.L;
    if (!(c.margin > 0.0)) fail("margin must be positive");
  } else if (c.command == "energy-total") {
    if (c.eps.is_dispersive() || c.eps_mid.is_dispersive())
      fail("energy-total needs non-dispersive media");
    if (c.delta == 0.0) c.delta = 1e-2 * c.L;
    if (c.dL == 0.0) c.dL = 1e-3 * c.L;
    if (!(c.delta > 0.0 && c.delta < 0.25 * c.L)) fail("delta must lie in (0, L/4)");
    if (!(c.dL > 0.0 && c.dL < 0.1 * c.L)) fail("dL must lie in (0, L/10)");
  } else if (c.command == "box-density") {
    if (!c.d && !c.lambda) fail("box-density needs the box side d or lambda = L/d");
    if (c.d && !(*c.d > 0.0)) fail("d must be positive");
    if (c.lambda && !(*c.lambda > 0.0)) fail("lambda must be positive");
    if (c.d && c.lambda) {
      if (std::abs(c.L / *c.d - *c.lambda) > 1e-12 * *c.lambda) fail("L / d and lambda disagree");
    } else if (c.d) {
      c.lambda = c.L / *c.d;
    } else {
      c.d = c.L / *c.lambda;
    }
    if (c.eps.is_dispersive()) fail("box-density needs a non-dispersive eps");
    if (c.eps_mid.is_dispersive() || c.eps_mid.constant_value() != 1.0) fail("box-density needs a vacuum gap");
    if (c.x_grid.empty()) c.x_grid = parse_grid("0:1:11");
    if (c.y_grid.empty()) c.y_grid = {0.0};
    if (c.z_grid.empty()) c.z_grid = {0.2};
    if (c.n_samples == 0) fail("n_samples must be positive");
    if (c.xi_nodes < 2) fail("xi_nodes must be at least 2");
  }
  return c;
}

}  // namespace casimir
