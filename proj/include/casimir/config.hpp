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

#ifndef CASIMIR_CONFIG_HPP
#define CASIMIR_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir/materials.hpp"

namespace casimir {

/// Everything a command needs. Zero-valued tuning fields mean "derive from
/// the geometry" and are filled in by resolve().
struct RunConfig {
  std::string command;
  Permittivity eps = Permittivity::constant(2.0);
  Permittivity eps_mid = Permittivity::constant(1.0);
  double L = 1.0;
  std::optional<double> d;
  std::optional<double> lambda;
  std::optional<double> z;       // force: point for the LR/LL split
  std::vector<double> z_grid;    // energy-profile: z values; box-density: Z values
  std::vector<double> x_grid;    // box-density: X values
  std::vector<double> y_grid;    // box-density: Y values
  double delta = 0.0;
  double dL = 0.0;
  double margin = 0.0;
  std::uint64_t seed = 1;
  std::size_t n_samples = 100000;
  std::size_t xi_nodes = 48;
  double rel_tol = 1e-7;
  bool quick = false;
  std::string out;
  std::string format;
};

extern const std::vector<std::string> kCommands;

/// Parses "a:b:n" (n evenly spaced points, both ends included) or a
/// comma-separated list.
std::vector<double> parse_grid(const std::string& text);

/// The output path is left out so an artifact can be re-run elsewhere.
nlohmann::json config_to_json(const RunConfig& c);
/// Overrides the fields present in `j` on top of `base`. Accepts a bare
/// config object or an artifact carrying one under "config".
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

/// Fills derived defaults and rejects incomplete or inconsistent configs
/// with std::invalid_argument.
RunConfig resolve(RunConfig c);

}  // namespace casimir

#endif
