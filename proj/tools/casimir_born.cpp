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

// casimir-born: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/commands.hpp"
#include "casimir/config.hpp"

namespace {

casimir::Permittivity parse_material(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("cannot parse material '" + text + "'");
  return casimir::permittivity_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir forces and energy densities from the Born series of the dielectric contrast"};
  app.set_version_flag("--version", "casimir-born 0.1.0");

  std::string command, eps, eps_mid, z_grid, x_grid, y_grid, config_path;
  casimir::RunConfig cfg;
  double L = cfg.L, d = 0, lambda = 0, z = 0;

  app.add_option("command", command, "force | energy-profile | energy-total | box-density | verify")
      ->check(CLI::IsMember(casimir::kCommands));
  app.add_option("--eps", eps, "slab permittivity: a number or a JSON material descriptor");
  app.add_option("--eps-mid", eps_mid, "gap permittivity: a number or a JSON material descriptor");
  app.add_option("--L", L, "gap width");
  auto* opt_d = app.add_option("--d", d, "box side (box-density)");
  auto* opt_lambda = app.add_option("--lambda", lambda, "L / d (box-density)");
  auto* opt_z = app.add_option("--z", z, "point inside the gap for the force decomposition");
  app.add_option("--z-grid", z_grid, "z values (energy-profile) or Z = z/d values (box-density): a:b:n or a,b,c");
  app.add_option("--x-grid", x_grid, "X = x/d values (box-density)");
  app.add_option("--y-grid", y_grid, "Y = y/d values (box-density)");
  app.add_option("--delta", cfg.delta, "surface cutoff for the total energy (0: L/100)");
  app.add_option("--dL", cfg.dL, "finite-difference step for the force from energy (0: L/1000)");
  app.add_option("--margin", cfg.margin, "excluded distance from the plates in profiles (0: L/1000)");
  app.add_option("--seed", cfg.seed, "Monte Carlo seed");
  app.add_option("--n-samples", cfg.n_samples, "Monte Carlo samples per body");
  app.add_option("--xi-nodes", cfg.xi_nodes, "Gauss-Legendre nodes in xi for Monte Carlo");
  app.add_option("--rel-tol", cfg.rel_tol, "relative quadrature tolerance");
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "csv | json (verify also accepts text)");
  app.add_option("--config", config_path, "JSON config or artifact; overrides flags");
  app.add_flag("--quick", cfg.quick, "verify: kernel identities only");

  CLI11_PARSE(app, argc, argv);

  casimir::CommandOutput result;
  try {
    cfg.command = command;
    if (!eps.empty()) cfg.eps = parse_material(eps);
    if (!eps_mid.empty()) cfg.eps_mid = parse_material(eps_mid);
    cfg.L = L;
    if (*opt_d) cfg.d = d;
    if (*opt_lambda) cfg.lambda = lambda;
    if (*opt_z) cfg.z = z;
    if (!z_grid.empty()) cfg.z_grid = casimir::parse_grid(z_grid);
    if (!x_grid.empty()) cfg.x_grid = casimir::parse_grid(x_grid);
    if (!y_grid.empty()) cfg.y_grid = casimir::parse_grid(y_grid);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config file " + config_path);
      const nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
      if (j.is_discarded()) throw std::invalid_argument("config file is not valid JSON");
      cfg = casimir::config_from_json(j, cfg);
    }
    if (cfg.command.empty()) throw std::invalid_argument("no command given");
    result = casimir::run_command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "casimir-born: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "casimir-born: cannot write " << cfg.out << '\n';
      return 1;
    }
    out << result.text;
  }
  if (result.status == 2) std::cerr << "casimir-born: quadrature did not converge\n";
  return result.status;
}
