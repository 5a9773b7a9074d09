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

#include "casimir/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "casimir/montecarlo.hpp"
#include "casimir/planar.hpp"
#include "casimir/verify.hpp"

namespace casimir {

using nlohmann::json;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_number(x).c_str(), nullptr);
}

json quad_json(const QuadResult& q) {
  return {{"value", num(q.value)}, {"err_estimate", num(q.err_estimate)}, {"evals", q.evals},
          {"converged", q.converged}};
}

std::string artifact(const RunConfig& cfg, json results, json diagnostics) {
  json j;
  j["config"] = config_to_json(cfg);
  j["results"] = std::move(results);
  j["diagnostics"] = std::move(diagnostics);
  return j.dump(2) + "\n";
}

SlabPair slab_pair(const RunConfig& cfg) { return SlabPair{cfg.L, cfg.eps, cfg.eps_mid}; }

QuadSpec quad_spec(const RunConfig& cfg) {
  QuadSpec s = planar_default_spec();
  s.rel_tol = cfg.rel_tol;
  return s;
}

}  // namespace

CommandOutput cmd_force(const RunConfig& cfg) {
  const SlabPair g = slab_pair(cfg);
  const QuadSpec s = quad_spec(cfg);
  const double z = *cfg.z;
  const QuadResult sigma = stress_zz_second_order(g, s);
  const StressParts parts = stress_parts_second_order(g, z, s);
  json closed = nullptr, lifshitz = nullptr, lif_diag = nullptr;
  bool ok = sigma.converged && parts.lr_quad.converged;
  if (!g.dispersive()) {
    const double e = cfg.eps.constant_value(), em = cfg.eps_mid.constant_value();
    closed = num(stress_zz_second_order_closed(e, em, cfg.L));
    const QuadResult lf = lifshitz_force_exact(e, em, cfg.L, s);
    lifshitz = num(lf.value);
    lif_diag = quad_json(lf);
    ok = ok && lf.converged;
  }
  json results = {{"sigma_zz_1", num(stress_zz_first_order(g, z))},
                  {"sigma_zz_2", num(sigma.value)},
                  {"closed_form", closed},
                  {"lifshitz_exact", lifshitz},
                  {"parts",
                   {{"LL", num(parts.LL)},
                    {"RR", num(parts.RR)},
                    {"LR", num(parts.LR)},
                    {"RL", num(parts.RL)},
                    {"delta", num(parts.delta_term)}}}};
  json diag = {{"sigma_zz_2", quad_json(sigma)},
               {"parts_lr", quad_json(parts.lr_quad)},
               {"lifshitz", lif_diag},
               {"born_parameter_max", num(born_parameter_max(g))},
               {"converged", ok}};
  return {ok ? 0 : 2, artifact(cfg, results, diag)};
}

CommandOutput cmd_energy_profile(const RunConfig& cfg) {
  const SlabPair g = slab_pair(cfg);
  const QuadSpec s = quad_spec(cfg);
  const DensityProfile p1 = density_profile(g, cfg.z_grid, 1, cfg.margin, s);
  const DensityProfile p2 = density_profile(g, cfg.z_grid, 2, cfg.margin, s);
  bool ok = true;
  double err1 = 0.0, err2 = 0.0;
  for (std::size_t i = 0; i < p1.samples.size(); ++i) {
    ok = ok && p1.samples[i].converged && p2.samples[i].converged;
    err1 = std::max(err1, p1.samples[i].err);
    err2 = std::max(err2, p2.samples[i].err);
  }
  std::ostringstream csv;
  json rows = json::array();
  csv << "z,rho1,rho2,region\n";
  for (std::size_t i = 0; i < p1.samples.size(); ++i) {
    const DensitySample& a = p1.samples[i];
    const DensitySample& b = p2.samples[i];
    csv << format_number(a.z) << ',' << format_number(a.rho) << ',' << format_number(b.rho) << ','
        << region_name(a.region) << '\n';
    rows.push_back({{"z", num(a.z)}, {"rho1", num(a.rho)}, {"rho2", num(b.rho)}, {"region", region_name(a.region)}});
  }
  const int status = ok ? 0 : 2;
  if (cfg.format == "csv") return {status, csv.str()};
  json diag = {{"excluded", p1.excluded},
               {"max_err_rho1", num(err1)},
               {"max_err_rho2", num(err2)},
               {"born_parameter_max", num(born_parameter_max(g))},
               {"converged", ok}};
  return {status, artifact(cfg, {{"rows", rows}}, diag)};
}

CommandOutput cmd_energy_total(const RunConfig& cfg) {
  const SlabPair g = slab_pair(cfg);
  const QuadSpec s = quad_spec(cfg);
  const RegularizedEnergy r = total_energy_second_order_regularized(g, cfg.delta, s);
  const double force = force_from_energy(g, cfg.dL, cfg.delta, s);
  const FirstOrderEnergy e1 = total_energy_first_order(g, 0.0, s);
  const double e = cfg.eps.constant_value(), em = cfg.eps_mid.constant_value();
  json ladder = json::array();
  for (const LadderPoint& p : r.ladder)
    ladder.push_back({{"delta", num(p.delta)},
                      {"surface", num(p.surface)},
                      {"remainder", num(p.remainder)},
                      {"raw_total", num(p.raw_total)}});
  json results = {{"delta_ladder", ladder},
                  {"divergent_coeff", num(r.divergent_coeff)},
                  {"finite_part", num(r.finite_part)},
                  {"force_from_energy", num(force)},
                  {"first_order_total", num(e1.total)},
                  {"closed_form",
                   {{"divergent_coeff", num(closed_form::energy_divergent_coeff(e, em))},
                    {"finite_part", num(closed_form::energy_finite_part(e, em, cfg.L))},
                    {"force", num(stress_zz_second_order_closed(e, em, cfg.L))}}}};
  const bool ok = r.converged && e1.converged;
  json diag = {{"divergent_spread", num(r.divergent_spread)},
               {"residual", num(r.residual)},
               {"converged", ok}};
  return {ok ? 0 : 2, artifact(cfg, results, diag)};
}

CommandOutput cmd_box_density(const RunConfig& cfg) {
  const VolumePair v = VolumePair::box_pair(cfg.L, *cfg.d);
  std::vector<Eigen::Vector3d> grid;
  for (double Z : cfg.z_grid)
    for (double Y : cfg.y_grid)
      for (double X : cfg.x_grid) grid.emplace_back(X, Y, Z);
  McSpec spec;
  spec.n_samples = cfg.n_samples;
  spec.seed = cfg.seed;
  spec.xi_nodes = cfg.xi_nodes;
  const std::vector<DensityRow> rows = density_map(v, cfg.eps.constant_value(), grid, *cfg.lambda, spec);

  std::ostringstream csv;
  json jrows = json::array();
  std::size_t flagged = 0;
  csv << "X,Y,Z,ratio,std_error,n_samples\n";
  for (const DensityRow& r : rows) {
    flagged += r.flagged ? 1 : 0;
    csv << format_number(r.X) << ',' << format_number(r.Y) << ',' << format_number(r.Z) << ','
        << format_number(r.ratio) << ',' << format_number(r.std_error) << ',' << r.n_samples << '\n';
    jrows.push_back({{"X", num(r.X)},
                     {"Y", num(r.Y)},
                     {"Z", num(r.Z)},
                     {"rho", num(r.rho)},
                     {"ratio", num(r.ratio)},
                     {"std_error", num(r.std_error)},
                     {"n_samples", r.n_samples},
                     {"flagged", r.flagged},
                     {"note", r.note}});
  }
  if (cfg.format == "csv") return {0, csv.str()};
  return {0, artifact(cfg, {{"rows", jrows}}, {{"flagged_rows", flagged}})};
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.quick = cfg.quick;
  opt.seed = cfg.seed;
  const std::vector<CheckResult> checks = run_verify(opt);
  std::size_t passed = 0;
  for (const CheckResult& c : checks) passed += c.passed ? 1 : 0;
  const int status = passed == checks.size() ? 0 : 1;

  if (cfg.format == "json") {
    json rows = json::array();
    for (const CheckResult& c : checks)
      rows.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"passed", c.passed},
                      {"measured", num(c.measured)},
                      {"tolerance", num(c.tolerance)}});
    return {status, artifact(cfg, {{"checks", rows}}, {{"passed", passed}, {"total", checks.size()}})};
  }
  std::ostringstream out;
  char line[256];
  for (const CheckResult& c : checks) {
    std::snprintf(line, sizeof line, "%-4s  %-34s  %-12s  tol %-8s  ", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), format_number(c.measured).c_str(), format_number(c.tolerance).c_str());
    out << line << c.statement << '\n';
  }
  out << passed << '/' << checks.size() << " checks passed\n";
  for (const CheckResult& c : checks)
    if (!c.passed) out << "failed: " << c.name << " (" << c.statement << ")\n";
  return {status, out.str()};
}

CommandOutput run_command(const RunConfig& raw) {
  const RunConfig cfg = resolve(raw);
  if (cfg.command == "force") return cmd_force(cfg);
  if (cfg.command == "energy-profile") return cmd_energy_profile(cfg);
  if (cfg.command == "energy-total") return cmd_energy_total(cfg);
  if (cfg.command == "box-density") return cmd_box_density(cfg);
  return cmd_verify(cfg);
}

}  // namespace casimir
