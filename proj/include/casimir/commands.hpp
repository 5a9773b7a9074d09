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

#ifndef CASIMIR_COMMANDS_HPP
#define CASIMIR_COMMANDS_HPP

#include <string>

#include "casimir/config.hpp"

namespace casimir {

/// Output of one command: the artifact text and the process exit status.
struct CommandOutput {
  int status = 0;
  std::string text;
};

CommandOutput cmd_force(const RunConfig& cfg);
CommandOutput cmd_energy_profile(const RunConfig& cfg);
CommandOutput cmd_energy_total(const RunConfig& cfg);
CommandOutput cmd_box_density(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);

/// Resolves the config and dispatches on cfg.command.
CommandOutput run_command(const RunConfig& cfg);

/// Twelve significant digits, "nan"/"inf" spelled out.
std::string format_number(double x);

}  // namespace casimir

#endif
