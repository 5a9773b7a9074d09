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

#ifndef CASIMIR_VERIFY_HPP
#define CASIMIR_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "casimir/green.hpp"

namespace casimir {

/// The kernel families exercised by the identity checks. Swappable so a
/// test can hand in a deliberately broken kernel.
struct KernelSet {
  std::function<KernelPair(const SpectralPoint&)> m1;
  std::function<KernelPair(const SpectralPoint&)> m1_delta;
  std::function<KernelPair(const SpectralPoint&)> m2_lr;
  std::function<KernelPair(const SpectralPoint&)> m2_ll;
  std::function<KernelPair(const SpectralPoint&, int)> g1;
};

KernelSet default_kernels();

struct CheckResult {
  std::string name;       // identifier, e.g. "m1_stress_cancellation"
  std::string statement;  // the physical statement being checked
  bool passed = false;
  double measured = 0.0;  // worst deviation observed
  double tolerance = 0.0;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;  // kernel identities only
  std::uint64_t seed = 1;
  KernelSet kernels = default_kernels();
};

std::vector<CheckResult> run_verify(const VerifyOptions& opt = {});

}  // namespace casimir

#endif
