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
#ifndef CASIMIR_TEST_REL_APPROX_HPP
#define CASIMIR_TEST_REL_APPROX_HPP

#include <doctest.h>

// doctest::Approx compares against epsilon * (1 + max|x|), which is
// effectively absolute for small quantities. These checks are relative; the
// tiny scale only keeps an exact 0 == 0 from failing the strict comparison.
inline doctest::Approx Rel(double value) { return doctest::Approx(value).scale(1e-290); }

#endif
