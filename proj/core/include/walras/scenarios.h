// Copyright 2026 The Walras Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WALRAS_SCENARIOS_H_
#define WALRAS_SCENARIOS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walras/caps.h"
#include "walras/rational.h"

namespace walras {

// One named assertion of a reproduction run.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  // Exact quantities computed along the way, as (key, "p/q") pairs in the
  // order they were produced.
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Check> checks;
  double seconds = 0;  // wall-clock, informational only

  bool passed() const;
  void Value(std::string key, const Rational& q);
  void Value(std::string key, std::string text);
  // Records the check and returns `pass`.
  bool Expect(std::string name, bool pass, std::string detail = {});
};

// Unit-demand versus symmetric-XOS buyers over m items.
ScenarioReport ReproduceXos(int m, const Rational& delta, const Caps& caps = {});

// Grid instance with n single-minded buyers; OPT, best stable outcome, ratio.
ScenarioReport ReproduceSingleMinded(int n, const Caps& caps = {});

// Two submodular bucket buyers with k buckets of k items (default epsilon).
// k >= 4: submodularity, fractional certificate on the full set and the
// brute-force integral optimum. k <= 3: every restriction solved exactly and
// the LP verdicts cross-checked against the price LP.
ScenarioReport ReproduceSubmodular(int k, const Caps& caps = {});
ScenarioReport SubmodularCertificate(int k, const Caps& caps = {});
ScenarioReport SubmodularSweep(int k, const Caps& caps = {});

// Seeded random two-buyer budget-additive instances with 1 <= m <= max_items.
ScenarioReport ReproduceBudgetAdditive(int count, std::uint64_t seed,
                                       int max_items = 6, const Caps& caps = {});

// Random mixed markets: LP verdict versus price-LP verdict on every
// restriction, and every extracted outcome re-verified.
ScenarioReport FuzzStableExistence(int count, std::uint64_t seed, int max_buyers,
                                   int max_items, const Caps& caps = {});

// Exact versus column-generation LP values, strong duality, and gap 1 on
// additive and unit-demand markets.
ScenarioReport SolverConsistency(int count, std::uint64_t seed,
                                 const Caps& caps = {});

// Greedy zero-utility pricing on the grid instances n_lo..n_hi and on random
// single-minded markets.
ScenarioReport GreedySingleMinded(int n_lo, int n_hi, int random_count,
                                  std::uint64_t seed, const Caps& caps = {});

}  // namespace walras

#endif  // WALRAS_SCENARIOS_H_
