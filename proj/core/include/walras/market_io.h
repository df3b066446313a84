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

#ifndef WALRAS_MARKET_IO_H_
#define WALRAS_MARKET_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "walras/market.h"
#include "walras/stability.h"

namespace walras {

inline constexpr int kMarketSchemaVersion = 1;

// Market documents are JSON:
//
//   {"schema": 1, "m": 2, "buyers": [
//     {"type": "additive", "values": ["1", "3/2"]},
//     {"type": "budget_additive", "values": ["3", "4"], "budget": "5"},
//     {"type": "single_minded", "items": [0, 1], "value": "7"},
//     {"type": "h_plus_eps", "epsilon": "1/240",
//      "inner": {"type": "bucket_xos", "buckets": [[0, 1], [2, 3]]}}, ...]}
//
// Rationals are "p/q" strings ("p" when q = 1); JSON integers are accepted on
// input, floats and decimal strings are not. Item indices are 0-based.
// Every malformed document raises InputError.
Market ParseMarket(std::string_view text);
Market LoadMarket(const std::string& path);
// Canonical rendering: fixed key order, two-space indent, trailing newline.
// ParseMarket(RenderMarket(x)) reproduces x and re-rendering is byte-stable.
std::string RenderMarket(const Market& market);

// Outcome documents:
//   {"allocation": [[0, 2], []], "unsold": [1], "prices": ["1", "0", "7/2"]}
// "unsold" is derived and optional on input; "prices" may be omitted when only
// an allocation is needed.
struct OutcomeDocument {
  Allocation allocation;
  std::optional<PriceVector> prices;
};
OutcomeDocument ParseOutcome(std::string_view text, const Market& market);
OutcomeDocument LoadOutcome(const std::string& path, const Market& market);
std::string RenderOutcome(const Allocation& allocation,
                          const std::optional<PriceVector>& prices);

// Reads a whole file; InputError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace walras

#endif  // WALRAS_MARKET_IO_H_
