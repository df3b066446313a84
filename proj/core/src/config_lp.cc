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

#include "walras/config_lp.h"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "walras/demand.h"
#include "walras/errors.h"
#include "walras/simplex.h"

namespace walras {
namespace {

// Wraps an ExactSimplex over the configuration-LP rows of (market, M').
class ConfigSolver {
 public:
  ConfigSolver(const Market& market, ItemSet restriction)
      : market_(market),
        restriction_(restriction),
        item_row_(static_cast<std::size_t>(market.num_items()), -1),
        simplex_(Rhs(market, restriction)) {
    int row = market.num_buyers();
    restriction.ForEach([&](int j) { item_row_[static_cast<std::size_t>(j)] = row++; });
  }

  bool Has(int buyer, ItemSet bundle) const {
    return present_.contains({buyer, bundle.bits()});
  }

  void Add(const ConfigColumn& c) {
    lp::Column col;
    col.cost = c.value;
    col.entries.emplace_back(c.buyer, 1);
    c.bundle.ForEach([&](int j) {
      col.entries.emplace_back(item_row_[static_cast<std::size_t>(j)], 1);
    });
    simplex_.AddColumn(std::move(col));
    columns_.push_back(c);
    present_.insert({c.buyer, c.bundle.bits()});
  }

  void Solve() {
    // The LP is feasible (x = 0) and bounded (buyer rows), so the engine
    // cannot report unbounded.
    if (simplex_.Solve() != lp::Status::kOptimal) {
      throw std::logic_error("configuration LP reported unbounded");
    }
  }

  PriceVector ItemPrices() const {
    PriceVector p(market_.num_items());
    const auto& y = simplex_.duals();
    restriction_.ForEach([&](int j) {
      p.Set(j, y[static_cast<std::size_t>(item_row_[static_cast<std::size_t>(j)])]);
    });
    return p;
  }

  const Rational& BuyerDual(int i) const {
    return simplex_.duals()[static_cast<std::size_t>(i)];
  }

  LPSolution Extract(int rounds) const {
    LPSolution sol;
    sol.restriction = restriction_;
    sol.optimal_value = simplex_.objective();
    const std::vector<Rational> x = simplex_.Primal();
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (x[c].is_zero()) continue;
      sol.primal.push_back({columns_[c].buyer, columns_[c].bundle, x[c]});
    }
    std::sort(sol.primal.begin(), sol.primal.end(),
              [](const FractionalEntry& a, const FractionalEntry& b) {
                return a.buyer != b.buyer ? a.buyer < b.buyer
                                          : a.bundle < b.bundle;
              });
    const auto& y = simplex_.duals();
    sol.buyer_duals.assign(y.begin(), y.begin() + market_.num_buyers());
    sol.item_duals = ItemPrices().values();
    sol.columns = simplex_.num_columns();
    sol.pivots = simplex_.iterations();
    sol.rounds = rounds;
    return sol;
  }

 private:
  static std::vector<Rational> Rhs(const Market& market, ItemSet restriction) {
    return std::vector<Rational>(
        static_cast<std::size_t>(market.num_buyers() + restriction.size()),
        Rational(1));
  }

  const Market& market_;
  ItemSet restriction_;
  std::vector<int> item_row_;
  lp::ExactSimplex simplex_;
  std::vector<ConfigColumn> columns_;
  std::set<std::pair<int, std::uint64_t>> present_;
};

void CheckRestriction(const Market& market, ItemSet restriction) {
  if (!restriction.IsSubsetOf(market.all_items())) {
    throw InputError("restriction contains items outside the market");
  }
}

}  // namespace

ConfigLP::ConfigLP(const Market& market, ItemSet restriction,
                   std::vector<ConfigColumn> columns)
    : market_(&market), restriction_(restriction), columns_(std::move(columns)) {
  for (const ConfigColumn& c : columns_) {
    if (!c.bundle.IsSubsetOf(restriction_)) {
      throw PreconditionError("configuration column outside the restriction");
    }
  }
}

ConfigLP BuildConfigLP(const Market& market, ItemSet restriction,
                       const Caps& caps) {
  CheckRestriction(market, restriction);
  std::vector<ConfigColumn> columns;
  for (int i = 0; i < market.num_buyers(); ++i) {
    const Valuation& v = market.buyer(i);
    if (const auto* sm = v.As<SingleMinded>()) {
      if (sm->desired.IsSubsetOf(restriction)) {
        columns.push_back({i, sm->desired, sm->value});
      }
      continue;
    }
    if (restriction.size() > caps.lp_column_items) {
      throw CapExceeded("full configuration LP over " +
                        std::to_string(restriction.size()) +
                        " items exceeds the column cap of " +
                        std::to_string(caps.lp_column_items));
    }
    ForEachSubset(restriction, [&](ItemSet s) {
      if (!s.empty()) columns.push_back({i, s, v.Value(s)});
    });
  }
  return ConfigLP(market, restriction, std::move(columns));
}

LPSolution SolveExact(const ConfigLP& lp) {
  ConfigSolver solver(lp.market(), lp.restriction());
  for (const ConfigColumn& c : lp.columns()) solver.Add(c);
  solver.Solve();
  return solver.Extract(1);
}

LPSolution SolveColumnGeneration(const Market& market, ItemSet restriction,
                                 const Caps& caps) {
  CheckRestriction(market, restriction);
  ConfigSolver solver(market, restriction);
  const int n = market.num_buyers();

  // Value tables pay off once the pricing enumeration is large.
  std::vector<std::optional<ValueTable>> tables(static_cast<std::size_t>(n));
  if (market.num_items() <= caps.sweep_items && restriction.size() >= 8) {
    for (int i = 0; i < n; ++i) {
      if (market.buyer(i).kind() != ValuationKind::kSingleMinded) {
        tables[static_cast<std::size_t>(i)].emplace(market.buyer(i), caps);
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    const Valuation& v = market.buyer(i);
    if (const auto* sm = v.As<SingleMinded>()) {
      if (sm->desired.IsSubsetOf(restriction)) {
        solver.Add({i, sm->desired, sm->value});
      }
      continue;
    }
    restriction.ForEach([&](int j) {
      const ItemSet s = ItemSet::Singleton(j);
      solver.Add({i, s, v.Value(s)});
    });
    if (restriction.size() > 1) solver.Add({i, restriction, v.Value(restriction)});
  }

  int rounds = 0;
  while (true) {
    solver.Solve();
    ++rounds;
    const PriceVector prices = solver.ItemPrices();
    bool added = false;
    for (int i = 0; i < n; ++i) {
      const auto& table = tables[static_cast<std::size_t>(i)];
      BestResponse br =
          table ? ComputeBestResponse(*table, prices, restriction)
                : ComputeBestResponse(market.buyer(i), prices, restriction, caps);
      if (br.utility > solver.BuyerDual(i) && !solver.Has(i, br.bundle)) {
        Rational value = table ? (*table)[br.bundle]
                               : market.buyer(i).Value(br.bundle);
        solver.Add({i, br.bundle, std::move(value)});
        added = true;
      }
    }
    if (!added) break;
  }
  return solver.Extract(rounds);
}

LPSolution SolveFractional(const Market& market, ItemSet restriction,
                           const Caps& caps) {
  bool full = restriction.size() <= caps.lp_column_items;
  if (!full) {
    full = market.AllOfKind(ValuationKind::kSingleMinded);
  }
  if (full) return SolveExact(BuildConfigLP(market, restriction, caps));
  return SolveColumnGeneration(market, restriction, caps);
}

bool IsConfigFeasible(const Market& market, ItemSet restriction,
                      const std::vector<FractionalEntry>& entries) {
  std::vector<Rational> buyer_load(static_cast<std::size_t>(market.num_buyers()));
  std::vector<Rational> item_load(static_cast<std::size_t>(market.num_items()));
  for (const FractionalEntry& e : entries) {
    if (e.weight.sign() < 0) return false;
    if (e.buyer < 0 || e.buyer >= market.num_buyers()) return false;
    if (!e.bundle.IsSubsetOf(restriction)) return false;
    buyer_load[static_cast<std::size_t>(e.buyer)] += e.weight;
    e.bundle.ForEach([&](int j) { item_load[static_cast<std::size_t>(j)] += e.weight; });
  }
  for (const Rational& l : buyer_load) {
    if (l > Rational(1)) return false;
  }
  for (const Rational& l : item_load) {
    if (l > Rational(1)) return false;
  }
  return true;
}

Rational FractionalWelfare(const Market& market,
                           const std::vector<FractionalEntry>& entries) {
  Rational total;
  for (const FractionalEntry& e : entries) {
    total += e.weight * market.buyer(e.buyer).Value(e.bundle);
  }
  return total;
}

}  // namespace walras
