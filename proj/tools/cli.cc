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

#include "cli.h"

#include <chrono>
#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "walras/budget_additive.h"
#include "walras/config_lp.h"
#include "walras/errors.h"
#include "walras/generators.h"
#include "walras/integral.h"
#include "walras/market_io.h"
#include "walras/scenarios.h"
#include "walras/single_minded.h"
#include "walras/stability.h"

namespace walras::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::optional<int> cap;
  bool approx = false;
  bool timing = false;
};

// Builds report fields; rationals are "p/q" strings with optional decimal
// companions under "<key>_approx".
class Writer {
 public:
  explicit Writer(const Options& opts) : opts_(opts) {}

  void Q(Json& obj, const std::string& key, const Rational& q) const {
    obj[key] = q.ToString();
    if (opts_.approx) obj[key + "_approx"] = q.ToDecimal(12);
  }
  void Qs(Json& obj, const std::string& key, const std::vector<Rational>& qs) const {
    Json arr = Json::array();
    Json dec = Json::array();
    for (const Rational& q : qs) {
      arr.push_back(q.ToString());
      dec.push_back(q.ToDecimal(12));
    }
    obj[key] = std::move(arr);
    if (opts_.approx) obj[key + "_approx"] = std::move(dec);
  }
  static Json Set(ItemSet s) {
    Json arr = Json::array();
    s.ForEach([&](int j) { arr.push_back(j); });
    return arr;
  }
  Json Outcome(const Allocation& x, const PriceVector* prices) const {
    Json obj;
    Json bundles = Json::array();
    for (ItemSet b : x.bundles()) bundles.push_back(Set(b));
    obj["allocation"] = std::move(bundles);
    obj["unsold"] = Set(x.unsold());
    if (prices != nullptr) Qs(obj, "prices", prices->values());
    return obj;
  }

 private:
  const Options& opts_;
};

Caps CapsFor(const Options& opts) {
  return opts.cap ? Caps::WithItemCap(*opts.cap) : Caps{};
}

// "[0,2,3]" or "0,2,3" are index lists; "0x1d", "0b1101" and plain integers
// are bitmasks.
ItemSet ParseItems(const std::string& text, int m) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  const bool list = s.find(',') != std::string::npos ||
                    (!s.empty() && (s.front() == '[' || s.front() == '{'));
  ItemSet out;
  if (list) {
    if (!s.empty() && (s.front() == '[' || s.front() == '{')) {
      const char close = s.front() == '[' ? ']' : '}';
      if (s.back() != close) throw InputError("--items: unbalanced brackets");
      s = s.substr(1, s.size() - 2);
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() && s.empty()) break;
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("--items: bad index \"" + tok + "\"");
      }
      const int j = std::stoi(tok);
      if (j >= m) throw InputError("--items: index " + tok + " out of range");
      out = out.With(j);
    }
    return out;
  }
  int base = 10;
  std::string digits = s;
  if (s.rfind("0x", 0) == 0) {
    base = 16;
    digits = s.substr(2);
  } else if (s.rfind("0b", 0) == 0) {
    base = 2;
    digits = s.substr(2);
  }
  if (digits.empty()) throw InputError("--items: empty mask");
  std::size_t used = 0;
  std::uint64_t mask = 0;
  try {
    mask = std::stoull(digits, &used, base);
  } catch (const std::exception&) {
    throw InputError("--items: bad mask \"" + text + "\"");
  }
  if (used != digits.size()) throw InputError("--items: bad mask \"" + text + "\"");
  const ItemSet set(mask);
  if (!set.IsSubsetOf(ItemSet::Full(m))) {
    throw InputError("--items: mask has items beyond m");
  }
  return set;
}

ItemSet Restriction(const std::optional<std::string>& items, const Market& market) {
  return items ? ParseItems(*items, market.num_items()) : market.all_items();
}

// Accepts a bare outcome document or a report whose results hold one.
OutcomeDocument LoadOutcomeOrReport(const std::string& path, const Market& market) {
  const std::string text = ReadFile(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("results") && doc["results"].is_object() &&
      doc["results"].contains("outcome")) {
    return ParseOutcome(doc["results"]["outcome"].dump(), market);
  }
  return ParseOutcome(text, market);
}

Rational ParseRationalArg(const std::string& text, const char* flag) {
  try {
    return Rational::Parse(text);
  } catch (const InputError& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

RandomClass ParseClass(const std::string& name) {
  static const std::pair<const char*, RandomClass> kNames[] = {
      {"additive", RandomClass::kAdditive},
      {"unit_demand", RandomClass::kUnitDemand},
      {"budget_additive", RandomClass::kBudgetAdditive},
      {"xos", RandomClass::kXos},
      {"single_minded", RandomClass::kSingleMinded},
      {"symmetric", RandomClass::kSymmetric},
      {"explicit", RandomClass::kExplicit},
      {"mixed", RandomClass::kMixed},
  };
  for (const auto& [key, cls] : kNames) {
    if (name == key) return cls;
  }
  throw InputError("unknown class \"" + name + "\"");
}

Json ScenarioJson(const ScenarioReport& r) {
  Json out;
  out["scenario"] = r.name;
  Json values;
  for (const auto& [k, v] : r.values) values[k] = v;
  out["values"] = std::move(values);
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  out["passed"] = r.passed();
  return out;
}

// Everything a subcommand hands back to the dispatcher.
struct Result {
  Result() = default;
  Result(Json r, int c = kExitOk) : results(std::move(r)), code(c) {}  // NOLINT

  Json results;
  int code = kExitOk;
  // Set when the command prints a document instead of a report.
  std::optional<std::string> raw;
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact item-pricing equilibria in combinatorial markets", "walras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", opts.cap, "Override every item-count cap with m")
      ->check(CLI::Range(0, 64));
  app.add_flag("--approx", opts.approx,
               "Add display-only decimal companions (<key>_approx)");
  app.add_flag("--timing", opts.timing, "Include wall-clock time in the report");

  std::string market_path;
  std::string outcome_path;
  std::optional<std::string> items;
  std::function<Result()> action;
  std::string command;
  Json inputs;

  auto market_cmd = [&](const char* name, const char* help, bool with_items) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("market", market_path, "Market JSON file")->required();
    if (with_items) {
      sub->add_option("--items", items, "Restriction M': index list or bitmask");
    }
    return sub;
  };
  const Writer w(opts);

  auto load = [&] {
    inputs["market"] = market_path;
    return LoadMarket(market_path);
  };

  // gap
  market_cmd("gap", "Fractional and integral optimum on M'", true)->callback([&] {
    command = "gap";
    action = [&]() -> Result {
      const Market market = load();
      const ItemSet s = Restriction(items, market);
      const GapReport g = ComputeGap(market, s, CapsFor(opts));
      Json r;
      r["restriction"] = Writer::Set(s);
      w.Q(r, "fractional", g.fractional.optimal_value);
      w.Q(r, "integral", g.integral.welfare);
      w.Q(r, "gap", g.gap);
      r["integral_allocation"] = w.Outcome(g.integral.allocation, nullptr);
      Json frac = Json::array();
      for (const FractionalEntry& e : g.fractional.primal) {
        Json row;
        row["buyer"] = e.buyer;
        row["bundle"] = Writer::Set(e.bundle);
        w.Q(row, "weight", e.weight);
        frac.push_back(std::move(row));
      }
      r["fractional_solution"] = std::move(frac);
      w.Qs(r, "buyer_duals", g.fractional.buyer_duals);
      w.Qs(r, "item_duals", g.fractional.item_duals);
      Json lp;
      lp["columns"] = g.fractional.columns;
      lp["pivots"] = g.fractional.pivots;
      lp["rounds"] = g.fractional.rounds;
      r["lp"] = std::move(lp);
      return {std::move(r)};
    };
  });

  // stable-exists
  market_cmd("stable-exists", "Does a stable outcome sell exactly M'?", true)
      ->callback([&] {
        command = "stable-exists";
        action = [&]() -> Result {
          const Market market = load();
          const ItemSet s = Restriction(items, market);
          const GapReport g = ComputeGap(market, s, CapsFor(opts));
          const bool stable = g.gap == Rational(1);
          Json r;
          r["restriction"] = Writer::Set(s);
          r["stable"] = stable;
          w.Q(r, "fractional", g.fractional.optimal_value);
          w.Q(r, "integral", g.integral.welfare);
          w.Q(r, "gap", g.gap);
          return {std::move(r), stable ? kExitOk : kExitNegative};
        };
      });

  // extract
  market_cmd("extract", "Stable outcome selling M' (when one exists)", true)
      ->callback([&] {
        command = "extract";
        action = [&]() -> Result {
          const Market market = load();
          const ItemSet s = Restriction(items, market);
          const Caps caps = CapsFor(opts);
          Json r;
          r["restriction"] = Writer::Set(s);
          if (!StableExistsOn(market, s, caps)) {
            r["stable"] = false;
            return {std::move(r), kExitNegative};
          }
          const ExtractedOutcome ex = ExtractStableOutcome(market, s, caps);
          r["stable"] = true;
          r["sold"] = Writer::Set(ex.sold);
          w.Q(r, "welfare", ex.welfare);
          r["outcome"] = w.Outcome(ex.outcome.allocation, &ex.outcome.prices);
          return {std::move(r)};
        };
      });

  // verify
  {
    CLI::App* sub = market_cmd("verify", "Check an outcome for stability", false);
    sub->add_option("outcome", outcome_path, "Outcome or report JSON file")->required();
    sub->callback([&] {
      command = "verify";
      action = [&]() -> Result {
        const Market market = load();
        inputs["outcome"] = outcome_path;
        const OutcomeDocument doc = LoadOutcomeOrReport(outcome_path, market);
        if (!doc.prices) throw InputError("outcome has no prices to verify");
        const StabilityReport rep =
            VerifyStable(market, doc.allocation, *doc.prices, CapsFor(opts));
        Json r;
        r["stable"] = rep.stable;
        if (rep.witness) {
          Json wit;
          wit["buyer"] = rep.witness->buyer;
          wit["bundle"] = Writer::Set(rep.witness->bundle);
          w.Q(wit, "utility", rep.witness->utility);
          w.Q(wit, "held_utility", rep.witness->held_utility);
          r["witness"] = std::move(wit);
        }
        w.Qs(r, "max_utilities", rep.max_utilities);
        w.Q(r, "welfare", Welfare(market, doc.allocation));
        return {std::move(r), rep.stable ? kExitOk : kExitNegative};
      };
    });
  }

  // best-stable
  market_cmd("best-stable", "Welfare-best stable outcome and stability ratio", false)
      ->callback([&] {
        command = "best-stable";
        action = [&]() -> Result {
          const Market market = load();
          const Caps caps = CapsFor(opts);
          const BestStable best = BestStableOutcome(market, caps);
          const Rational opt = IntegralOpt(market, market.all_items(), caps).welfare;
          Json r;
          w.Q(r, "welfare", best.welfare);
          r["sold"] = Writer::Set(best.outcome.sold);
          r["outcome"] =
              w.Outcome(best.outcome.outcome.allocation, &best.outcome.outcome.prices);
          w.Q(r, "opt", opt);
          if (best.welfare.is_zero() && !opt.is_zero()) {
            r["ratio"] = "inf";
          } else {
            w.Q(r, "ratio", best.welfare.is_zero() ? Rational(1) : opt / best.welfare);
          }
          return {std::move(r)};
        };
      });

  // prices-for
  {
    CLI::App* sub =
        market_cmd("prices-for", "Minimum-sum prices supporting an allocation", false);
    sub->add_option("outcome", outcome_path, "Outcome JSON (prices ignored)")
        ->required();
    sub->callback([&] {
      command = "prices-for";
      action = [&]() -> Result {
        const Market market = load();
        inputs["outcome"] = outcome_path;
        const OutcomeDocument doc = LoadOutcomeOrReport(outcome_path, market);
        const auto prices = PricesForAllocation(market, doc.allocation, CapsFor(opts));
        Json r;
        r["feasible"] = prices.has_value();
        if (prices) {
          r["outcome"] = w.Outcome(doc.allocation, &*prices);
          w.Q(r, "total_price", prices->Total(market.all_items()));
        }
        return {std::move(r), prices ? kExitOk : kExitNegative};
      };
    });
  }

  // approx-ba
  market_cmd("approx-ba", "Stable 4-approximation for two budget-additive buyers",
             false)
      ->callback([&] {
        command = "approx-ba";
        action = [&]() -> Result {
          const Market market = load();
          const BudgetAdditiveResult res = BudgetAdditiveApprox(market, CapsFor(opts));
          Json r;
          r["case"] = res.case_tag;
          r["high_budget_buyer"] = res.high_budget_buyer;
          w.Q(r, "welfare", res.welfare);
          w.Q(r, "opt_upper", res.opt_upper);
          r["s1"] = Writer::Set(res.s1);
          r["d2"] = Writer::Set(res.d2);
          w.Q(r, "budget1", res.budget1);
          w.Q(r, "budget2", res.budget2);
          w.Q(r, "total_value1", res.total_value1);
          r["outcome"] = w.Outcome(res.allocation, &res.prices);
          return {std::move(r)};
        };
      });

  // greedy-sm
  market_cmd("greedy-sm", "Zero-utility prices and greedy allocation", false)
      ->callback([&] {
        command = "greedy-sm";
        action = [&]() -> Result {
          const Market market = load();
          const GreedyStableResult res = SingleMindedGreedyStable(market, CapsFor(opts));
          Json r;
          w.Q(r, "welfare", res.welfare);
          r["tight_order"] = res.tight_order;
          r["winners"] = res.winners;
          r["outcome"] = w.Outcome(res.outcome.allocation, &res.outcome.prices);
          return {std::move(r)};
        };
      });

  // gen
  GeneratorParams gen;
  std::optional<std::string> delta_text;
  std::optional<std::string> epsilon_text;
  std::string class_name = "mixed";
  {
    CLI::App* sub = app.add_subcommand("gen", "Print a generated market document");
    sub->require_subcommand(1);
    CLI::App* xos = sub->add_subcommand("xos", "Unit-demand vs symmetric XOS");
    xos->add_option("--m", gen.m, "Items");
    xos->add_option("--delta", delta_text, "delta as p/q");
    xos->callback([&] { gen.variant = GeneratorParams::Variant::kXos; });
    CLI::App* sm = sub->add_subcommand("submodular", "Two submodular bucket buyers");
    sm->add_option("--k", gen.k, "Buckets (m = k^2)");
    sm->add_option("--epsilon", epsilon_text, "epsilon as p/q");
    sm->callback([&] { gen.variant = GeneratorParams::Variant::kSubmodular; });
    CLI::App* grid = sub->add_subcommand("single-minded", "Single-minded grid");
    grid->add_option("--n", gen.n, "Buyers");
    grid->callback([&] { gen.variant = GeneratorParams::Variant::kSingleMinded; });
    CLI::App* rnd = sub->add_subcommand("random", "Seeded random market");
    rnd->add_option("--seed", gen.random.seed, "Seed");
    rnd->add_option("--n", gen.random.n, "Buyers");
    rnd->add_option("--m", gen.random.m, "Items");
    rnd->add_option("--class", class_name,
                    "additive|unit_demand|budget_additive|xos|single_minded|"
                    "symmetric|explicit|mixed");
    rnd->add_option("--range", gen.random.value_range, "Largest value numerator");
    rnd->callback([&] { gen.variant = GeneratorParams::Variant::kRandom; });
    sub->callback([&] {
      command = "gen";
      action = [&]() -> Result {
        if (delta_text) gen.delta = ParseRationalArg(*delta_text, "--delta");
        if (epsilon_text) gen.epsilon = ParseRationalArg(*epsilon_text, "--epsilon");
        gen.random.mix = ParseClass(class_name);
        Result res;
        res.raw = RenderMarket(Generate(gen, CapsFor(opts)));
        return res;
      };
    });
  }

  // reproduce
  int rep_m = 5;
  std::string rep_delta = "1/100";
  int rep_n = 4;
  int rep_k = 4;
  int rep_count = 500;
  std::uint64_t rep_seed = 1;
  int rep_max_items = 6;
  std::function<ScenarioReport(const Caps&)> scenario;
  {
    CLI::App* sub = app.add_subcommand("reproduce", "Run a reproduction scenario");
    sub->require_subcommand(1);
    CLI::App* xos = sub->add_subcommand("xos", "XOS lower-bound instance");
    xos->add_option("--m", rep_m, "Items");
    xos->add_option("--delta", rep_delta, "delta as p/q");
    xos->callback([&] {
      scenario = [&](const Caps& caps) {
        inputs["m"] = rep_m;
        inputs["delta"] = rep_delta;
        return ReproduceXos(rep_m, ParseRationalArg(rep_delta, "--delta"), caps);
      };
    });
    CLI::App* sm = sub->add_subcommand("submodular", "Submodular bucket instance");
    sm->add_option("--k", rep_k, "Buckets; k >= 4 certificate, k <= 3 full sweep");
    sm->callback([&] {
      scenario = [&](const Caps& caps) {
        inputs["k"] = rep_k;
        return ReproduceSubmodular(rep_k, caps);
      };
    });
    CLI::App* grid = sub->add_subcommand("single-minded", "Single-minded grid");
    grid->add_option("--n", rep_n, "Buyers");
    grid->callback([&] {
      scenario = [&](const Caps& caps) {
        inputs["n"] = rep_n;
        return ReproduceSingleMinded(rep_n, caps);
      };
    });
    CLI::App* ba = sub->add_subcommand("budget-additive", "Budget-additive suite");
    ba->add_option("--count", rep_count, "Instances")->check(CLI::PositiveNumber);
    ba->add_option("--seed", rep_seed, "Seed");
    ba->add_option("--max-items", rep_max_items, "Largest m")->check(CLI::Range(1, 16));
    ba->callback([&] {
      scenario = [&](const Caps& caps) {
        inputs["count"] = rep_count;
        inputs["seed"] = rep_seed;
        inputs["max_items"] = rep_max_items;
        return ReproduceBudgetAdditive(rep_count, rep_seed, rep_max_items, caps);
      };
    });
    sub->callback([&, sub] {
      command = "reproduce " + sub->get_subcommands().front()->get_name();
      action = [&]() -> Result {
        const ScenarioReport rep = scenario(CapsFor(opts));
        return {ScenarioJson(rep), rep.passed() ? kExitOk : kExitNegative};
      };
    });
  }

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return dynamic_cast<const CapExceeded*>(&e) ? kExitCap : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Result res = action();
    if (res.raw) {
      out << *res.raw;
      return res.code;
    }
    Json report;
    report["command"] = command;
    report["inputs"] = inputs.is_null() ? Json::object() : inputs;
    report["exact"] = true;
    report["results"] = std::move(res.results);
    if (opts.timing) {
      Json timing;
      timing["milliseconds"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
      report["timing"] = std::move(timing);
    }
    out << report.dump(2) << "\n";
    return res.code;
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace walras::cli
