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

#include "walras/scenarios.h"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "walras/budget_additive.h"
#include "walras/certificates.h"
#include "walras/config_lp.h"
#include "walras/demand.h"
#include "walras/errors.h"
#include "walras/generators.h"
#include "walras/integral.h"
#include "walras/properties.h"
#include "walras/single_minded.h"
#include "walras/stability.h"

namespace walras {

bool ScenarioReport::passed() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void ScenarioReport::Value(std::string key, const Rational& q) {
  values.emplace_back(std::move(key), q.ToString());
}

void ScenarioReport::Value(std::string key, std::string text) {
  values.emplace_back(std::move(key), std::move(text));
}

bool ScenarioReport::Expect(std::string name, bool pass, std::string detail) {
  checks.push_back(Check{std::move(name), pass, std::move(detail)});
  return pass;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Counts failures of a repeated assertion and keeps the first one.
struct Tally {
  int runs = 0;
  int failures = 0;
  std::string first;

  void Record(bool ok, const std::string& what) {
    ++runs;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  std::string Detail() const {
    std::ostringstream os;
    os << failures << " of " << runs << " failed";
    if (failures > 0) os << "; first: " << first;
    return os.str();
  }
};

std::string Eq(const Rational& got, const Rational& want) {
  return "got " + got.ToString() + ", expected " + want.ToString();
}

std::string Where(std::uint64_t seed, ItemSet restriction) {
  return "seed " + std::to_string(seed) + ", M' = " + restriction.ToString();
}

// Empty on success, otherwise a description of the broken condition.
std::string DualityDefect(const Market& market, const LPSolution& sol,
                          const Caps& caps) {
  if (sol.status != LPStatus::kOptimal) return "solver status not optimal";
  if (!IsConfigFeasible(market, sol.restriction, sol.primal)) {
    return "primal infeasible";
  }
  if (FractionalWelfare(market, sol.primal) != sol.optimal_value) {
    return "primal value differs from reported optimum";
  }
  Rational dual;
  for (const Rational& u : sol.buyer_duals) {
    if (u.sign() < 0) return "negative buyer dual";
    dual += u;
  }
  for (int j = 0; j < market.num_items(); ++j) {
    const Rational& p = sol.item_duals[static_cast<std::size_t>(j)];
    if (p.sign() < 0) return "negative item dual";
    if (!sol.restriction.contains(j) && !p.is_zero()) {
      return "nonzero dual outside the restriction";
    }
    dual += p;
  }
  if (dual != sol.optimal_value) {
    return "dual objective " + dual.ToString() + " != primal " +
           sol.optimal_value.ToString();
  }
  const PriceVector prices(sol.item_duals);
  for (int i = 0; i < market.num_buyers(); ++i) {
    const BestResponse br =
        ComputeBestResponse(market.buyer(i), prices, sol.restriction, caps);
    if (br.utility > sol.buyer_duals[static_cast<std::size_t>(i)]) {
      return "dual constraint of buyer " + std::to_string(i) + " violated by " +
             br.bundle.ToString();
    }
  }
  return {};
}

std::string RenderBundles(const Allocation& x) {
  std::string out = "[";
  for (int i = 0; i < x.num_buyers(); ++i) {
    if (i > 0) out += ", ";
    out += x.bundle(i).ToString();
  }
  return out + "]";
}

// LP verdict on M' against the price-LP oracle over integral optima of M'.
struct CrossCheck {
  bool lp_stable = false;
  bool oracle_stable = false;
  // Integral optima whose price-LP verdict contradicts the LP verdict.
  int allocation_conflicts = 0;
  int optimal_allocations = 0;
  std::string conflict;
};

CrossCheck CrossValidate(const Market& market, ItemSet restriction,
                         const Caps& caps) {
  CrossCheck out;
  const LPSolution frac = SolveFractional(market, restriction, caps);
  const IntegralOptimum opt = IntegralOpt(market, restriction, caps);
  out.lp_stable = StableExistsOn(market, restriction, caps);
  if (out.lp_stable != (frac.optimal_value == opt.welfare)) {
    out.allocation_conflicts++;
    out.conflict = "stable_exists_on disagrees with the solved gap";
  }
  ForEachAllocation(
      market, restriction,
      [&](const Allocation& x) {
        if (Welfare(market, x) != opt.welfare) return;
        ++out.optimal_allocations;
        const auto prices = PricesForAllocation(market, x, caps);
        const bool sells_all = x.sold() == restriction;
        if (prices) {
          if (!VerifyStable(market, x, *prices, caps).stable) {
            ++out.allocation_conflicts;
            out.conflict = "price-LP prices fail verification for " +
                           RenderBundles(x);
            return;
          }
          if (sells_all && opt.welfare == frac.optimal_value) {
            out.oracle_stable = true;
          }
        }
        // With gap 1 every integral optimum is supported by the LP duals;
        // with gap > 1 nothing that sells all of M' can be stable.
        if (out.lp_stable && !prices) {
          ++out.allocation_conflicts;
          out.conflict = "no prices for optimum " + RenderBundles(x);
        } else if (!out.lp_stable && sells_all && prices) {
          ++out.allocation_conflicts;
          out.conflict = "prices for full-sale optimum " + RenderBundles(x);
        }
      },
      caps);
  return out;
}

}  // namespace

ScenarioReport ReproduceXos(int m, const Rational& delta, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "xos";
  const Market market = GenXosLower(m, delta);
  const ItemSet all = market.all_items();
  r.Value("m", Rational(m));
  r.Value("delta", delta);

  const IntegralOptimum opt = IntegralOpt(market, all, caps);
  const Rational want_opt =
      m >= 3 ? Rational(m, 2) : Rational(3, 2) - delta;
  r.Value("integral_opt", opt.welfare);
  r.Expect("integral optimum on the full set", opt.welfare == want_opt,
           Eq(opt.welfare, want_opt));

  const XosCertificate cert = XosFractionalCertificate(market, delta);
  const Rational want_y = Rational(m, 2) +
                          Rational(1, 2 * static_cast<std::int64_t>(m - 1)) -
                          delta;
  r.Value("fractional_certificate", cert.welfare_y);
  r.Expect("explicit fractional solution is LP-feasible",
           IsConfigFeasible(market, all, cert.y));
  r.Expect("explicit fractional value is m/2 + 1/(2(m-1)) - delta",
           cert.welfare_y == want_y &&
               FractionalWelfare(market, cert.y) == want_y,
           Eq(cert.welfare_y, want_y));
  r.Expect("fractional value exceeds the integral optimum (gap > 1)",
           cert.welfare_y > opt.welfare);

  const LPSolution lp = SolveFractional(market, all, caps);
  r.Value("lp_opt", lp.optimal_value);
  r.Expect("LP optimum is at least the certificate value",
           lp.optimal_value >= cert.welfare_y);

  Tally small;
  Tally large;
  ForEachSubset(all, [&](ItemSet s) {
    const bool stable = StableExistsOn(market, s, caps);
    if (s.size() <= 2) {
      small.Record(stable, s.ToString() + " reported unstable");
    } else {
      large.Record(!stable, s.ToString() + " reported stable");
    }
  });
  r.Expect("stable outcome exists for every |M'| <= 2", small.failures == 0,
           small.Detail());
  r.Expect("no stable outcome for any |M'| >= 3", large.failures == 0,
           large.Detail());

  const BestStable best = BestStableOutcome(market, caps);
  const Rational want_best = Rational(3, 2) - delta;
  r.Value("best_stable", best.welfare);
  r.Value("best_stable_sold", best.outcome.sold.ToString());
  r.Expect("best stable welfare is 3/2 - delta", best.welfare == want_best,
           Eq(best.welfare, want_best));
  r.Expect("best stable outcome verifies",
           VerifyStable(market, best.outcome.outcome.allocation,
                        best.outcome.outcome.prices, caps)
               .stable);
  r.Value("stability_ratio", opt.welfare / best.welfare);
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport ReproduceSingleMinded(int n, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "single-minded";
  const Market market = GenSingleMindedLower(n);
  const int m = market.num_items();
  const ItemSet all = market.all_items();
  r.Value("n", Rational(n));
  r.Value("m", Rational(m));

  const IntegralOptimum opt = IntegralOpt(market, all, caps);
  const Rational want_opt = Max(Rational(m), Rational(n + 1));
  r.Value("integral_opt", opt.welfare);
  r.Expect("integral optimum", opt.welfare == want_opt,
           Eq(opt.welfare, want_opt));

  std::vector<ItemSet> bundles(static_cast<std::size_t>(n));
  bundles.back() = all;
  const Allocation to_last(m, bundles);
  const auto prices = PricesForAllocation(market, to_last, caps);
  r.Expect("selling everything to the last buyer has no supporting prices",
           !prices.has_value(),
           prices ? "found prices summing to " + prices->Total(all).ToString()
                  : "infeasible");

  const GapReport gap = ComputeGap(market, all, caps);
  r.Value("full_set_fractional", gap.fractional.optimal_value);
  r.Value("full_set_gap", gap.gap);
  r.Expect("full-set integrality gap exceeds 1", gap.gap > Rational(1));

  const BestStable best = BestStableOutcome(market, caps);
  r.Value("best_stable", best.welfare);
  r.Value("best_stable_sold", best.outcome.sold.ToString());
  r.Expect("best stable welfare is n + 1", best.welfare == Rational(n + 1),
           Eq(best.welfare, Rational(n + 1)));
  r.Expect("best stable outcome verifies",
           VerifyStable(market, best.outcome.outcome.allocation,
                        best.outcome.outcome.prices, caps)
               .stable);

  const auto ratio = StabilityRatio(market, caps);
  const Rational want_ratio = want_opt / Rational(n + 1);
  r.Value("stability_ratio", ratio ? ratio->ToString() : "inf");
  r.Expect("stability ratio OPT / (n + 1)", ratio && *ratio == want_ratio,
           ratio ? Eq(*ratio, want_ratio) : "infinite");
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport SubmodularCertificate(int k, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "submodular";
  const Market market = GenSubmodularLower(k, std::nullopt, caps);
  const ItemSet all = market.all_items();
  r.Value("k", Rational(k));
  r.Value("m", Rational(market.num_items()));
  r.Value("epsilon", DefaultBucketEpsilon(k, caps));

  for (int i = 0; i < 2; ++i) {
    const SubmodularityCheck sub = CheckSubmodular(market.buyer(i), caps);
    std::string detail;
    if (sub.witness) {
      detail = "violation at base " + sub.witness->base.ToString();
    }
    r.Expect("buyer " + std::to_string(i) + " valuation is submodular",
             sub.submodular, detail);
    r.Expect("buyer " + std::to_string(i) + " valuation is monotone",
             IsMonotone(market.buyer(i), caps));
  }

  const BucketCertificate cert = BucketFractionalCertificate(market, all);
  r.Value("t", Rational(cert.t));
  r.Value("certificate_y", cert.welfare_y);
  r.Value("reference_x", cert.welfare_x);
  r.Value("raw_difference", cert.welfare_y - cert.welfare_x);
  r.Value("bucket_gain", cert.bucket_gain);
  r.Value("gain_bound", cert.gain_bound);
  r.Expect("fractional certificate is LP-feasible on K",
           IsConfigFeasible(market, all, cert.y) &&
               FractionalWelfare(market, cert.y) == cert.welfare_y);
  const Rational t(cert.t);
  const Rational bound = Rational(1) - Rational(1, k) -
                         (t - Rational(2)) / (t - Rational(1));
  r.Expect("gain bound is 1 - 1/k - (t-2)/(t-1)", cert.gain_bound == bound,
           Eq(cert.gain_bound, bound));
  r.Expect("(SW_y - SW_x) / epsilon meets the gain bound",
           cert.bucket_gain >= bound,
           cert.bucket_gain.ToString() + " >= " + bound.ToString());
  r.Expect("SW_y exceeds SW_x", cert.welfare_y > cert.welfare_x);

  const IntegralOptimum opt = IntegralOpt(market, all, caps);
  r.Value("integral_opt", opt.welfare);
  r.Value("integral_opt_buyer0", opt.allocation.bundle(0).ToString());
  r.Value("integral_opt_buyer1", opt.allocation.bundle(1).ToString());
  r.Expect("SW_y exceeds the brute-force integral optimum",
           cert.welfare_y > opt.welfare,
           cert.welfare_y.ToString() + " vs " + opt.welfare.ToString());
  r.Expect("integral optimum is at least SW_x", opt.welfare >= cert.welfare_x);
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport SubmodularSweep(int k, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "submodular";
  const Market market = GenSubmodularLower(k, std::nullopt, caps);
  const ItemSet all = market.all_items();
  r.Value("k", Rational(k));
  r.Value("m", Rational(market.num_items()));
  r.Value("epsilon", DefaultBucketEpsilon(k, caps));
  for (int i = 0; i < 2; ++i) {
    r.Expect("buyer " + std::to_string(i) + " valuation is submodular",
             IsSubmodular(market.buyer(i), caps));
  }

  Tally duality;
  Tally verdicts;
  Tally extracted;
  int stable_count = 0;
  int restrictions = 0;
  ForEachSubset(all, [&](ItemSet s) {
    ++restrictions;
    const LPSolution lp = SolveExact(BuildConfigLP(market, s, caps));
    const std::string defect = DualityDefect(market, lp, caps);
    duality.Record(defect.empty(), s.ToString() + ": " + defect);
    const CrossCheck cc = CrossValidate(market, s, caps);
    verdicts.Record(cc.lp_stable == cc.oracle_stable && cc.allocation_conflicts == 0,
                    s.ToString() + ": " + cc.conflict);
    if (!cc.lp_stable) return;
    ++stable_count;
    try {
      const ExtractedOutcome ex = ExtractStableOutcome(market, s, caps);
      extracted.Record(
          VerifyStable(market, ex.outcome.allocation, ex.outcome.prices, caps)
              .stable,
          s.ToString());
    } catch (const std::logic_error& e) {
      extracted.Record(false, s.ToString() + ": " + e.what());
    }
  });
  r.Value("restrictions", Rational(restrictions));
  r.Value("stable_restrictions", Rational(stable_count));
  r.Expect("exact LP on every M': strong duality", duality.failures == 0,
           duality.Detail());
  r.Expect("LP verdict agrees with the price LP on every integral optimum",
           verdicts.failures == 0, verdicts.Detail());
  r.Expect("every extracted outcome verifies", extracted.failures == 0,
           extracted.Detail());
  r.Value("full_set_stable", StableExistsOn(market, all, caps) ? "true" : "false");
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport ReproduceSubmodular(int k, const Caps& caps) {
  return k >= 4 ? SubmodularCertificate(k, caps) : SubmodularSweep(k, caps);
}

ScenarioReport ReproduceBudgetAdditive(int count, std::uint64_t seed,
                                       int max_items, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "budget-additive";
  std::mt19937_64 rng(seed);
  Tally stable;
  Tally four;
  Tally half;
  Tally case1;
  Tally case2;
  Tally demand;
  Tally upper;
  Tally sharp;
  int unattainable = 0;
  int cases[3] = {0, 0, 0};
  for (int c = 0; c < count; ++c) {
    RandomMarketParams params;
    params.seed = rng();
    params.n = 2;
    params.m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_items));
    params.mix = RandomClass::kBudgetAdditive;
    const Market market = GenRandomMarket(params, caps);
    const std::string where =
        "seed " + std::to_string(params.seed) + " m " + std::to_string(params.m);
    BudgetAdditiveResult res;
    try {
      res = BudgetAdditiveApprox(market, caps);
    } catch (const std::logic_error& e) {
      stable.Record(false, where + ": " + e.what());
      continue;
    }
    ++cases[res.case_tag];
    stable.Record(
        VerifyStable(market, res.allocation, res.prices, caps).stable, where);
    const Rational opt = IntegralOpt(market, market.all_items(), caps).welfare;
    four.Record(Rational(4) * res.welfare >= opt,
                where + ": SW " + res.welfare.ToString() + ", OPT " + opt.ToString());
    upper.Record(opt <= res.opt_upper, where);
    if (res.case_tag == 1) {
      case1.Record(res.welfare >= res.budget1 / Rational(2), where);
    } else {
      const int b2 = 1 - res.high_budget_buyer;
      const Valuation& v2 = market.buyer(b2);
      const bool literal =
          res.welfare >= res.budget2 && res.welfare >= res.total_value1;
      case2.Record(literal, where + ": SW " + res.welfare.ToString() + ", B2 " +
                                res.budget2.ToString() + ", OPT " +
                                opt.ToString());
      if (!literal && opt < res.budget2) ++unattainable;
      // v2(M) = min(B2, sum_j v2j) equals B2 whenever buyer 2's budget binds.
      sharp.Record(res.welfare >= v2.Value(market.all_items()) &&
                       res.welfare >= res.total_value1,
                   where);
      half.Record(Rational(2) * res.welfare >= opt, where);
      demand.Record(ComputeDemand(v2, res.prices, caps).max_utility ==
                        Utility(v2, res.d2, res.prices),
                    where);
    }
  }
  r.Value("instances", Rational(count));
  r.Value("case1", Rational(cases[1]));
  r.Value("case2", Rational(cases[2]));
  r.Expect("every output passes verify_stable", stable.failures == 0,
           stable.Detail());
  r.Expect("4 SW >= OPT", four.failures == 0, four.Detail());
  r.Expect("OPT within the case upper bound", upper.failures == 0,
           upper.Detail());
  r.Expect("case 1: SW >= B1/2", case1.failures == 0, case1.Detail());
  r.Expect("case 2: SW >= B2 and SW >= sum_j v1j", case2.failures == 0,
           case2.Detail());
  r.Value("case2_opt_below_b2", Rational(unattainable));
  r.Expect("case 2: SW >= min(B2, sum_j v2j) and SW >= sum_j v1j",
           sharp.failures == 0, sharp.Detail());
  r.Expect("case 2: 2 SW >= OPT", half.failures == 0, half.Detail());
  r.Expect("case 2: buyer 2's bundle is a global demand set",
           demand.failures == 0, demand.Detail());
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport FuzzStableExistence(int count, std::uint64_t seed, int max_buyers,
                                   int max_items, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "corollary-fuzz";
  std::mt19937_64 rng(seed);
  Tally verdicts;
  Tally extracted;
  int restrictions = 0;
  int stable_count = 0;
  for (int c = 0; c < count; ++c) {
    RandomMarketParams params;
    params.seed = rng();
    params.n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_buyers));
    params.m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_items));
    params.mix = RandomClass::kMixed;
    const Market market = GenRandomMarket(params, caps);
    ForEachSubset(market.all_items(), [&](ItemSet s) {
      ++restrictions;
      const CrossCheck cc = CrossValidate(market, s, caps);
      verdicts.Record(
          cc.lp_stable == cc.oracle_stable && cc.allocation_conflicts == 0,
          Where(params.seed, s) + " " + cc.conflict);
      if (!cc.lp_stable) return;
      ++stable_count;
      try {
        const ExtractedOutcome ex = ExtractStableOutcome(market, s, caps);
        extracted.Record(
            VerifyStable(market, ex.outcome.allocation, ex.outcome.prices, caps)
                .stable,
            Where(params.seed, s));
      } catch (const std::logic_error& e) {
        extracted.Record(false, Where(params.seed, s) + ": " + e.what());
      }
    });
  }
  r.Value("markets", Rational(count));
  r.Value("restrictions", Rational(restrictions));
  r.Value("stable_restrictions", Rational(stable_count));
  r.Expect("stable_exists_on agrees with the price-LP oracle",
           verdicts.failures == 0, verdicts.Detail());
  r.Expect("every extracted outcome verifies", extracted.failures == 0,
           extracted.Detail());
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport SolverConsistency(int count, std::uint64_t seed,
                                 const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "solver-consistency";
  std::mt19937_64 rng(seed);
  Tally agree;
  Tally duality;
  Tally gross;
  std::int64_t columns_exact = 0;
  std::int64_t columns_cg = 0;
  for (int c = 0; c < count; ++c) {
    RandomMarketParams params;
    params.seed = rng();
    params.n = 1 + static_cast<int>(rng() % 3);
    params.m = 1 + static_cast<int>(rng() % 10);
    params.mix = RandomClass::kMixed;
    const Market market = GenRandomMarket(params, caps);
    const ItemSet all = market.all_items();
    const LPSolution exact = SolveExact(BuildConfigLP(market, all, caps));
    const LPSolution cg = SolveColumnGeneration(market, all, caps);
    columns_exact += exact.columns;
    columns_cg += cg.columns;
    agree.Record(exact.optimal_value == cg.optimal_value,
                 Where(params.seed, all) + ": " + exact.optimal_value.ToString() +
                     " vs " + cg.optimal_value.ToString());
    for (const LPSolution* sol : {&exact, &cg}) {
      const std::string defect = DualityDefect(market, *sol, caps);
      duality.Record(defect.empty(), Where(params.seed, all) + ": " + defect);
    }
  }
  for (RandomClass cls : {RandomClass::kAdditive, RandomClass::kUnitDemand}) {
    for (int c = 0; c < count; ++c) {
      RandomMarketParams params;
      params.seed = rng();
      params.n = 1 + static_cast<int>(rng() % 3);
      params.m = 1 + static_cast<int>(rng() % 5);
      params.mix = cls;
      const Market market = GenRandomMarket(params, caps);
      ForEachSubset(market.all_items(), [&](ItemSet s) {
        const GapReport g = ComputeGap(market, s, caps);
        const std::string defect = DualityDefect(market, g.fractional, caps);
        duality.Record(defect.empty(), Where(params.seed, s) + ": " + defect);
        gross.Record(g.gap == Rational(1),
                     Where(params.seed, s) + ": gap " + g.gap.ToString());
      });
    }
  }
  r.Value("markets", Rational(count));
  r.Value("columns_exact", Rational(columns_exact));
  r.Value("columns_generated", Rational(columns_cg));
  r.Expect("exact and column-generation optima agree", agree.failures == 0,
           agree.Detail());
  r.Expect("strong duality on every solve", duality.failures == 0,
           duality.Detail());
  r.Expect("gap 1 on every M' for additive and unit-demand markets",
           gross.failures == 0, gross.Detail());
  r.seconds = clock.seconds();
  return r;
}

ScenarioReport GreedySingleMinded(int n_lo, int n_hi, int random_count,
                                  std::uint64_t seed, const Caps& caps) {
  Stopwatch clock;
  ScenarioReport r;
  r.name = "greedy-single-minded";
  Tally stable;
  Tally zero;
  auto run = [&](const Market& market, const std::string& where) {
    const GreedyStableResult res = SingleMindedGreedyStable(market, caps);
    const StabilityReport rep = VerifyStable(market, res.outcome.allocation,
                                             res.outcome.prices, caps);
    stable.Record(rep.stable, where);
    bool none_positive = true;
    for (const Rational& u : rep.max_utilities) none_positive &= u.sign() <= 0;
    zero.Record(none_positive, where);
    return res.welfare;
  };
  for (int n = n_lo; n <= n_hi; ++n) {
    const Rational w = run(GenSingleMindedLower(n), "grid n = " + std::to_string(n));
    r.Value("grid_n" + std::to_string(n) + "_welfare", w);
  }
  std::mt19937_64 rng(seed);
  for (int c = 0; c < random_count; ++c) {
    RandomMarketParams params;
    params.seed = rng();
    params.n = 1 + static_cast<int>(rng() % 8);
    params.m = 1 + static_cast<int>(rng() % 12);
    params.mix = RandomClass::kSingleMinded;
    run(GenRandomMarket(params, caps), "seed " + std::to_string(params.seed));
  }
  r.Value("random_markets", Rational(random_count));
  r.Expect("every greedy outcome passes verify_stable", stable.failures == 0,
           stable.Detail());
  r.Expect("no buyer has strictly positive utility", zero.failures == 0,
           zero.Detail());
  r.seconds = clock.seconds();
  return r;
}

}  // namespace walras
