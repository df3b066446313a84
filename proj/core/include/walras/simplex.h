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

#ifndef WALRAS_SIMPLEX_H_
#define WALRAS_SIMPLEX_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "walras/rational.h"

namespace walras::lp {

// A structural column: objective coefficient plus sparse integer entries.
struct Column {
  Rational cost;
  std::vector<std::pair<int, int>> entries;  // (row, coefficient)
};

enum class Status { kOptimal, kUnbounded };

// Exact primal simplex for
//
//   max  c^T x   s.t.  A x <= b,  x >= 0,   with b >= 0,
//
// so the all-slack basis is feasible and no phase one is needed. The basis
// inverse is kept as a dense rational matrix; pricing uses Bland's rule
// (lowest-index improving variable enters, lowest-index tied row leaves),
// which rules out cycling on the heavily degenerate packing LPs used here.
//
// Columns may be added after a solve; the current basis stays feasible and
// Solve() resumes from it.
class ExactSimplex {
 public:
  // Throws PreconditionError if any rhs entry is negative.
  explicit ExactSimplex(std::vector<Rational> rhs);

  int num_rows() const { return static_cast<int>(rhs_.size()); }
  int num_columns() const { return static_cast<int>(columns_.size()); }

  // Returns the new column's index.
  int AddColumn(Column column);

  Status Solve();

  // Valid after Solve() returned kOptimal.
  const Rational& objective() const { return objective_; }
  // Value of every structural column.
  std::vector<Rational> Primal() const;
  // Row duals y = c_B B^{-1}; all entries are >= 0 at an optimum.
  const std::vector<Rational>& duals() const { return duals_; }
  std::int64_t iterations() const { return iterations_; }

 private:
  // Basic variables are encoded as column index >= 0 or slack -(row + 1).
  static bool Precedes(int a, int b);
  void ComputeDuals();
  Rational ReducedCost(int var) const;
  std::vector<Rational> Ftran(int var) const;
  void Pivot(int row, int var, const std::vector<Rational>& alpha);

  std::vector<Rational> rhs_;
  std::vector<Column> columns_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<int> basis_;
  std::vector<Rational> x_basic_;
  std::vector<int> position_of_column_;  // -1 when nonbasic
  std::vector<int> position_of_slack_;
  std::vector<Rational> duals_;
  Rational objective_;
  std::int64_t iterations_ = 0;
};

}  // namespace walras::lp

#endif  // WALRAS_SIMPLEX_H_
