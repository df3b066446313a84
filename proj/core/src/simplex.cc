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

#include "walras/simplex.h"

#include "walras/errors.h"

namespace walras::lp {

ExactSimplex::ExactSimplex(std::vector<Rational> rhs) : rhs_(std::move(rhs)) {
  const std::size_t rows = rhs_.size();
  for (const Rational& b : rhs_) {
    if (b.sign() < 0) throw PreconditionError("simplex: negative right-hand side");
  }
  binv_.assign(rows, std::vector<Rational>(rows));
  basis_.resize(rows);
  position_of_slack_.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    binv_[r][r] = 1;
    basis_[r] = -static_cast<int>(r) - 1;
    position_of_slack_[r] = static_cast<int>(r);
  }
  x_basic_ = rhs_;
  duals_.assign(rows, Rational());
}

int ExactSimplex::AddColumn(Column column) {
  for (const auto& [row, coeff] : column.entries) {
    if (row < 0 || row >= num_rows()) {
      throw PreconditionError("simplex: column entry outside the row range");
    }
    (void)coeff;
  }
  columns_.push_back(std::move(column));
  position_of_column_.push_back(-1);
  return num_columns() - 1;
}

bool ExactSimplex::Precedes(int a, int b) {
  // Structural columns first (by index), then slacks (by row).
  if ((a >= 0) != (b >= 0)) return a >= 0;
  return a >= 0 ? a < b : a > b;
}

void ExactSimplex::ComputeDuals() {
  const std::size_t rows = rhs_.size();
  for (std::size_t r = 0; r < rows; ++r) duals_[r] = 0;
  for (std::size_t k = 0; k < rows; ++k) {
    if (basis_[k] < 0) continue;
    const Rational& c = columns_[static_cast<std::size_t>(basis_[k])].cost;
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!binv_[k][r].is_zero()) duals_[r] += c * binv_[k][r];
    }
  }
}

Rational ExactSimplex::ReducedCost(int var) const {
  if (var < 0) return -duals_[static_cast<std::size_t>(-var - 1)];
  const Column& col = columns_[static_cast<std::size_t>(var)];
  Rational d = col.cost;
  for (const auto& [row, coeff] : col.entries) {
    const Rational& y = duals_[static_cast<std::size_t>(row)];
    if (y.is_zero()) continue;
    if (coeff == 1) {
      d -= y;
    } else {
      d -= Rational(coeff) * y;
    }
  }
  return d;
}

std::vector<Rational> ExactSimplex::Ftran(int var) const {
  const std::size_t rows = rhs_.size();
  std::vector<Rational> alpha(rows);
  if (var < 0) {
    const auto r = static_cast<std::size_t>(-var - 1);
    for (std::size_t k = 0; k < rows; ++k) alpha[k] = binv_[k][r];
    return alpha;
  }
  for (const auto& [row, coeff] : columns_[static_cast<std::size_t>(var)].entries) {
    const auto r = static_cast<std::size_t>(row);
    for (std::size_t k = 0; k < rows; ++k) {
      if (binv_[k][r].is_zero()) continue;
      if (coeff == 1) {
        alpha[k] += binv_[k][r];
      } else {
        alpha[k] += Rational(coeff) * binv_[k][r];
      }
    }
  }
  return alpha;
}

void ExactSimplex::Pivot(int row, int var, const std::vector<Rational>& alpha) {
  const std::size_t rows = rhs_.size();
  const auto pr = static_cast<std::size_t>(row);
  const Rational pivot = alpha[pr];
  for (Rational& e : binv_[pr]) {
    if (!e.is_zero()) e /= pivot;
  }
  x_basic_[pr] /= pivot;
  for (std::size_t k = 0; k < rows; ++k) {
    if (k == pr || alpha[k].is_zero()) continue;
    const Rational& f = alpha[k];
    for (std::size_t r = 0; r < rows; ++r) {
      if (!binv_[pr][r].is_zero()) binv_[k][r] -= f * binv_[pr][r];
    }
    x_basic_[k] -= f * x_basic_[pr];
  }
  const int leaving = basis_[pr];
  if (leaving >= 0) {
    position_of_column_[static_cast<std::size_t>(leaving)] = -1;
  } else {
    position_of_slack_[static_cast<std::size_t>(-leaving - 1)] = -1;
  }
  basis_[pr] = var;
  if (var >= 0) {
    position_of_column_[static_cast<std::size_t>(var)] = row;
  } else {
    position_of_slack_[static_cast<std::size_t>(-var - 1)] = row;
  }
}

Status ExactSimplex::Solve() {
  const int rows = num_rows();
  while (true) {
    ComputeDuals();
    int entering = 0;
    bool found = false;
    for (int j = 0; j < num_columns() && !found; ++j) {
      if (position_of_column_[static_cast<std::size_t>(j)] >= 0) continue;
      if (ReducedCost(j).sign() > 0) {
        entering = j;
        found = true;
      }
    }
    for (int r = 0; r < rows && !found; ++r) {
      if (position_of_slack_[static_cast<std::size_t>(r)] >= 0) continue;
      if (duals_[static_cast<std::size_t>(r)].sign() < 0) {
        entering = -r - 1;
        found = true;
      }
    }
    if (!found) break;

    const std::vector<Rational> alpha = Ftran(entering);
    int leave = -1;
    Rational best_ratio;
    for (int k = 0; k < rows; ++k) {
      const Rational& a = alpha[static_cast<std::size_t>(k)];
      if (a.sign() <= 0) continue;
      Rational ratio = x_basic_[static_cast<std::size_t>(k)] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           Precedes(basis_[static_cast<std::size_t>(k)],
                    basis_[static_cast<std::size_t>(leave)]))) {
        leave = k;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) return Status::kUnbounded;
    Pivot(leave, entering, alpha);
    ++iterations_;
  }
  objective_ = 0;
  for (int k = 0; k < rows; ++k) {
    const int var = basis_[static_cast<std::size_t>(k)];
    if (var >= 0) {
      objective_ += columns_[static_cast<std::size_t>(var)].cost *
                    x_basic_[static_cast<std::size_t>(k)];
    }
  }
  return Status::kOptimal;
}

std::vector<Rational> ExactSimplex::Primal() const {
  std::vector<Rational> x(columns_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k] >= 0) x[static_cast<std::size_t>(basis_[k])] = x_basic_[k];
  }
  return x;
}

}  // namespace walras::lp
