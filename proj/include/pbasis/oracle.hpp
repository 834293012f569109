#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/linalg.hpp"
#include "pbasis/lp.hpp"
#include "pbasis/vec.hpp"

namespace pbasis {

enum class Relation { LessEq, Less, Equal };

/// One linear condition coeffs.x REL bound.
struct InequalityRow {
  Vec coeffs;
  Relation rel = Relation::LessEq;
  Rational bound;
};

/// System of linear conditions over `dim` unknowns.
struct InequalitySystem {
  std::size_t dim = 0;
  std::vector<InequalityRow> rows;

  void add(Vec coeffs, Relation rel, Rational bound) {
    if (coeffs.dim() != dim) {
      throw DimensionMismatch("InequalitySystem: row arity " + std::to_string(coeffs.dim()) +
                              " vs dim " + std::to_string(dim));
    }
    rows.push_back(InequalityRow{std::move(coeffs), rel, std::move(bound)});
  }
};

// Fourier-Motzkin blows up doubly exponentially; the guards keep the
// oracle honest about its desk-scale scope.
inline constexpr std::size_t kFmMaxDim = 10;
inline constexpr std::size_t kFmMaxRows = 64;
inline constexpr std::size_t kOracleMaxGenerators = 8;
inline constexpr std::size_t kOracleMaxDim = 4;

namespace detail {

// Divides a row through by the gcd of its entries so duplicates generated
// by different elimination paths collapse.
inline void normalize_row(InequalityRow& row) {
  Int l = denominator(row.bound);
  for (const Rational& c : row.coeffs.coords) l = lcm(l, denominator(c));
  Int g = numerator(row.bound) * (l / denominator(row.bound));
  if (g < 0) g = -g;
  for (const Rational& c : row.coeffs.coords) {
    Int v = numerator(c) * (l / denominator(c));
    g = gcd(g, v);
  }
  if (g == 0) return;  // all-zero row, nothing to scale
  const Rational f = Rational(l) / Rational(g);
  for (Rational& c : row.coeffs.coords) c *= f;
  row.bound *= f;
}

inline bool row_equal(const InequalityRow& a, const InequalityRow& b) {
  return a.rel == b.rel && a.bound == b.bound && a.coeffs == b.coeffs;
}

inline bool constant_row_holds(const InequalityRow& row) {
  switch (row.rel) {
    case Relation::LessEq:
      return row.bound >= 0;
    case Relation::Less:
      return row.bound > 0;
    case Relation::Equal:
      return row.bound == 0;
  }
  return false;
}

}  // namespace detail

/// Exact feasibility of an inequality system by variable elimination.
/// Equalities are removed first by substitution; the remaining
/// inequalities go through Fourier-Motzkin one variable at a time.
/// Throws SizeExceeded beyond the desk-scale guard.
inline bool fm_feasible(const InequalitySystem& sys) {
  if (sys.dim > kFmMaxDim || sys.rows.size() > kFmMaxRows) {
    throw SizeExceeded("fm_feasible: dim " + std::to_string(sys.dim) + ", rows " +
                       std::to_string(sys.rows.size()) + " exceed guard (" +
                       std::to_string(kFmMaxDim) + ", " + std::to_string(kFmMaxRows) + ")");
  }

  std::vector<InequalityRow> rows = sys.rows;
  std::vector<bool> eliminated(sys.dim, false);

  auto find_nonzero = [&](const InequalityRow& row) -> std::size_t {
    for (std::size_t k = 0; k < sys.dim; ++k) {
      if (!eliminated[k] && row.coeffs[k] != 0) return k;
    }
    return sys.dim;
  };

  // Substitution pass: each equality row pins one variable in terms of
  // the rest and then disappears together with that variable.
  for (;;) {
    std::size_t eq_idx = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rel == Relation::Equal) {
        eq_idx = i;
        break;
      }
    }
    if (eq_idx == rows.size()) break;
    const InequalityRow eq = rows[eq_idx];
    const std::size_t k = find_nonzero(eq);
    if (k == sys.dim) {
      if (eq.bound != 0) return false;
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(eq_idx));
      continue;
    }
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(eq_idx));
    for (InequalityRow& row : rows) {
      if (row.coeffs[k] == 0) continue;
      const Rational f = row.coeffs[k] / eq.coeffs[k];
      for (std::size_t j = 0; j < sys.dim; ++j) row.coeffs[j] -= f * eq.coeffs[j];
      row.bound -= f * eq.bound;
    }
    eliminated[k] = true;
  }

  // Fourier-Motzkin on the remaining <= / < rows.
  for (std::size_t k = 0; k < sys.dim; ++k) {
    if (eliminated[k]) continue;
    std::vector<InequalityRow> uppers, lowers, rest;
    for (InequalityRow& row : rows) {
      if (row.coeffs[k] > 0) {
        uppers.push_back(std::move(row));
      } else if (row.coeffs[k] < 0) {
        lowers.push_back(std::move(row));
      } else {
        rest.push_back(std::move(row));
      }
    }
    for (const InequalityRow& lo : lowers) {
      for (const InequalityRow& up : uppers) {
        InequalityRow combo;
        combo.coeffs = zero_vec(sys.dim);
        const Rational a = up.coeffs[k];   // > 0
        const Rational b = -lo.coeffs[k];  // > 0
        for (std::size_t j = 0; j < sys.dim; ++j) {
          combo.coeffs[j] = a * lo.coeffs[j] + b * up.coeffs[j];
        }
        combo.bound = a * lo.bound + b * up.bound;
        combo.rel = (lo.rel == Relation::Less || up.rel == Relation::Less) ? Relation::Less
                                                                           : Relation::LessEq;
        detail::normalize_row(combo);
        bool seen = false;
        for (const InequalityRow& r : rest) {
          if (detail::row_equal(r, combo)) {
            seen = true;
            break;
          }
        }
        if (!seen) rest.push_back(std::move(combo));
      }
    }
    rows = std::move(rest);
  }

  for (const InequalityRow& row : rows) {
    // Only constant rows remain.
    if (!detail::constant_row_holds(row)) return false;
  }
  return true;
}

/// Independent membership decision: encodes {sum(alpha_i w_i) = t,
/// alpha_i >= 0} and hands it to fm_feasible. Guarded to small instances.
inline bool oracle_membership(const FeasibilityProblem& p) {
  const std::size_t m = p.generators.size();
  const std::size_t n = p.generators.dim;
  if (m > kOracleMaxGenerators || n > kOracleMaxDim) {
    throw SizeExceeded("oracle_membership: " + std::to_string(m) + " generators, dim " +
                       std::to_string(n) + " exceed guard (" +
                       std::to_string(kOracleMaxGenerators) + ", " +
                       std::to_string(kOracleMaxDim) + ")");
  }
  InequalitySystem sys;
  sys.dim = m;
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = zero_vec(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = p.generators[j][i];
    sys.add(std::move(row), Relation::Equal, p.target[i]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vec row = zero_vec(m);
    row[j] = -1;
    sys.add(std::move(row), Relation::LessEq, Rational(0));
  }
  return fm_feasible(sys);
}

/// Alternative positive-spanning characterization: the set spans linearly
/// and some strictly positive combination of it vanishes. Strict
/// positivity is encoded as lambda_i >= 1, which is equivalent because
/// the solution set of {sum(lambda_i v_i) = 0} is a cone.
inline bool oracle_positive_spanning(const VecSet& set) {
  const std::size_t m = set.size();
  const std::size_t n = set.dim;
  if (m > kOracleMaxGenerators || n > kOracleMaxDim) {
    throw SizeExceeded("oracle_positive_spanning: " + std::to_string(m) + " vectors, dim " +
                       std::to_string(n) + " exceed guard (" +
                       std::to_string(kOracleMaxGenerators) + ", " +
                       std::to_string(kOracleMaxDim) + ")");
  }
  if (rank(set) != n) return false;
  InequalitySystem sys;
  sys.dim = m;
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = zero_vec(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = set[j][i];
    sys.add(std::move(row), Relation::Equal, Rational(0));
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vec row = zero_vec(m);
    row[j] = -1;
    sys.add(std::move(row), Relation::LessEq, Rational(-1));  // lambda_j >= 1
  }
  return fm_feasible(sys);
}

}  // namespace pbasis
