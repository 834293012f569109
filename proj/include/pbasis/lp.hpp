#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/vec.hpp"

namespace pbasis {

/// Membership question: does target lie in the cone of nonnegative
/// combinations of the generators?
struct FeasibilityProblem {
  VecSet generators;
  Vec target;

  FeasibilityProblem(VecSet gens, Vec t) : generators(std::move(gens)), target(std::move(t)) {
    if (target.dim() != generators.dim) {
      throw DimensionMismatch("FeasibilityProblem: target dim " + std::to_string(target.dim()) +
                              " vs generators dim " + std::to_string(generators.dim));
    }
  }
};

/// Witness that the target is inside: one nonnegative alpha per generator
/// with sum(alpha_i * w_i) = target, exactly.
struct Coefficients {
  std::vector<Rational> alphas;
};

/// Witness that the target is outside: a separating normal h with
/// h.w_i <= 0 for every generator and h.t > 0. Kept in integer-primitive
/// form (denominators 1, gcd of absolute values 1).
struct FarkasCertificate {
  Vec normal;
};

/// Every verdict carries a checkable witness.
class MembershipResult {
 public:
  static MembershipResult make_inside(Coefficients c) { return MembershipResult(std::move(c)); }
  static MembershipResult make_outside(FarkasCertificate h) {
    return MembershipResult(std::move(h));
  }

  bool inside() const { return std::holds_alternative<Coefficients>(value_); }

  const Coefficients& coefficients() const {
    if (!inside()) throw std::logic_error("MembershipResult: no coefficients on Outside");
    return std::get<Coefficients>(value_);
  }

  const FarkasCertificate& certificate() const {
    if (inside()) throw std::logic_error("MembershipResult: no certificate on Inside");
    return std::get<FarkasCertificate>(value_);
  }

 private:
  explicit MembershipResult(Coefficients c) : value_(std::move(c)) {}
  explicit MembershipResult(FarkasCertificate h) : value_(std::move(h)) {}

  std::variant<Coefficients, FarkasCertificate> value_;
};

/// True iff all alphas are nonnegative and sum(alpha_i * w_i) = target
/// exactly. Any violation (including a size mismatch) returns false.
inline bool verify_inside(const FeasibilityProblem& p, const Coefficients& c) {
  if (c.alphas.size() != p.generators.size()) return false;
  for (const Rational& a : c.alphas) {
    if (a < 0) return false;
  }
  Vec sum = zero_vec(p.generators.dim);
  for (std::size_t i = 0; i < c.alphas.size(); ++i) {
    sum = add(sum, scale(p.generators[i], c.alphas[i]));
  }
  return sum == p.target;
}

/// True iff h.w_i <= 0 for every generator and h.t > 0, exactly.
inline bool verify_certificate(const FeasibilityProblem& p, const FarkasCertificate& cert) {
  if (cert.normal.dim() != p.generators.dim) return false;
  for (const Vec& w : p.generators.vectors) {
    if (dot(cert.normal, w) > 0) return false;
  }
  return dot(cert.normal, p.target) > 0;
}

namespace detail {

/// Scales a nonzero rational vector by the unique positive constant that
/// makes all coordinates integers with gcd of absolute values 1.
inline Vec primitive_integer_direction(const Vec& v) {
  Int l = 1;
  for (const Rational& c : v.coords) l = lcm(l, denominator(c));
  std::vector<Int> ints;
  ints.reserve(v.dim());
  Int g = 0;
  for (const Rational& c : v.coords) {
    Int scaled = numerator(c) * (l / denominator(c));
    g = gcd(g, scaled);
    ints.push_back(std::move(scaled));
  }
  if (g == 0) throw std::logic_error("primitive_integer_direction: zero vector");
  Vec out = zero_vec(v.dim());
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

// Phase-1 simplex tableau for {W.alpha = b, alpha >= 0}. Rows are the
// equality constraints (signs flipped so the right-hand side is
// nonnegative), columns are the m original variables followed by n
// artificials. Bland's pivot rule throughout, so termination is
// guaranteed even on degenerate instances.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const VecSet& gens, const Vec& target)
      : n_(gens.dim), m_(gens.size()), cols_(m_ + n_), row_sign_(n_, 1) {
    tab_.assign(n_, std::vector<Rational>(cols_ + 1, Rational(0)));
    for (std::size_t i = 0; i < n_; ++i) {
      const bool flip = target[i] < 0;
      row_sign_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < m_; ++j) {
        tab_[i][j] = flip ? -gens[j][i] : gens[j][i];
      }
      tab_[i][m_ + i] = 1;
      tab_[i][cols_] = flip ? -target[i] : target[i];
    }
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) basis_[i] = m_ + i;
    // Reduced costs for min sum(artificials): r_j = c_j - sum of column j
    // over the rows (every starting basic cost is 1).
    reduced_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < m_; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += tab_[i][j];
      reduced_[j] = -s;
    }
  }

  void run() {
    for (;;) {
      // Bland: entering column = smallest index with negative reduced cost.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;  // optimal
      // Ratio test; ties resolved toward the smallest basic index (Bland).
      std::size_t leave = n_;
      for (std::size_t i = 0; i < n_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        if (leave == n_) {
          leave = i;
          continue;
        }
        const Rational lhs = tab_[i][cols_] * tab_[leave][enter];
        const Rational rhs = tab_[leave][cols_] * tab_[i][enter];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == n_) {
        // Unbounded descent is impossible: the objective is bounded below by 0.
        throw std::logic_error("phase-1 simplex: unbounded column");
      }
      pivot(leave, enter);
    }
  }

  Rational objective() const {
    Rational s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (basis_[i] >= m_) s += tab_[i][cols_];
    }
    return s;
  }

  Coefficients extract_coefficients() const {
    Coefficients c;
    c.alphas.assign(m_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (basis_[i] < m_) c.alphas[basis_[i]] = tab_[i][cols_];
    }
    return c;
  }

  // Dual y from the final reduced costs of the artificial columns
  // (r_{a_i} = 1 - y_i), mapped back through the row sign flips.
  FarkasCertificate extract_certificate() const {
    Vec h = zero_vec(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      h[i] = Rational(row_sign_[i]) * (Rational(1) - reduced_[m_ + i]);
    }
    return FarkasCertificate{primitive_integer_direction(h)};
  }

 private:
  void pivot(std::size_t r, std::size_t s) {
    const Rational piv = tab_[r][s];
    for (std::size_t j = 0; j <= cols_; ++j) tab_[r][j] /= piv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == r || tab_[i][s] == 0) continue;
      const Rational f = tab_[i][s];
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    const Rational fr = reduced_[s];
    if (fr != 0) {
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= fr * tab_[r][j];
    }
    basis_[r] = s;
  }

  std::size_t n_;     // rows (ambient dimension)
  std::size_t m_;     // original variables (generators)
  std::size_t cols_;  // m_ + n_ structural columns
  std::vector<int> row_sign_;
  std::vector<std::vector<Rational>> tab_;  // n_ rows, cols_+1 (rhs last)
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Decides target-in-cone membership exactly. Returns Inside with
/// verified coefficients or Outside with a verified integer-primitive
/// Farkas certificate; a witness that fails its own verification is a
/// logic error, never a return value.
inline MembershipResult solve_feasibility(const FeasibilityProblem& p) {
  if (p.generators.size() == 0) {
    if (p.target.is_zero()) {
      return MembershipResult::make_inside(Coefficients{});
    }
    FarkasCertificate cert{detail::primitive_integer_direction(p.target)};
    if (!verify_certificate(p, cert)) {
      throw std::logic_error("solve_feasibility: empty-set certificate failed verification");
    }
    return MembershipResult::make_outside(cert);
  }

  detail::PhaseOneSimplex simplex(p.generators, p.target);
  simplex.run();

  if (simplex.objective() == 0) {
    Coefficients c = simplex.extract_coefficients();
    if (!verify_inside(p, c)) {
      throw std::logic_error("solve_feasibility: coefficients failed verification");
    }
    return MembershipResult::make_inside(std::move(c));
  }
  FarkasCertificate cert = simplex.extract_certificate();
  if (!verify_certificate(p, cert)) {
    throw std::logic_error("solve_feasibility: certificate failed verification");
  }
  return MembershipResult::make_outside(std::move(cert));
}

}  // namespace pbasis
