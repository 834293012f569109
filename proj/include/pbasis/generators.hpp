#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/rational.hpp"
#include "pbasis/vec.hpp"

namespace pbasis {

/// Slope parameter of the rational circle parametrization; t >= 0 covers
/// every unit-circle point except (-1, 0), injectively.
struct CircleParam {
  Rational t;

  explicit CircleParam(Rational value) : t(std::move(value)) {
    if (t < 0) throw PreconditionViolated("CircleParam: t must be >= 0");
  }

  friend bool operator==(const CircleParam& a, const CircleParam& b) { return a.t == b.t; }
};

/// ((1-t^2)/(1+t^2), 2t/(1+t^2)): an exact rational point on the unit circle.
inline Vec rational_circle_point(const CircleParam& p) {
  const Rational t2 = p.t * p.t;
  const Rational d = 1 + t2;
  return Vec{(1 - t2) / d, 2 * p.t / d};
}

/// Minimal positive basis {e_1, ..., e_n, -(e_1 + ... + e_n)}: n+1 vectors.
inline VecSet gen_minimal_basis(std::size_t n) {
  if (n < 1) throw PreconditionViolated("gen_minimal_basis: n must be >= 1");
  VecSet set(n);
  for (std::size_t i = 0; i < n; ++i) {
    set.push_back(unit_vec(n, i), "e" + std::to_string(i + 1));
  }
  set.push_back(Vec(std::vector<Rational>(n, Rational(-1))), "-sum");
  return set;
}

/// Maximal positive basis {e_1, ..., e_n, -e_1, ..., -e_n}: 2n vectors.
inline VecSet gen_maximal_basis(std::size_t n) {
  if (n < 1) throw PreconditionViolated("gen_maximal_basis: n must be >= 1");
  VecSet set(n);
  for (std::size_t i = 0; i < n; ++i) {
    set.push_back(unit_vec(n, i), "e" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    set.push_back(negate(unit_vec(n, i)), "-e" + std::to_string(i + 1));
  }
  return set;
}

/// All 0/1 vectors of dimension n with exactly floor(n/2) ones, ordered by
/// the positions of the ones. Cardinality C(n, floor(n/2)); the family is
/// positively linearly independent for every n.
inline VecSet gen_binomial(std::size_t n) {
  if (n < 2) throw PreconditionViolated("gen_binomial: n must be >= 2");
  const std::size_t k = n / 2;
  VecSet set(n);
  std::vector<std::size_t> ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = i;
  for (;;) {
    Vec v = zero_vec(n);
    for (std::size_t pos : ones) v[pos] = 1;
    set.push_back(std::move(v));
    // Advance to the next k-combination of {0, ..., n-1}.
    std::size_t i = k;
    while (i > 0 && ones[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++ones[i - 1];
    for (std::size_t j = i; j < k; ++j) ones[j] = ones[j - 1] + 1;
  }
  return set;
}

/// Distinct rational circle points lifted to height 1 and zero-padded into
/// R^n: (x_i, y_i, 1, 0, ..., 0). Positively linearly independent for any
/// number of parameters.
inline VecSet gen_circle_lift(std::size_t n, const std::vector<CircleParam>& params) {
  if (n < 3) {
    throw DimensionTooSmall("gen_circle_lift: need n >= 3, got " + std::to_string(n));
  }
  if (params.empty()) throw PreconditionViolated("gen_circle_lift: need at least one parameter");
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      if (params[i] == params[j]) {
        throw DuplicateParameter("gen_circle_lift: repeated parameter t = " +
                                 format_rational(params[i].t));
      }
    }
  }
  VecSet set(n);
  for (const CircleParam& p : params) {
    const Vec xy = rational_circle_point(p);
    Vec v = zero_vec(n);
    v[0] = xy[0];
    v[1] = xy[1];
    v[2] = 1;
    set.push_back(std::move(v), "t=" + format_rational(p.t));
  }
  return set;
}

/// Convenience parameter list t = 0, 1, ..., m-1.
inline std::vector<CircleParam> default_circle_params(std::size_t m) {
  std::vector<CircleParam> params;
  params.reserve(m);
  for (std::size_t i = 0; i < m; ++i) params.emplace_back(Rational(i));
  return params;
}

}  // namespace pbasis
