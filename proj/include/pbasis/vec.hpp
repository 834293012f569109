#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/rational.hpp"

namespace pbasis {

/// Fixed-dimension vector of exact rationals.
struct Vec {
  std::vector<Rational> coords;

  Vec() = default;
  explicit Vec(std::vector<Rational> c) : coords(std::move(c)) {}
  Vec(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (const Rational& c : coords) {
      if (c != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords == b.coords; }
};

inline Vec zero_vec(std::size_t dim) { return Vec(std::vector<Rational>(dim, Rational(0))); }

/// i-th standard unit vector of the given dimension.
inline Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec e = zero_vec(dim);
  e[i] = 1;
  return e;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("add: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  Vec r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

/// Coordinatewise product c*v.
inline Vec scale(const Vec& v, const Rational& c) {
  Vec r = v;
  for (Rational& x : r.coords) x *= c;
  return r;
}

inline Vec negate(const Vec& v) { return scale(v, Rational(-1)); }

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dot: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

/// Ordered collection of vectors sharing one dimension, with optional
/// per-vector display labels. Duplicates are allowed at this layer; the
/// predicates decide what they mean.
struct VecSet {
  std::size_t dim = 0;
  std::vector<Vec> vectors;
  std::vector<std::string> labels;  // empty, or one entry per vector

  VecSet() = default;

  explicit VecSet(std::size_t dimension) : dim(dimension) {
    if (dim < 1) throw DimensionMismatch("VecSet: dimension must be >= 1");
  }

  VecSet(std::size_t dimension, std::vector<Vec> vs) : VecSet(dimension) {
    for (Vec& v : vs) push_back(std::move(v));
  }

  std::size_t size() const { return vectors.size(); }
  const Vec& operator[](std::size_t i) const { return vectors[i]; }

  void push_back(Vec v, std::string label = {}) {
    if (v.dim() != dim) {
      throw DimensionMismatch("VecSet: vector of dim " + std::to_string(v.dim()) +
                              " in set of dim " + std::to_string(dim));
    }
    vectors.push_back(std::move(v));
    if (!label.empty()) {
      labels.resize(vectors.size() - 1);
      labels.push_back(std::move(label));
    } else if (!labels.empty()) {
      labels.emplace_back();
    }
  }

  bool has_labels() const { return !labels.empty(); }

  std::string label(std::size_t i) const {
    return i < labels.size() ? labels[i] : std::string();
  }

  /// The set with vector i removed (labels follow).
  VecSet without(std::size_t i) const {
    VecSet r(dim);
    for (std::size_t j = 0; j < size(); ++j) {
      if (j == i) continue;
      r.push_back(vectors[j], label(j));
    }
    return r;
  }

  friend bool operator==(const VecSet& a, const VecSet& b) {
    return a.dim == b.dim && a.vectors == b.vectors && a.labels == b.labels;
  }
};

/// Dense row-major rational matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;  // rows*cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Rational(0)) {}

  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

/// Matrix whose rows are the set's vectors.
inline Matrix rows_matrix(const VecSet& set) {
  Matrix m(set.size(), set.dim);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.dim; ++j) m.at(i, j) = set[i][j];
  }
  return m;
}

}  // namespace pbasis
