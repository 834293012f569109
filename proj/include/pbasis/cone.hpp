#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/linalg.hpp"
#include "pbasis/lp.hpp"
#include "pbasis/vec.hpp"

namespace pbasis {

/// Definitional conventions applied when the mechanical membership tests
/// do not decide a verdict by themselves.
enum class Convention {
  none,
  empty_set,  // empty set is positively linearly independent vacuously
  singleton,  // a one-element set is PLI even when its element is 0
};

/// Membership verdict for one vector against the rest of its set.
struct PliEntry {
  std::size_t index;
  MembershipResult result;
};

/// Membership verdict for one signed coordinate direction.
struct SpanningWitness {
  std::size_t axis;
  int sign;  // +1 or -1
  MembershipResult result;
};

/// Certified record of a predicate evaluation: every verdict is backed by
/// per-problem witnesses that re-verify independently.
struct CheckReport {
  VecSet set;
  std::vector<PliEntry> per_vector;
  std::vector<SpanningWitness> spanning_witnesses;
  std::optional<bool> verdict_pli;
  std::optional<bool> verdict_spanning;
  std::optional<bool> verdict_basis;
  Convention convention = Convention::none;
};

/// The membership problem behind PLI entry i: is v_i a nonnegative
/// combination of the other vectors?
inline FeasibilityProblem pli_problem(const VecSet& set, std::size_t i) {
  return FeasibilityProblem(set.without(i), set[i]);
}

/// The membership problem behind one spanning witness: is sign*e_axis a
/// nonnegative combination of the whole set?
inline FeasibilityProblem spanning_problem(const VecSet& set, std::size_t axis, int sign) {
  Vec target = unit_vec(set.dim, axis);
  if (sign < 0) target = negate(target);
  return FeasibilityProblem(set, std::move(target));
}

namespace detail {

inline void check_pli_into(const VecSet& set, CheckReport& report) {
  report.per_vector.clear();
  bool all_outside = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    MembershipResult r = solve_feasibility(pli_problem(set, i));
    all_outside = all_outside && !r.inside();
    report.per_vector.push_back(PliEntry{i, std::move(r)});
  }
  if (set.size() == 0) {
    report.convention = Convention::empty_set;
    report.verdict_pli = true;
  } else if (set.size() == 1) {
    // The one-element set is declared PLI even when its element is 0;
    // mechanically {0} would fail against p-span() = {0}.
    report.convention = Convention::singleton;
    report.verdict_pli = true;
  } else {
    report.verdict_pli = all_outside;
  }
}

inline void check_spanning_into(const VecSet& set, CheckReport& report) {
  report.spanning_witnesses.clear();
  bool all_inside = true;
  for (std::size_t axis = 0; axis < set.dim; ++axis) {
    for (int sign : {+1, -1}) {
      MembershipResult r = solve_feasibility(spanning_problem(set, axis, sign));
      all_inside = all_inside && r.inside();
      report.spanning_witnesses.push_back(SpanningWitness{axis, sign, std::move(r)});
    }
  }
  report.verdict_spanning = all_inside;
}

}  // namespace detail

/// Positive linear independence: no member lies in the positive span of
/// the others. One membership problem per vector; the report carries all
/// witnesses.
inline std::pair<bool, CheckReport> is_pli(const VecSet& set) {
  CheckReport report;
  report.set = set;
  detail::check_pli_into(set, report);
  return {*report.verdict_pli, std::move(report)};
}

/// Positive spanning: the cone of the set is all of R^n. A cone contains
/// every vector iff it contains +-e_i for each coordinate axis, so 2n
/// membership problems decide it.
inline std::pair<bool, CheckReport> is_positively_spanning(const VecSet& set) {
  CheckReport report;
  report.set = set;
  detail::check_spanning_into(set, report);
  return {*report.verdict_spanning, std::move(report)};
}

/// Positive basis: positively spanning and positively linearly
/// independent, evaluated into one combined report.
inline std::pair<bool, CheckReport> is_positive_basis(const VecSet& set) {
  CheckReport report;
  report.set = set;
  detail::check_pli_into(set, report);
  detail::check_spanning_into(set, report);
  report.verdict_basis = *report.verdict_pli && *report.verdict_spanning;
  return {*report.verdict_basis, std::move(report)};
}

/// For a positively spanning set, dropping any single vector must still
/// leave a linear spanning set. Requires the precondition to hold.
inline bool remove_one_still_spans(const VecSet& set) {
  if (!is_positively_spanning(set).first) {
    throw PreconditionViolated("remove_one_still_spans: set is not positively spanning");
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (rank(set.without(i)) != set.dim) return false;
  }
  return true;
}

}  // namespace pbasis
