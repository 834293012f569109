#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/vec.hpp"

namespace pbasis {

// The search demo runs on doubles: objective callbacks are approximate by
// nature, so the exact core stops at the pattern itself.

using Objective = std::function<double(const std::vector<double>&)>;

struct PollState {
  std::vector<double> incumbent;
  double step = 1.0;
  VecSet pattern;
  long long evals = 0;
  // f(incumbent), once known; kept so repolling the same incumbent does
  // not re-spend evaluations.
  std::optional<double> incumbent_value;
};

struct Improved {
  std::vector<double> new_incumbent;
  std::size_t direction_index;
  double value;
};

struct NoImprovement {
  bool exhausted_pattern = true;  // false when an eval cap cut the poll short
};

using PollOutcome = std::variant<Improved, NoImprovement>;

inline bool improved(const PollOutcome& o) { return std::holds_alternative<Improved>(o); }

namespace detail {

inline double eval_objective(const Objective& f, const std::vector<double>& x, PollState& s) {
  const double y = f(x);
  ++s.evals;
  if (!std::isfinite(y)) {
    throw ObjectiveFailure("objective returned non-finite value " + std::to_string(y));
  }
  return y;
}

inline std::vector<double> pattern_direction(const VecSet& pattern, std::size_t i) {
  std::vector<double> d(pattern.dim);
  for (std::size_t j = 0; j < pattern.dim; ++j) {
    d[j] = static_cast<double>(pattern[i][j]);
  }
  return d;
}

}  // namespace detail

/// One poll round: evaluates f(x + step*v) over the pattern in order and
/// stops at the first strict improvement (opportunistic). `max_new_evals`
/// caps the evaluations this call may spend (< 0 means no cap).
inline PollOutcome poll(const Objective& f, PollState& s, long long max_new_evals = -1) {
  if (s.pattern.size() == 0) throw PreconditionViolated("poll: empty pattern");
  if (!(s.step > 0)) throw PreconditionViolated("poll: step must be > 0");
  if (s.incumbent.size() != s.pattern.dim) {
    throw DimensionMismatch("poll: incumbent dim " + std::to_string(s.incumbent.size()) +
                            " vs pattern dim " + std::to_string(s.pattern.dim));
  }
  const long long start = s.evals;
  auto budget_left = [&] { return max_new_evals < 0 || s.evals - start < max_new_evals; };

  if (!s.incumbent_value) {
    if (!budget_left()) return NoImprovement{false};
    s.incumbent_value = detail::eval_objective(f, s.incumbent, s);
  }
  for (std::size_t i = 0; i < s.pattern.size(); ++i) {
    if (!budget_left()) return NoImprovement{false};
    const std::vector<double> v = detail::pattern_direction(s.pattern, i);
    std::vector<double> candidate = s.incumbent;
    for (std::size_t j = 0; j < candidate.size(); ++j) candidate[j] += s.step * v[j];
    const double fy = detail::eval_objective(f, candidate, s);
    if (fy < *s.incumbent_value) {
      return Improved{std::move(candidate), i, fy};
    }
  }
  return NoImprovement{true};
}

/// Repeated polling: an improvement moves the incumbent (step unchanged),
/// a full poll without improvement shrinks the step. Stops when the step
/// falls below step_min or the evaluation budget runs out.
inline PollState search(const Objective& f, PollState s0, double shrink, double step_min,
                        long long eval_budget) {
  if (!(shrink > 0 && shrink < 1)) {
    throw PreconditionViolated("search: shrink must lie in (0, 1)");
  }
  if (!(step_min > 0) || !(step_min < s0.step)) {
    throw PreconditionViolated("search: need 0 < step_min < initial step");
  }
  if (eval_budget < 1) throw PreconditionViolated("search: eval budget must be >= 1");

  PollState s = std::move(s0);
  while (s.step >= step_min && s.evals < eval_budget) {
    PollOutcome outcome = poll(f, s, eval_budget - s.evals);
    if (auto* imp = std::get_if<Improved>(&outcome)) {
      s.incumbent = std::move(imp->new_incumbent);
      s.incumbent_value = imp->value;
    } else if (std::get<NoImprovement>(outcome).exhausted_pattern) {
      s.step *= shrink;
    } else {
      break;  // budget ran out mid-poll
    }
  }
  return s;
}

/// Built-in objectives for the CLI menu.
namespace objectives {

inline double sphere(const std::vector<double>& x) {
  double s = 0;
  for (double c : x) s += c * c;
  return s;
}

/// Quadratic bowl centered at (1, 2, 3, ...).
inline double shifted_quadratic(const std::vector<double>& x) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - static_cast<double>(i + 1);
    s += d * d;
  }
  return s;
}

/// Nonsmooth absolute-value sum.
inline double abs_sum(const std::vector<double>& x) {
  double s = 0;
  for (double c : x) s += std::fabs(c);
  return s;
}

}  // namespace objectives

}  // namespace pbasis
