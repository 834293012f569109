// Minimal library tour: build a set, check the three predicates, inspect
// the witnesses, and run a short direct search over a positive basis.

#include <iostream>

#include "pbasis/pbasis.hpp"

int main() {
  using namespace pbasis;

  // A minimal positive basis of R^2: e1, e2, and -(e1+e2).
  const VecSet basis = gen_minimal_basis(2);
  auto [is_basis, report] = is_positive_basis(basis);
  std::cout << "minimal basis of R^2 is a positive basis: " << std::boolalpha << is_basis
            << "\n\n";
  std::cout << render_report(ReportDocument{Predicate::basis, report});

  // Membership with a checkable answer either way.
  const FeasibilityProblem outside_example(VecSet(2, {Vec{1, 0}, Vec{0, 1}}),
                                           Vec{Rational(-1), Rational(0)});
  const MembershipResult verdict = solve_feasibility(outside_example);
  std::cout << "\n(-1,0) in cone{e1,e2}: " << verdict.inside() << "\n";
  if (!verdict.inside()) {
    std::cout << "separating normal:";
    for (const Rational& c : verdict.certificate().normal.coords) {
      std::cout << " " << format_rational(c);
    }
    std::cout << "\n";
  }

  // Arbitrarily large positively linearly independent sets exist from
  // dimension 3 up: lifted rational circle points.
  const VecSet lifted = gen_circle_lift(3, default_circle_params(12));
  std::cout << "\n12 lifted circle points in R^3, PLI: " << is_pli(lifted).first << "\n";

  // Direct search over a positive spanning pattern descends on smooth
  // objectives until the step collapses.
  PollState start{{1.0, 1.0}, 1.0, gen_maximal_basis(2), 0, std::nullopt};
  const PollState end = search(objectives::sphere, std::move(start), 0.5, 1e-6, 500);
  std::cout << "\nsearch from (1,1) on |x|^2: f = " << *end.incumbent_value << " after "
            << end.evals << " evaluations\n";
  return 0;
}
