#ifndef CAPMSE_MODEL_SPEC_HPP
#define CAPMSE_MODEL_SPEC_HPP

#include <set>
#include <string>

#include "capmse/table.hpp"

namespace capmse {

/// Fixed loglinear terms. List variables are A, B, C; R is the stratifier.
enum class Term {
  Intercept,
  A,
  B,
  C,
  AB,
  AC,
  BC,
  R,
  AR,
  BR,
  CR,
  ABR,
  ACR,
  BCR,
};

/// Stratum-level random terms: an intercept plus slopes for list main effects
/// and list-pair interactions. Each contributes one mode per stratum and one
/// variance component.
enum class RandomTerm {
  U0,  // intercept by stratum
  U1,  // A by stratum
  U2,  // B by stratum
  U3,  // C by stratum
  U4,  // AB by stratum
  U5,  // AC by stratum
  U6,  // BC by stratum
};

enum class Parameterization { CornerPoint, SumZero };

std::string term_name(Term t);
std::string random_term_name(RandomTerm t);

/// Which loglinear model to fit: the fixed term set, optional random terms,
/// and the identification constraints.
struct ModelSpec {
  int lists = 2;
  std::set<Term> terms;
  std::set<RandomTerm> random_terms;
  Parameterization parameterization = Parameterization::CornerPoint;

  bool has(Term t) const { return terms.count(t) > 0; }
  bool has(RandomTerm t) const { return random_terms.count(t) > 0; }
  bool is_mixed() const { return !random_terms.empty(); }

  /// Saturated specs carry the all-lists interaction, so the cell missed by
  /// every list becomes part of the fitted table (its count must then be
  /// supplied as truth metadata).
  bool includes_missing_cell() const { return lists == 2 && has(Term::AB); }

  /// Internal consistency (term/list compatibility, random-term rules).
  void validate() const;
  /// validate() plus compatibility with a concrete table.
  void validate(const StratifiedTable& table) const;

  // Dual-list models.
  static ModelSpec dual_independence(Parameterization p = Parameterization::CornerPoint);
  static ModelSpec dual_saturated(Parameterization p = Parameterization::CornerPoint);
  /// Conditional-independence model with per-stratum parameters; zero
  /// degrees of freedom on the observed cells.
  static ModelSpec dual_maximal(Parameterization p = Parameterization::CornerPoint);
  static ModelSpec dual_saturated_stratified(Parameterization p = Parameterization::CornerPoint);
  /// Random intercept plus random slopes for both lists; sum-zero.
  static ModelSpec dual_mixed_maximal();

  // Triple-list models.
  static ModelSpec triple_maximal(Parameterization p = Parameterization::CornerPoint);
  static ModelSpec triple_mixed_maximal();
};

}  // namespace capmse

#endif
