#include "capmse/model_spec.hpp"

#include "capmse/errors.hpp"

namespace capmse {

namespace {

bool term_uses_c(Term t) {
  switch (t) {
    case Term::C:
    case Term::AC:
    case Term::BC:
    case Term::CR:
    case Term::ACR:
    case Term::BCR:
      return true;
    default:
      return false;
  }
}

Term fixed_counterpart(RandomTerm t) {
  switch (t) {
    case RandomTerm::U0: return Term::Intercept;
    case RandomTerm::U1: return Term::A;
    case RandomTerm::U2: return Term::B;
    case RandomTerm::U3: return Term::C;
    case RandomTerm::U4: return Term::AB;
    case RandomTerm::U5: return Term::AC;
    case RandomTerm::U6: return Term::BC;
  }
  throw SpecificationError("unknown random term");
}

}  // namespace

std::string term_name(Term t) {
  switch (t) {
    case Term::Intercept: return "(Intercept)";
    case Term::A: return "A";
    case Term::B: return "B";
    case Term::C: return "C";
    case Term::AB: return "A:B";
    case Term::AC: return "A:C";
    case Term::BC: return "B:C";
    case Term::R: return "R";
    case Term::AR: return "A:R";
    case Term::BR: return "B:R";
    case Term::CR: return "C:R";
    case Term::ABR: return "A:B:R";
    case Term::ACR: return "A:C:R";
    case Term::BCR: return "B:C:R";
  }
  throw SpecificationError("unknown term");
}

std::string random_term_name(RandomTerm t) {
  switch (t) {
    case RandomTerm::U0: return "u0";
    case RandomTerm::U1: return "u1";
    case RandomTerm::U2: return "u2";
    case RandomTerm::U3: return "u3";
    case RandomTerm::U4: return "u4";
    case RandomTerm::U5: return "u5";
    case RandomTerm::U6: return "u6";
  }
  throw SpecificationError("unknown random term");
}

void ModelSpec::validate() const {
  if (lists != 2 && lists != 3)
    throw SpecificationError("a model covers 2 or 3 lists");
  if (!has(Term::Intercept))
    throw SpecificationError("models must include an intercept");
  if (lists == 2) {
    for (Term t : terms) {
      if (term_uses_c(t))
        throw SpecificationError("term " + term_name(t) + " references list C on a dual model");
    }
    if (has(RandomTerm::U3) || has(RandomTerm::U5) || has(RandomTerm::U6))
      throw SpecificationError("random term references list C on a dual model");
  }
  if (is_mixed() && parameterization != Parameterization::SumZero)
    throw SpecificationError(
        "random terms require the sum-zero parameterization (mean-zero random effects)");
  for (RandomTerm t : random_terms) {
    if (!has(fixed_counterpart(t)))
      throw SpecificationError("random term " + random_term_name(t) +
                               " requires fixed term " + term_name(fixed_counterpart(t)));
  }
}

void ModelSpec::validate(const StratifiedTable& table) const {
  validate();
  if (lists != table.lists())
    throw SpecificationError("model is for " + std::to_string(lists) + " lists but table has " +
                             std::to_string(table.lists()));
  if (includes_missing_cell() && table.is_dual()) {
    for (std::size_t l = 0; l < table.strata(); ++l) {
      if (!table.dual_at(l).n00_truth)
        throw SpecificationError("saturated model needs the unobserved cell; stratum '" +
                                 table.labels()[l] + "' has no n00 value");
    }
  }
}

ModelSpec ModelSpec::dual_independence(Parameterization p) {
  ModelSpec s;
  s.lists = 2;
  s.terms = {Term::Intercept, Term::A, Term::B};
  s.parameterization = p;
  return s;
}

ModelSpec ModelSpec::dual_saturated(Parameterization p) {
  ModelSpec s = dual_independence(p);
  s.terms.insert(Term::AB);
  return s;
}

ModelSpec ModelSpec::dual_maximal(Parameterization p) {
  ModelSpec s = dual_independence(p);
  s.terms.insert({Term::R, Term::AR, Term::BR});
  return s;
}

ModelSpec ModelSpec::dual_saturated_stratified(Parameterization p) {
  ModelSpec s = dual_maximal(p);
  s.terms.insert({Term::AB, Term::ABR});
  return s;
}

ModelSpec ModelSpec::dual_mixed_maximal() {
  ModelSpec s = dual_independence(Parameterization::SumZero);
  s.random_terms = {RandomTerm::U0, RandomTerm::U1, RandomTerm::U2};
  return s;
}

ModelSpec ModelSpec::triple_maximal(Parameterization p) {
  ModelSpec s;
  s.lists = 3;
  s.terms = {Term::Intercept, Term::A,  Term::B,  Term::C,   Term::AB,  Term::AC,  Term::BC,
             Term::R,         Term::AR, Term::BR, Term::CR,  Term::ABR, Term::ACR, Term::BCR};
  s.parameterization = p;
  return s;
}

ModelSpec ModelSpec::triple_mixed_maximal() {
  ModelSpec s;
  s.lists = 3;
  s.terms = {Term::Intercept, Term::A,  Term::B,  Term::C,
             Term::AB,        Term::AC, Term::BC};
  s.random_terms = {RandomTerm::U0, RandomTerm::U1, RandomTerm::U2, RandomTerm::U3,
                    RandomTerm::U4, RandomTerm::U5, RandomTerm::U6};
  s.parameterization = Parameterization::SumZero;
  return s;
}

}  // namespace capmse
