#include "capmse/design.hpp"

#include <array>

#include "capmse/errors.hpp"

namespace capmse {

namespace {

// Canonical column order, matching the loglinear notation.
constexpr std::array<Term, 14> kTermOrder = {
    Term::Intercept, Term::A,  Term::B,  Term::C,  Term::AB,  Term::AC,  Term::BC,
    Term::R,         Term::AR, Term::BR, Term::CR, Term::ABR, Term::ACR, Term::BCR};

// The list-variable part of a term's contrast at a cell. Corner-point uses
// 0/1 indicators, sum-zero uses -1/+1 with level 1 mapped to +1.
double list_part(Term t, const CellRef& c, Parameterization p) {
  const double i = p == Parameterization::CornerPoint ? c.i : 2.0 * c.i - 1.0;
  const double j = p == Parameterization::CornerPoint ? c.j : 2.0 * c.j - 1.0;
  const double k = p == Parameterization::CornerPoint ? c.k : 2.0 * c.k - 1.0;
  switch (t) {
    case Term::Intercept: return 1.0;
    case Term::A: case Term::AR: return i;
    case Term::B: case Term::BR: return j;
    case Term::C: case Term::CR: return k;
    case Term::AB: case Term::ABR: return i * j;
    case Term::AC: case Term::ACR: return i * k;
    case Term::BC: case Term::BCR: return j * k;
    case Term::R: return 1.0;
  }
  throw SpecificationError("unknown term");
}

bool is_stratified(Term t) {
  switch (t) {
    case Term::R:
    case Term::AR:
    case Term::BR:
    case Term::CR:
    case Term::ABR:
    case Term::ACR:
    case Term::BCR:
      return true;
    default:
      return false;
  }
}

// Stratum contrast for column m of a stratified term. Corner-point drops the
// first stratum; sum-zero uses deviation coding with the last stratum as the
// redundant level.
double stratum_part(std::size_t l, std::size_t m, std::size_t r, Parameterization p) {
  if (p == Parameterization::CornerPoint) {
    return l == m + 1 ? 1.0 : 0.0;
  }
  if (l == m) return 1.0;
  if (l == r - 1) return -1.0;
  return 0.0;
}

std::size_t term_columns(Term t, std::size_t r) { return is_stratified(t) ? r - 1 : 1; }

void fill_row(const ModelSpec& spec, std::size_t r, const CellRef& cell,
              Eigen::Ref<Eigen::RowVectorXd> row) {
  Eigen::Index col = 0;
  for (Term t : kTermOrder) {
    if (!spec.has(t)) continue;
    const double base = list_part(t, cell, spec.parameterization);
    if (is_stratified(t)) {
      for (std::size_t m = 0; m + 1 < r; ++m)
        row(col++) = base * stratum_part(cell.stratum, m, r, spec.parameterization);
    } else {
      row(col++) = base;
    }
  }
}

std::size_t total_columns(const ModelSpec& spec, std::size_t r) {
  std::size_t p = 0;
  for (Term t : kTermOrder)
    if (spec.has(t)) p += term_columns(t, r);
  return p;
}

}  // namespace

std::vector<CellRef> likelihood_cells(const ModelSpec& spec, const StratifiedTable& table) {
  std::vector<CellRef> cells;
  const std::size_t r = table.strata();
  if (table.is_dual()) {
    const bool with_missing = spec.includes_missing_cell();
    cells.reserve(r * (with_missing ? 4 : 3));
    for (std::size_t l = 0; l < r; ++l) {
      cells.push_back({l, 1, 1, 0});
      cells.push_back({l, 1, 0, 0});
      cells.push_back({l, 0, 1, 0});
      if (with_missing) cells.push_back({l, 0, 0, 0});
    }
  } else {
    cells.reserve(r * 7);
    for (std::size_t l = 0; l < r; ++l) {
      cells.push_back({l, 1, 1, 1});
      cells.push_back({l, 1, 1, 0});
      cells.push_back({l, 1, 0, 1});
      cells.push_back({l, 1, 0, 0});
      cells.push_back({l, 0, 1, 1});
      cells.push_back({l, 0, 1, 0});
      cells.push_back({l, 0, 0, 1});
    }
  }
  return cells;
}

double cell_count(const StratifiedTable& table, const CellRef& cell) {
  if (table.is_dual()) {
    const auto& s = table.dual_at(cell.stratum);
    if (cell.i == 1 && cell.j == 1) return static_cast<double>(s.n11);
    if (cell.i == 1 && cell.j == 0) return static_cast<double>(s.n10);
    if (cell.i == 0 && cell.j == 1) return static_cast<double>(s.n01);
    if (!s.n00_truth)
      throw SpecificationError("cell (0,0) requested but n00_truth is absent");
    return *s.n00_truth;
  }
  const auto& s = table.triple_at(cell.stratum);
  const int code = cell.i * 4 + cell.j * 2 + cell.k;
  switch (code) {
    case 7: return static_cast<double>(s.n111);
    case 6: return static_cast<double>(s.n110);
    case 5: return static_cast<double>(s.n101);
    case 3: return static_cast<double>(s.n011);
    case 4: return static_cast<double>(s.n100);
    case 2: return static_cast<double>(s.n010);
    case 1: return static_cast<double>(s.n001);
  }
  if (!s.n000_truth)
    throw SpecificationError("cell (0,0,0) requested but n000_truth is absent");
  return *s.n000_truth;
}

Eigen::RowVectorXd design_row(const ModelSpec& spec, std::size_t n_strata, const CellRef& cell) {
  Eigen::RowVectorXd row(static_cast<Eigen::Index>(total_columns(spec, n_strata)));
  fill_row(spec, n_strata, cell, row);
  return row;
}

DesignMatrix design_matrix(const ModelSpec& spec, const StratifiedTable& table) {
  spec.validate(table);
  const std::size_t r = table.strata();
  const auto cells = likelihood_cells(spec, table);
  const std::size_t p = total_columns(spec, r);

  DesignMatrix d;
  d.X.resize(static_cast<Eigen::Index>(cells.size()), static_cast<Eigen::Index>(p));
  d.counts.resize(static_cast<Eigen::Index>(cells.size()));
  d.cells = cells;
  for (std::size_t row = 0; row < cells.size(); ++row) {
    fill_row(spec, r, cells[row], d.X.row(static_cast<Eigen::Index>(row)));
    d.counts(static_cast<Eigen::Index>(row)) = cell_count(table, cells[row]);
  }

  d.column_labels.reserve(p);
  for (Term t : kTermOrder) {
    if (!spec.has(t)) continue;
    if (is_stratified(t)) {
      for (std::size_t m = 0; m + 1 < r; ++m) {
        const std::size_t level =
            spec.parameterization == Parameterization::CornerPoint ? m + 1 : m;
        d.column_labels.push_back(term_name(t) + "[" + table.labels()[level] + "]");
      }
    } else {
      d.column_labels.push_back(term_name(t));
    }
  }
  return d;
}

double random_term_contrast(RandomTerm t, const CellRef& c) {
  const double a = 2.0 * c.i - 1.0;
  const double b = 2.0 * c.j - 1.0;
  const double cc = 2.0 * c.k - 1.0;
  switch (t) {
    case RandomTerm::U0: return 1.0;
    case RandomTerm::U1: return a;
    case RandomTerm::U2: return b;
    case RandomTerm::U3: return cc;
    case RandomTerm::U4: return a * b;
    case RandomTerm::U5: return a * cc;
    case RandomTerm::U6: return b * cc;
  }
  throw SpecificationError("unknown random term");
}

RandomDesign random_design(const ModelSpec& spec, const std::vector<CellRef>& cells) {
  RandomDesign rd;
  rd.terms.assign(spec.random_terms.begin(), spec.random_terms.end());
  rd.contrasts.resize(static_cast<Eigen::Index>(cells.size()),
                      static_cast<Eigen::Index>(rd.terms.size()));
  for (std::size_t row = 0; row < cells.size(); ++row)
    for (std::size_t t = 0; t < rd.terms.size(); ++t)
      rd.contrasts(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(t)) =
          random_term_contrast(rd.terms[t], cells[row]);
  return rd;
}

}  // namespace capmse
