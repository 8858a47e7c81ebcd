#ifndef CAPMSE_DESIGN_HPP
#define CAPMSE_DESIGN_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "capmse/model_spec.hpp"
#include "capmse/table.hpp"

namespace capmse {

/// Identifies one table cell: stratum index plus the 0/1 inclusion pattern
/// per list (k is ignored for dual tables).
struct CellRef {
  std::size_t stratum = 0;
  int i = 0;
  int j = 0;
  int k = 0;
};

/// Indicator/contrast matrix over the cells entering the likelihood, in the
/// fixed row order (1,1),(1,0),(0,1) per stratum for dual tables and
/// lexicographic descending for triple tables. Saturated dual specs append
/// the (0,0) cell, whose count is taken from the table's truth metadata.
struct DesignMatrix {
  Eigen::MatrixXd X;
  std::vector<std::string> column_labels;
  Eigen::VectorXd counts;
  std::vector<CellRef> cells;

  Eigen::Index rows() const { return X.rows(); }
  Eigen::Index cols() const { return X.cols(); }
};

DesignMatrix design_matrix(const ModelSpec& spec, const StratifiedTable& table);

/// One design row for an arbitrary cell of a table with `n_strata` strata,
/// without reference to observed data. Used to evaluate fitted models at
/// unobserved cells.
Eigen::RowVectorXd design_row(const ModelSpec& spec, std::size_t n_strata, const CellRef& cell);

/// Per-cell contrast values of the random terms (sum-zero list contrasts).
/// The implied random-effects matrix is Z(row, (t,l)) =
/// contrasts(row, t) * [stratum(row) == l]; it is block diagonal by stratum.
struct RandomDesign {
  std::vector<RandomTerm> terms;
  Eigen::MatrixXd contrasts;  // one row per design row, one column per random term
};

RandomDesign random_design(const ModelSpec& spec, const std::vector<CellRef>& cells);

/// Sum-zero contrast of one random term at one cell pattern.
double random_term_contrast(RandomTerm t, const CellRef& cell);

/// The cells entering the likelihood for this spec/table, in design order.
std::vector<CellRef> likelihood_cells(const ModelSpec& spec, const StratifiedTable& table);

/// Observed (or truth-backed) count for one cell.
double cell_count(const StratifiedTable& table, const CellRef& cell);

}  // namespace capmse

#endif
