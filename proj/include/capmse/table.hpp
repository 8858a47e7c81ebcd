#ifndef CAPMSE_TABLE_HPP
#define CAPMSE_TABLE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace capmse {

/// Observed cells of one stratum of a two-list table. The (0,0) cell is not
/// observed in real data; for synthetic populations its realized value can be
/// carried along as truth metadata.
struct DualStratumCounts {
  std::int64_t n11 = 0;
  std::int64_t n10 = 0;
  std::int64_t n01 = 0;
  std::optional<double> n00_truth;

  std::int64_t observed() const { return n11 + n10 + n01; }
};

/// Observed cells of one stratum of a three-list table; (0,0,0) unobserved.
struct TripleStratumCounts {
  std::int64_t n111 = 0;
  std::int64_t n110 = 0;
  std::int64_t n101 = 0;
  std::int64_t n011 = 0;
  std::int64_t n100 = 0;
  std::int64_t n010 = 0;
  std::int64_t n001 = 0;
  std::optional<double> n000_truth;

  std::int64_t observed() const {
    return n111 + n110 + n101 + n011 + n100 + n010 + n001;
  }
};

/// A stratified incomplete contingency table: one dual or triple cell block
/// per level of the stratifying variable. Immutable after construction.
class StratifiedTable {
public:
  static StratifiedTable dual(std::vector<DualStratumCounts> strata,
                              std::vector<std::string> labels = {});
  static StratifiedTable triple(std::vector<TripleStratumCounts> strata,
                                std::vector<std::string> labels = {});

  bool is_dual() const { return std::holds_alternative<std::vector<DualStratumCounts>>(strata_); }
  int lists() const { return is_dual() ? 2 : 3; }
  std::size_t strata() const;
  const std::vector<std::string>& labels() const { return labels_; }

  const DualStratumCounts& dual_at(std::size_t l) const;
  const TripleStratumCounts& triple_at(std::size_t l) const;
  const std::vector<DualStratumCounts>& dual_strata() const;
  const std::vector<TripleStratumCounts>& triple_strata() const;

  /// Sum of all observed counts over all strata.
  std::int64_t observed_total() const;

  /// Reads `stratum,n11,n10,n01` or the seven-cell triple header.
  static StratifiedTable from_csv(std::istream& in);
  static StratifiedTable from_csv_file(const std::string& path);
  void to_csv(std::ostream& out) const;

private:
  StratifiedTable() = default;
  void validate() const;

  std::variant<std::vector<DualStratumCounts>, std::vector<TripleStratumCounts>> strata_;
  std::vector<std::string> labels_;
};

}  // namespace capmse

#endif
