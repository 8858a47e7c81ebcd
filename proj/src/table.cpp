#include "capmse/table.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "capmse/errors.hpp"

namespace capmse {

namespace {

std::vector<std::string> default_labels(std::size_t r) {
  std::vector<std::string> out;
  out.reserve(r);
  for (std::size_t l = 0; l < r; ++l) out.push_back(std::to_string(l + 1));
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::int64_t parse_count(const std::string& field, long line_no) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(field, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected a count, got '" + field + "'", line_no);
  }
  if (pos != field.size()) throw ParseError("trailing characters in count '" + field + "'", line_no);
  if (value < 0) throw ParseError("negative count " + field, line_no);
  return value;
}

}  // namespace

StratifiedTable StratifiedTable::dual(std::vector<DualStratumCounts> strata,
                                      std::vector<std::string> labels) {
  StratifiedTable t;
  if (labels.empty()) labels = default_labels(strata.size());
  t.strata_ = std::move(strata);
  t.labels_ = std::move(labels);
  t.validate();
  return t;
}

StratifiedTable StratifiedTable::triple(std::vector<TripleStratumCounts> strata,
                                        std::vector<std::string> labels) {
  StratifiedTable t;
  if (labels.empty()) labels = default_labels(strata.size());
  t.strata_ = std::move(strata);
  t.labels_ = std::move(labels);
  t.validate();
  return t;
}

void StratifiedTable::validate() const {
  const std::size_t r = strata();
  if (r == 0) throw SpecificationError("a stratified table needs at least one stratum");
  if (labels_.size() != r)
    throw SpecificationError("label count does not match stratum count");
  std::unordered_set<std::string> seen;
  for (const auto& lab : labels_) {
    if (!seen.insert(lab).second)
      throw SpecificationError("duplicate stratum label '" + lab + "'");
  }
  if (is_dual()) {
    for (const auto& s : dual_strata()) {
      if (s.n00_truth && *s.n00_truth < 0.0)
        throw SpecificationError("n00_truth must be nonnegative");
    }
  } else {
    for (const auto& s : triple_strata()) {
      if (s.n000_truth && *s.n000_truth < 0.0)
        throw SpecificationError("n000_truth must be nonnegative");
    }
  }
}

std::size_t StratifiedTable::strata() const {
  if (is_dual()) return std::get<std::vector<DualStratumCounts>>(strata_).size();
  return std::get<std::vector<TripleStratumCounts>>(strata_).size();
}

const DualStratumCounts& StratifiedTable::dual_at(std::size_t l) const {
  return dual_strata().at(l);
}

const TripleStratumCounts& StratifiedTable::triple_at(std::size_t l) const {
  return triple_strata().at(l);
}

const std::vector<DualStratumCounts>& StratifiedTable::dual_strata() const {
  if (!is_dual()) throw SpecificationError("table holds triple-list strata");
  return std::get<std::vector<DualStratumCounts>>(strata_);
}

const std::vector<TripleStratumCounts>& StratifiedTable::triple_strata() const {
  if (is_dual()) throw SpecificationError("table holds dual-list strata");
  return std::get<std::vector<TripleStratumCounts>>(strata_);
}

std::int64_t StratifiedTable::observed_total() const {
  std::int64_t total = 0;
  if (is_dual()) {
    for (const auto& s : dual_strata()) total += s.observed();
  } else {
    for (const auto& s : triple_strata()) total += s.observed();
  }
  return total;
}

StratifiedTable StratifiedTable::from_csv(std::istream& in) {
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty table file", 1);
  ++line_no;
  const auto header = split_csv_line(line);

  const std::vector<std::string> dual_header = {"stratum", "n11", "n10", "n01"};
  const std::vector<std::string> triple_header = {"stratum", "n111", "n110", "n101",
                                                  "n011",    "n100", "n010", "n001"};
  bool dual_kind;
  if (header == dual_header) {
    dual_kind = true;
  } else if (header == triple_header) {
    dual_kind = false;
  } else {
    throw ParseError("unrecognized header; expected 'stratum,n11,n10,n01' or the triple-list form",
                     1);
  }

  std::vector<std::string> labels;
  std::vector<DualStratumCounts> duals;
  std::vector<TripleStratumCounts> triples;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    const std::size_t expect = dual_kind ? 4 : 8;
    if (fields.size() != expect)
      throw ParseError("expected " + std::to_string(expect) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    labels.push_back(fields[0]);
    if (dual_kind) {
      DualStratumCounts s;
      s.n11 = parse_count(fields[1], line_no);
      s.n10 = parse_count(fields[2], line_no);
      s.n01 = parse_count(fields[3], line_no);
      duals.push_back(s);
    } else {
      TripleStratumCounts s;
      s.n111 = parse_count(fields[1], line_no);
      s.n110 = parse_count(fields[2], line_no);
      s.n101 = parse_count(fields[3], line_no);
      s.n011 = parse_count(fields[4], line_no);
      s.n100 = parse_count(fields[5], line_no);
      s.n010 = parse_count(fields[6], line_no);
      s.n001 = parse_count(fields[7], line_no);
      triples.push_back(s);
    }
  }
  if (labels.empty()) throw ParseError("table has a header but no strata", line_no);
  try {
    return dual_kind ? dual(std::move(duals), std::move(labels))
                     : triple(std::move(triples), std::move(labels));
  } catch (const SpecificationError& e) {
    throw ParseError(e.what(), line_no);
  }
}

StratifiedTable StratifiedTable::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return from_csv(in);
}

void StratifiedTable::to_csv(std::ostream& out) const {
  if (is_dual()) {
    out << "stratum,n11,n10,n01\n";
    for (std::size_t l = 0; l < strata(); ++l) {
      const auto& s = dual_at(l);
      out << labels_[l] << ',' << s.n11 << ',' << s.n10 << ',' << s.n01 << '\n';
    }
  } else {
    out << "stratum,n111,n110,n101,n011,n100,n010,n001\n";
    for (std::size_t l = 0; l < strata(); ++l) {
      const auto& s = triple_at(l);
      out << labels_[l] << ',' << s.n111 << ',' << s.n110 << ',' << s.n101 << ',' << s.n011 << ','
          << s.n100 << ',' << s.n010 << ',' << s.n001 << '\n';
    }
  }
}

}  // namespace capmse
