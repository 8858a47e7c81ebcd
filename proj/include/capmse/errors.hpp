#ifndef CAPMSE_ERRORS_HPP
#define CAPMSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace capmse {

/// Invalid model/table combination, bad arguments, malformed requests.
class SpecificationError : public std::invalid_argument {
public:
  explicit SpecificationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative fit failed to meet its convergence criterion.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical operation produced a non-finite or indefinite result.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Pathological input to a sampling routine (caps exceeded, impossible targets).
class SimulationError : public std::runtime_error {
public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

/// Summary statistics requested on a grid that cannot support them.
class MetricError : public std::runtime_error {
public:
  explicit MetricError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, long line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

}  // namespace capmse

#endif
