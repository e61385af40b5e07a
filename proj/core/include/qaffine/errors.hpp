#pragma once

#include <stdexcept>
#include <string>

namespace qaffine {

struct NonExpandable : std::runtime_error {
  explicit NonExpandable(const std::string& m) : std::runtime_error(m) {}
};

struct EmptySafeWindow : std::runtime_error {
  explicit EmptySafeWindow(const std::string& m) : std::runtime_error(m) {}
};

struct SeriesNotInvertible : std::runtime_error {
  explicit SeriesNotInvertible(const std::string& m) : std::runtime_error(m) {}
};

struct NotInvertible : std::runtime_error {
  explicit NotInvertible(const std::string& m) : std::runtime_error(m) {}
};

struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& m) : std::runtime_error(m) {}
};

struct SyntaxError : std::runtime_error {
  int line, col;
  SyntaxError(int line_, int col_, const std::string& m)
      : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + m),
        line(line_),
        col(col_) {}
};

struct UnknownCurrent : std::runtime_error {
  explicit UnknownCurrent(const std::string& m) : std::runtime_error(m) {}
};

struct NonFactorableCoefficient : std::runtime_error {
  explicit NonFactorableCoefficient(const std::string& m)
      : std::runtime_error(m) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace qaffine
