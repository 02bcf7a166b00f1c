#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adaptfir {

// Gaussian elimination found no usable pivot in the named column.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t pivot_index, double pivot_magnitude)
      : std::runtime_error("singular matrix: pivot " + std::to_string(pivot_index) +
                           " has magnitude " + std::to_string(pivot_magnitude)),
        pivot_index_(pivot_index) {}

  std::size_t pivot_index() const { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

// An iterative numeric routine failed; carries the last estimate it reached.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& message, double last_estimate)
      : std::runtime_error(message + " (last estimate " + std::to_string(last_estimate) + ")"),
        last_estimate_(last_estimate) {}

  double last_estimate() const { return last_estimate_; }

 private:
  double last_estimate_;
};

// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& detail)
      : std::runtime_error("io error on '" + path + "': " + detail), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace adaptfir
