#pragma once

#include <stdexcept>
#include <string>

namespace rio {

/// Bad or inconsistent input data (files, shapes, values).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (factorization breakdown, non-finite objective, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rio
