#pragma once

#include <stdexcept>
#include <string>

namespace mosoo {

// Precondition violations: bad parameters, dimension mismatches, API misuse.
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown by BudgetedEvaluator on the call that would exceed its cap.
class budget_exhausted : public std::runtime_error {
 public:
  explicit budget_exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite objective values or inputs. The message names the offending point.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem or file-format failures in the command layer.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mosoo
