#pragma once

#include <stdexcept>
#include <string>

namespace mb {

// Process exit codes used by the command line driver.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_budget = 2,
  exit_internal = 3,
};

// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad vertex labels, inconsistent margins, faces outside the
// ambient set, unparsable files, preconditions violated by the caller.
class input_error : public error {
 public:
  explicit input_error(const std::string& what) : error(what) {}
};

// A computation exceeded one of its resource budgets.  Budgets exist so that
// exact enumeration never silently degrades: exceeding one is a reported
// error state, never a wrong answer.
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

// Internal consistency failure (a checked invariant did not hold).
class internal_error : public error {
 public:
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace mb
