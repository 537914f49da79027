#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace glal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
              const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

class UnknownOperator : public Error {
 public:
  UnknownOperator(std::size_t line, std::size_t column, const std::string& token);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownAgent : public Error {
 public:
  explicit UnknownAgent(const std::string& name) : Error("unknown agent '" + name + "'") {}
};

class UnknownWorld : public Error {
 public:
  explicit UnknownWorld(const std::string& name) : Error("unknown world '" + name + "'") {}
};

class NotPalFragment : public Error {
 public:
  NotPalFragment() : Error("formula contains local/global announcement operators") {}
};

/// A coalition placeholder ("*") could not be resolved because no agent universe was given.
class UnresolvedCoalition : public Error {
 public:
  UnresolvedCoalition() : Error("'*' coalition needs an agent universe to expand") {}
};

class EmptyResult : public Error {
 public:
  EmptyResult() : Error("public announcement of a formula true nowhere") {}
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A refinement produced a relation that is not an equivalence. Never expected to fire.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace glal
