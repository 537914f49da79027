#include "glal/errors.hpp"

namespace glal {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                         const std::string& found)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": expected " +
            describe_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

UnknownOperator::UnknownOperator(std::size_t line, std::size_t column, const std::string& token)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": unknown operator '" + token +
            "{'"),
      line_(line),
      column_(column) {}

}  // namespace glal
