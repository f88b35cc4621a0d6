#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace galg {

enum class ErrorKind {
  Syntax,
  UnknownGenerator,
  NonPrimeModulus,
  InhomogeneousRelation,
  DivisionByZero,
  FieldMismatch,
  InfiniteField,
  GeneratorSetMismatch,
  AmbientMismatch,
  InvalidSkewMatrix,
  DependentElements,
  TruncationTooSmall,
  DegreeExceedsTruncation,
  NotACharacter,
  HypothesisViolated,
  BudgetExceeded,
  DistinguishedIndexClash,
  InhomogeneousInput,
  ZeroDecomposition,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Process exit code used by the CLI: 2 for input/syntax problems,
/// 3 for violated mathematical hypotheses, 4 for exhausted search budgets.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected,
              std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
  std::string found_;
};

}  // namespace galg
