#include "galg/error.hpp"

#include <sstream>

namespace galg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InfiniteField: return "InfiniteField";
    case ErrorKind::GeneratorSetMismatch: return "GeneratorSetMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::InvalidSkewMatrix: return "InvalidSkewMatrix";
    case ErrorKind::DependentElements: return "DependentElements";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::DegreeExceedsTruncation: return "DegreeExceedsTruncation";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DistinguishedIndexClash: return "DistinguishedIndexClash";
    case ErrorKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorKind::ZeroDecomposition: return "ZeroDecomposition";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::NonPrimeModulus:
    case ErrorKind::InhomogeneousRelation:
    case ErrorKind::InhomogeneousInput:
    case ErrorKind::InvalidSkewMatrix:
      return 2;
    case ErrorKind::HypothesisViolated:
    case ErrorKind::InfiniteField:
    case ErrorKind::NotACharacter:
    case ErrorKind::TruncationTooSmall:
    case ErrorKind::DegreeExceedsTruncation:
    case ErrorKind::DistinguishedIndexClash:
    case ErrorKind::DependentElements:
      return 3;
    case ErrorKind::BudgetExceeded:
      return 4;
    default:
      return 1;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string describe_syntax(std::size_t line, std::size_t column,
                            const std::set<std::string>& expected, const std::string& found) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": expected ";
  if (expected.size() > 1) os << "one of ";
  bool first = true;
  for (const auto& e : expected) {
    if (!first) os << ", ";
    os << e;
    first = false;
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::set<std::string> expected,
                         std::string found)
    : Error(ErrorKind::Syntax, describe_syntax(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

}  // namespace galg
