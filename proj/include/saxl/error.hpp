#ifndef SAXL_ERROR_HPP
#define SAXL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace saxl {

enum class Errc {
  InvalidPermutation,
  MixedDegree,
  PointOutOfRange,
  KTooLarge,
  NotTransitive,
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  NotPrimePower,
  NotDivisor,
  DegreeTooSmall,
  DegreeCapExceeded,
  NotSubgroup,
  UnknownName,
  BudgetExceeded,
  BaseSizeTooSmall,
  NotAnEdge,
  NoCommonVertex,
  EmptyHypergraph,
  ParseError,
  ManifestError,
  IoError,
  InvariantViolation,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures additionally record the character offset at fault.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::ParseError,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace saxl

#endif  // SAXL_ERROR_HPP
