#ifndef ISOPERIOD_ERROR_HPP
#define ISOPERIOD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoperiod {

enum class ErrorKind {
  DuplicateEndpoint,
  InconsistentLattice,
  BadArity,
  InvalidArc,
  OrderChanged,
  NotApplicable,
  DegenerateResult,
  NotACaravan,
  NonPositiveLength,
  SearchExhausted,
  DegenerateEncountered,
  BadIndex,
  SizeMismatch,
  NotSymplectic,
  InternalCheckFailed,
  ZeroEntry,
  ZeroEntryInTarget,
  NotIsoperiodic,
  NotSamePolarization,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

// Every library failure is reported through this type; kind() is what the CLI
// prints in its structured error line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Failure inside apply_sequence; index() is the 0-based position of the move
// that could not be applied.
class SequenceError : public Error {
 public:
  SequenceError(ErrorKind kind, std::size_t index, const std::string& what)
      : Error(kind, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace isoperiod

#endif  // ISOPERIOD_ERROR_HPP
