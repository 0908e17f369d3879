#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stereograph {

enum class ErrorKind {
  LengthMismatch,
  DomainError,
  NotAStereotypeGraph,
  PairAbsent,
  InvalidOrder,
  TooLarge,
  SizeExceeded,
  InvalidColoring,
  MissingClique,
  RangeError,
  EdgeAbsent,
  ParseError,
  IoError,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for every error raised by the library. The kind lets callers
/// (the CLI in particular) map failures onto exit codes without RTTI ladders.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an edge set does not describe a stereotype graph. Carries the
/// first violated structural clause and a human-readable witness.
class NotAStereotypeGraph : public Error {
 public:
  NotAStereotypeGraph(std::string clause, std::string witness)
      : Error(ErrorKind::NotAStereotypeGraph,
              "not a stereotype graph: clause '" + clause + "' violated (" + witness + ")"),
        clause_(std::move(clause)),
        witness_(std::move(witness)) {}

  const std::string& clause() const noexcept { return clause_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string clause_;
  std::string witness_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace stereograph
