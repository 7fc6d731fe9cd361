#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

enum class ErrorKind {
  AssociativityViolation,
  MissingIdentity,
  IllTypedComposite,
  MissingComposite,
  UnknownObject,
  UnknownMorphism,
  NotAFunctor,
  NotDirect,
  NotALattice,
  NotThin,
  BadIndex,
  BoundMismatch,
  SimplicialIdentity,
  NoColimit,
  EnumerationLimitExceeded,
  FactorizationMissing,
  PreconditionViolated,
  ParseError,
  UnknownCommand,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace catkit
