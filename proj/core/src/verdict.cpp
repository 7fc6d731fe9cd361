#include "catkit/error.hpp"
#include "catkit/verdict.hpp"

namespace catkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::IllTypedComposite: return "IllTypedComposite";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownMorphism: return "UnknownMorphism";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotDirect: return "NotDirect";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotThin: return "NotThin";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BoundMismatch: return "BoundMismatch";
    case ErrorKind::SimplicialIdentity: return "SimplicialIdentity";
    case ErrorKind::NoColimit: return "NoColimit";
    case ErrorKind::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorKind::FactorizationMissing: return "FactorizationMissing";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

Verdict Holds(std::string note) { return {Outcome::Holds, std::move(note)}; }
Verdict Fails(std::string witness) { return {Outcome::Fails, std::move(witness)}; }
Verdict Unknown(std::string reason) { return {Outcome::Unknown, std::move(reason)}; }

Verdict conjoin(const std::vector<Verdict>& parts) {
  const Verdict* unknown = nullptr;
  for (const auto& v : parts) {
    if (v.fails()) return v;
    if (v.unknown() && !unknown) unknown = &v;
  }
  if (unknown) return *unknown;
  return Holds();
}

Verdict summarize(const CheckReport& report) {
  for (const auto& c : report) {
    if (c.verdict.fails()) return Fails(c.name + ": " + c.verdict.witness);
  }
  for (const auto& c : report) {
    if (c.verdict.unknown()) return Unknown(c.name + ": " + c.verdict.witness);
  }
  return Holds();
}

}  // namespace catkit
