#pragma once

#include <stdexcept>
#include <string>

namespace catgal {

// Every failure mode gets its own type so callers and tests can distinguish
// them; `kind()` is the stable machine-readable tag used in CLI reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define CATGAL_ERROR(Name, tag)                                    \
  class Name : public Error {                                      \
  public:                                                          \
    explicit Name(const std::string& msg) : Error(tag, msg) {}     \
  }

CATGAL_ERROR(NotAGroup, "NotAGroup");
CATGAL_ERROR(OrderBound, "OrderBound");
CATGAL_ERROR(IndexOutOfRange, "IndexOutOfRange");
CATGAL_ERROR(ParentMismatch, "ParentMismatch");
CATGAL_ERROR(NotNormal, "NotNormal");
CATGAL_ERROR(NotAHom, "NotAHom");
CATGAL_ERROR(CodMismatch, "CodMismatch");
CATGAL_ERROR(NotAbelian, "NotAbelian");
CATGAL_ERROR(SearchBudgetExceeded, "SearchBudgetExceeded");
CATGAL_ERROR(AxiomViolation, "AxiomViolation");
CATGAL_ERROR(NotAGroupOnLoops, "NotAGroupOnLoops");
CATGAL_ERROR(NotAGroupoidAfterReflection, "NotAGroupoidAfterReflection");
CATGAL_ERROR(RestrictionEscapes, "RestrictionEscapes");
CATGAL_ERROR(SquareDoesNotCommute, "SquareDoesNotCommute");
CATGAL_ERROR(NoLifting, "NoLifting");
CATGAL_ERROR(MissingCertificate, "MissingCertificate");
CATGAL_ERROR(ComparisonFailure, "ComparisonFailure");
CATGAL_ERROR(SchemaError, "SchemaError");
CATGAL_ERROR(NaturalityViolation, "NaturalityViolation");
CATGAL_ERROR(NotEtale, "NotEtale");
CATGAL_ERROR(NotConnected, "NotConnected");
CATGAL_ERROR(NotNormalCover, "NotNormalCover");

#undef CATGAL_ERROR

}  // namespace catgal
