#pragma once

#include <stdexcept>
#include <string>

namespace diamgraph {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DIAMGRAPH_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

DIAMGRAPH_DEFINE_ERROR(NearZeroVector);
DIAMGRAPH_DEFINE_ERROR(InvalidTolerance);
DIAMGRAPH_DEFINE_ERROR(InvalidArc);
DIAMGRAPH_DEFINE_ERROR(NotInHemisphere);
DIAMGRAPH_DEFINE_ERROR(TooFewPoints);
DIAMGRAPH_DEFINE_ERROR(DuplicatePoints);
DIAMGRAPH_DEFINE_ERROR(ZeroDiameter);
DIAMGRAPH_DEFINE_ERROR(DimensionUnsupported);
DIAMGRAPH_DEFINE_ERROR(DegenerateRegion);
DIAMGRAPH_DEFINE_ERROR(InvalidInstance);
DIAMGRAPH_DEFINE_ERROR(SamplingExhausted);
DIAMGRAPH_DEFINE_ERROR(JunctionCoincidesWithHub);
DIAMGRAPH_DEFINE_ERROR(InconsistentRotation);
DIAMGRAPH_DEFINE_ERROR(NotACycle);
DIAMGRAPH_DEFINE_ERROR(SearchBoundViolation);

// Input-file errors. SchemaError: malformed document. InvariantError: well
// formed but the point set it describes is invalid.
DIAMGRAPH_DEFINE_ERROR(SchemaError);
DIAMGRAPH_DEFINE_ERROR(InvariantError);

#undef DIAMGRAPH_DEFINE_ERROR

}  // namespace diamgraph
