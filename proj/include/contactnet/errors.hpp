#pragma once

#include <stdexcept>
#include <string>

namespace contactnet {

// Base class for all toolkit errors. Messages carry file/row context where
// the failure has one.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define CONTACTNET_ERROR(NAME)                                                 \
    class NAME : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
    }

// data-model
CONTACTNET_ERROR(MissingColumn);
CONTACTNET_ERROR(UnknownRole);
CONTACTNET_ERROR(DanglingProjectRef);
CONTACTNET_ERROR(DuplicateId);
CONTACTNET_ERROR(SelfReport);
CONTACTNET_ERROR(DuplicateReport);
CONTACTNET_ERROR(MinutesOutOfRange);
CONTACTNET_ERROR(InvalidProbability);
CONTACTNET_ERROR(InvalidRecord);

// space-syntax
CONTACTNET_ERROR(ZeroLengthLine);
CONTACTNET_ERROR(DeskOffLine);
CONTACTNET_ERROR(Unreachable);
CONTACTNET_ERROR(MapParseError);

// dyad-models / latent-likelihood
CONTACTNET_ERROR(DimensionMismatch);
CONTACTNET_ERROR(CutpointsNotAscending);
CONTACTNET_ERROR(InconsistentObservation);
CONTACTNET_ERROR(ZeroLikelihood);

// estimator
CONTACTNET_ERROR(NonFiniteEvaluation);

// epi-sim
CONTACTNET_ERROR(DegenerateInput);

#undef CONTACTNET_ERROR

} // namespace contactnet
