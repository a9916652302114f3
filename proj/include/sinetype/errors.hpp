#pragma once

#include <stdexcept>
#include <string>

namespace sinetype {

// Numerical failures carry a stable name so drivers can report a single
// diagnostic token on stderr and map to a dedicated exit code.  Input and
// precondition problems use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SINETYPE_DEFINE_ERROR(Name)                              \
    class Name : public NumericalError {                         \
    public:                                                      \
        explicit Name(const std::string& what)                   \
            : NumericalError(#Name, what) {}                     \
    }

SINETYPE_DEFINE_ERROR(BoundaryTooClose);
SINETYPE_DEFINE_ERROR(NoConvergence);
SINETYPE_DEFINE_ERROR(LeftTrustRegion);
SINETYPE_DEFINE_ERROR(MaxIterations);
SINETYPE_DEFINE_ERROR(CountMismatch);
SINETYPE_DEFINE_ERROR(TailBoundExceeded);
SINETYPE_DEFINE_ERROR(NearLatticePole);
SINETYPE_DEFINE_ERROR(SlowConvergence);
SINETYPE_DEFINE_ERROR(InsufficientZeros);
SINETYPE_DEFINE_ERROR(IllConditioned);
SINETYPE_DEFINE_ERROR(FitDiverged);
SINETYPE_DEFINE_ERROR(BranchAmbiguity);
SINETYPE_DEFINE_ERROR(QuadratureTailTooLarge);
SINETYPE_DEFINE_ERROR(DegenerateMainPart);

#undef SINETYPE_DEFINE_ERROR

} // namespace sinetype
