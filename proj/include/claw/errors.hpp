#ifndef CLAW_ERRORS_HPP
#define CLAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace claw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CLAW_DEFINE_ERROR(Name)                    \
  struct Name : Error {                            \
    explicit Name(const std::string& msg = #Name)  \
        : Error(msg) {}                            \
  }

CLAW_DEFINE_ERROR(NonMonotoneEta);
CLAW_DEFINE_ERROR(NonFinite);
CLAW_DEFINE_ERROR(OutOfDomain);
CLAW_DEFINE_ERROR(OutOfRange);
CLAW_DEFINE_ERROR(NotBracketed);
CLAW_DEFINE_ERROR(DegenerateStates);
CLAW_DEFINE_ERROR(NotConvex);
CLAW_DEFINE_ERROR(NonPositiveWeight);
CLAW_DEFINE_ERROR(DomainEscape);
CLAW_DEFINE_ERROR(NotConvexInitial);
CLAW_DEFINE_ERROR(NonFiniteFunctional);
CLAW_DEFINE_ERROR(NoCharacteristicHits);
CLAW_DEFINE_ERROR(NotMonotoneData);
CLAW_DEFINE_ERROR(UnstableConfig);
CLAW_DEFINE_ERROR(CflViolated);
CLAW_DEFINE_ERROR(WrongWindDirection);
CLAW_DEFINE_ERROR(RangeEscape);
CLAW_DEFINE_ERROR(InsufficientRuns);
CLAW_DEFINE_ERROR(SupportEscape);
CLAW_DEFINE_ERROR(OutOfInterval);
CLAW_DEFINE_ERROR(GridMismatch);
CLAW_DEFINE_ERROR(DegenerateFit);
CLAW_DEFINE_ERROR(ConfigError);

#undef CLAW_DEFINE_ERROR

}  // namespace claw

#endif  // CLAW_ERRORS_HPP
