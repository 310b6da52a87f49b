#pragma once

#include <stdexcept>
#include <string>

namespace sstar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SSTAR_DEFINE_ERROR(Name)                      \
  class Name : public Error {                         \
   public:                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// series_engine
SSTAR_DEFINE_ERROR(NonFiniteCoefficient);
SSTAR_DEFINE_ERROR(OrderTooLarge);
SSTAR_DEFINE_ERROR(NearZeroConstantTerm);
SSTAR_DEFINE_ERROR(ConstantTermNotOne);
SSTAR_DEFINE_ERROR(ConstantTermNotZero);
SSTAR_DEFINE_ERROR(InnerConstantNonzero);
SSTAR_DEFINE_ERROR(OutsideDisc);

// generator
SSTAR_DEFINE_ERROR(ParamOutOfRange);
SSTAR_DEFINE_ERROR(TailNotConverged);
SSTAR_DEFINE_ERROR(ZeroArgument);

// membership
SSTAR_DEFINE_ERROR(InvalidGrid);
SSTAR_DEFINE_ERROR(NotNormalized);
SSTAR_DEFINE_ERROR(ZeroOfF);
SSTAR_DEFINE_ERROR(ZeroOfFPrime);
SSTAR_DEFINE_ERROR(EvaluationFailure);

// bounds_catalog / membership
SSTAR_DEFINE_ERROR(RadiusOutOfRange);

#undef SSTAR_DEFINE_ERROR

}  // namespace sstar
