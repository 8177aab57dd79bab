#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qusp {

// Base for every failure the library reports. kind() is the stable name used
// in CLI reports and exit-status mapping.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view kind() const noexcept = 0;
};

#define QUSP_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                          \
   public:                                                             \
    using Error::Error;                                                \
    std::string_view kind() const noexcept override { return #Name; }  \
  }

QUSP_DEFINE_ERROR(RejectedParameter);
QUSP_DEFINE_ERROR(DegenerateDenominator);
QUSP_DEFINE_ERROR(ConvergenceFailure);
QUSP_DEFINE_ERROR(NonpositiveWeight);
QUSP_DEFINE_ERROR(ChainExhausted);
QUSP_DEFINE_ERROR(WrongSeries);
QUSP_DEFINE_ERROR(RangeError);
QUSP_DEFINE_ERROR(UsageError);

#undef QUSP_DEFINE_ERROR

}  // namespace qusp
