#pragma once

#include <stdexcept>
#include <string>

namespace subposet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUBPOSET_DEFINE_ERROR(Name)                  \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what_arg)       \
        : Error(std::string(#Name ": ") + what_arg) {} \
  };

SUBPOSET_DEFINE_ERROR(CycleDetected)
SUBPOSET_DEFINE_ERROR(InvalidSpec)
SUBPOSET_DEFINE_ERROR(NotUniqueExtremum)
SUBPOSET_DEFINE_ERROR(SearchBudgetExceeded)
SUBPOSET_DEFINE_ERROR(OutOfRange)
SUBPOSET_DEFINE_ERROR(PFreenessViolated)
SUBPOSET_DEFINE_ERROR(PreconditionViolated)
SUBPOSET_DEFINE_ERROR(InternalExhaustion)
SUBPOSET_DEFINE_ERROR(InvalidParams)
SUBPOSET_DEFINE_ERROR(InvalidEmbedding)
SUBPOSET_DEFINE_ERROR(ParseError)

#undef SUBPOSET_DEFINE_ERROR

}  // namespace subposet
