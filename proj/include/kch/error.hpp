#pragma once

#include <stdexcept>
#include <string>

namespace kch {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define KCH_DEFINE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

  KCH_DEFINE_ERROR(SyntaxError);
  KCH_DEFINE_ERROR(ValidationError);
  KCH_DEFINE_ERROR(InvariantError);
  KCH_DEFINE_ERROR(BackendError);
  KCH_DEFINE_ERROR(ContextMismatch);
  KCH_DEFINE_ERROR(PatternMismatch);
  KCH_DEFINE_ERROR(ClassificationError);
  KCH_DEFINE_ERROR(WitnessUnavailable);
  KCH_DEFINE_ERROR(DegenerateMatrix);
  KCH_DEFINE_ERROR(MatchFailure);
  KCH_DEFINE_ERROR(KnotednessViolation);
  // Malformed JSON input: wrong shape, types or missing fields.
  KCH_DEFINE_ERROR(SchemaError);
  // A required equality could not be certified by the word backend.
  KCH_DEFINE_ERROR(UnknownAnswer);

#undef KCH_DEFINE_ERROR

}  // namespace kch
