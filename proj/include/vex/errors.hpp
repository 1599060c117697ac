#pragma once

#include <stdexcept>
#include <string>

namespace vex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define VEX_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

VEX_DEFINE_ERROR(NotDivisible);
VEX_DEFINE_ERROR(TruncationTooSmall);
VEX_DEFINE_ERROR(ParseError);
VEX_DEFINE_ERROR(InvalidTriple);
VEX_DEFINE_ERROR(WrongType);
VEX_DEFINE_ERROR(SizeMismatch);
VEX_DEFINE_ERROR(MissingBorder);
VEX_DEFINE_ERROR(SkewCheckFailed);
VEX_DEFINE_ERROR(StarRelationFailed);
VEX_DEFINE_ERROR(DivisibilityFailed);
VEX_DEFINE_ERROR(WindowTooSmall);
VEX_DEFINE_ERROR(RelationViolated);
VEX_DEFINE_ERROR(DomainError);
VEX_DEFINE_ERROR(UnknownSuite);
VEX_DEFINE_ERROR(BoundExceeded);

#undef VEX_DEFINE_ERROR

}  // namespace vex
