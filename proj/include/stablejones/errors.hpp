#pragma once

#include <stdexcept>
#include <string>

namespace stablejones {

// Every failure raised by the library derives from Error. The C API maps the
// categories below onto status codes.
enum class ErrorKind {
  Input,       // malformed input, bad arguments
  NotPlanar,   // no genus-0 embedding exists / embedding fails Euler's relation
  Budget,      // configured search budget exceeded
  Theory,      // a value the theory forbids (odd A+B, non-integer coefficient)
  Atlas,       // pattern atlas could not be resolved
  Fixture,     // fixture file missing or malformed
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define STABLEJONES_DEFINE_ERROR(Name, Kind)                                  \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}  \
  }

STABLEJONES_DEFINE_ERROR(InputError, Input);
STABLEJONES_DEFINE_ERROR(ParseError, Input);
STABLEJONES_DEFINE_ERROR(NotACut, Input);
STABLEJONES_DEFINE_ERROR(EmptyGraph, Input);
STABLEJONES_DEFINE_ERROR(SizeLimit, Input);
STABLEJONES_DEFINE_ERROR(NotAUnit, Input);
STABLEJONES_DEFINE_ERROR(BadConstantTerm, Input);
STABLEJONES_DEFINE_ERROR(Infeasible, Input);
STABLEJONES_DEFINE_ERROR(NotPlanar, NotPlanar);
STABLEJONES_DEFINE_ERROR(NonPlanarEmbedding, NotPlanar);
STABLEJONES_DEFINE_ERROR(BudgetExceeded, Budget);
STABLEJONES_DEFINE_ERROR(HalfIntegerPower, Theory);
STABLEJONES_DEFINE_ERROR(NonIntegerCoefficient, Theory);
STABLEJONES_DEFINE_ERROR(ArithmeticOverflow, Internal);
STABLEJONES_DEFINE_ERROR(InternalError, Internal);
STABLEJONES_DEFINE_ERROR(AtlasUnresolved, Atlas);
STABLEJONES_DEFINE_ERROR(AmbiguousMatch, Atlas);
STABLEJONES_DEFINE_ERROR(FixtureMissing, Fixture);
STABLEJONES_DEFINE_ERROR(IoError, Io);

#undef STABLEJONES_DEFINE_ERROR

}  // namespace stablejones
