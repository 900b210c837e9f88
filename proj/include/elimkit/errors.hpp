#pragma once

#include <stdexcept>
#include <string>

namespace elimkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ELIMKIT_ERROR(Name)                       \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

ELIMKIT_ERROR(NotDivisible);
ELIMKIT_ERROR(NotASquare);
ELIMKIT_ERROR(DegreeExceeded);
ELIMKIT_ERROR(LeadingZero);
ELIMKIT_ERROR(NonHomogeneous);
ELIMKIT_ERROR(DenominatorZero);
ELIMKIT_ERROR(DegenerateInput);
ELIMKIT_ERROR(ParseError);

#undef ELIMKIT_ERROR

}  // namespace elimkit
