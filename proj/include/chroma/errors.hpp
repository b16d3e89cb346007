#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHROMA_DECLARE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

CHROMA_DECLARE_ERROR(ParseError);
CHROMA_DECLARE_ERROR(MalformedNext);
CHROMA_DECLARE_ERROR(VariableMismatch);
CHROMA_DECLARE_ERROR(SingularSystem);
CHROMA_DECLARE_ERROR(TooLarge);
CHROMA_DECLARE_ERROR(BadShape);
CHROMA_DECLARE_ERROR(BadParameter);
CHROMA_DECLARE_ERROR(NonIdentityPermutation);
CHROMA_DECLARE_ERROR(NotIntersecting);
CHROMA_DECLARE_ERROR(TriplePoint);
CHROMA_DECLARE_ERROR(WrongShape);

#undef CHROMA_DECLARE_ERROR

}  // namespace chroma
