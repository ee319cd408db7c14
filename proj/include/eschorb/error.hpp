#ifndef ESCHORB_ERROR_HPP
#define ESCHORB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace eschorb {

enum class ErrorKind {
  SumMismatchP,
  SumMismatchA,
  NotAlmostFree,
  NotEffective,
  NonUnimodular,
  NonIntegral,
  NotNormalized,
  NoWitness,
  SigmaNotSingleEdge,
  SideConditionViolated,
  OutOfRange,
  Parse,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eschorb

#endif
