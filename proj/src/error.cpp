#include "eschorb/error.hpp"

namespace eschorb {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SumMismatchP: return "SumMismatchP";
    case ErrorKind::SumMismatchA: return "SumMismatchA";
    case ErrorKind::NotAlmostFree: return "NotAlmostFree";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NonUnimodular: return "NonUnimodular";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::SigmaNotSingleEdge: return "SigmaNotSingleEdge";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace eschorb
