#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

enum class ErrorCode {
  DegreeMismatch,
  InvalidPermutation,
  InvalidCycle,
  InvalidPartition,
  InvalidAnchor,
  NotAugmentable,
  BadIndex,
  ParityError,
  InvalidOrder,
  OutOfScope,
  NotApplicable,
  NotAdmissible,
  NegativeGenus,
  Vacuous,
  ParseError,
  SumError,
  TooLarge,
  ConstructionBug,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch:     return "degree mismatch";
    case ErrorCode::InvalidPermutation: return "invalid permutation";
    case ErrorCode::InvalidCycle:       return "invalid cycle";
    case ErrorCode::InvalidPartition:   return "invalid partition";
    case ErrorCode::InvalidAnchor:      return "invalid anchor";
    case ErrorCode::NotAugmentable:     return "not augmentable";
    case ErrorCode::BadIndex:           return "bad index";
    case ErrorCode::ParityError:        return "parity error";
    case ErrorCode::InvalidOrder:       return "invalid ramification order";
    case ErrorCode::OutOfScope:         return "out of scope";
    case ErrorCode::NotApplicable:      return "not applicable";
    case ErrorCode::NotAdmissible:      return "not admissible";
    case ErrorCode::NegativeGenus:      return "negative genus";
    case ErrorCode::Vacuous:            return "vacuous";
    case ErrorCode::ParseError:         return "parse error";
    case ErrorCode::SumError:           return "partition sum mismatch";
    case ErrorCode::TooLarge:           return "degree cap exceeded";
    case ErrorCode::ConstructionBug:    return "internal construction bug";
  }
  return "unknown error";
}

}  // namespace hurwitz
