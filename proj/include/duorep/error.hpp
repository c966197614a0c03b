#pragma once

#include <stdexcept>
#include <string>

namespace duorep {

enum class ErrorCode {
    NotRightSemicentral,
    NotRegularLeftDuo,
    NotIdempotent,
    NotApplicable,
    SizeLimit,
    GroundSetMismatch,
    SearchExhausted,
    BadPrime,
    BadCharacteristic,
    NonAbelianFiber,
    NonSplitBasic,
    ApexMismatch,
    DiamondViolation,
    NoConsistentSigns,
    NotCW,
    NotGraded,
    LengthExceeded,
    MinimalityViolation,
    CrossCheckFailed,
    InvalidTable,
    InvalidArgument,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotRightSemicentral: return "NotRightSemicentral";
        case ErrorCode::NotRegularLeftDuo: return "NotRegularLeftDuo";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::BadCharacteristic: return "BadCharacteristic";
        case ErrorCode::NonAbelianFiber: return "NonAbelianFiber";
        case ErrorCode::NonSplitBasic: return "NonSplitBasic";
        case ErrorCode::ApexMismatch: return "ApexMismatch";
        case ErrorCode::DiamondViolation: return "DiamondViolation";
        case ErrorCode::NoConsistentSigns: return "NoConsistentSigns";
        case ErrorCode::NotCW: return "NotCW";
        case ErrorCode::NotGraded: return "NotGraded";
        case ErrorCode::LengthExceeded: return "LengthExceeded";
        case ErrorCode::MinimalityViolation: return "MinimalityViolation";
        case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
        case ErrorCode::InvalidTable: return "InvalidTable";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace duorep
