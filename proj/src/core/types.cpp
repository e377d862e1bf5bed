#include "types.hpp"

namespace abcalc {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
        case ErrorCode::NotConverged: return "NotConverged";
        case ErrorCode::DomainNotSupported: return "DomainNotSupported";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::EvalDomainError: return "EvalDomainError";
        case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
        case ErrorCode::EpsilonUnstable: return "EpsilonUnstable";
        case ErrorCode::OrderIsNegativeInteger: return "OrderIsNegativeInteger";
        case ErrorCode::OrderIsNaturalNumber: return "OrderIsNaturalNumber";
        case ErrorCode::MultiplierZero: return "MultiplierZero";
        case ErrorCode::ZeroRate: return "ZeroRate";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0) || max_terms < 8 || consecutive_small < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "SeriesControl: need rel_tol > 0, max_terms >= 8, consecutive_small >= 1");
    }
}

}  // namespace abcalc
