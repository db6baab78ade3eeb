#include "sandwich/error.hpp"

namespace sandwich {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::InvalidTailStart: return "InvalidTailStart";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DivisionNearZero: return "DivisionNearZero";
    case ErrorCode::TableRangeError: return "TableRangeError";
    case ErrorCode::TableDeclaration: return "TableDeclaration";
    case ErrorCode::UnknownTable: return "UnknownTable";
    case ErrorCode::UnsupportedComposition: return "UnsupportedComposition";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::NotConvergent: return "NotConvergent";
    case ErrorCode::SandwichGap: return "SandwichGap";
    case ErrorCode::ReciprocalOfNull: return "ReciprocalOfNull";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotSeparated: return "NotSeparated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Error";
}

}  // namespace sandwich
