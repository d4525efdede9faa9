#include "vlab/error.hpp"

namespace vlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DOMAIN_MISMATCH: return "DOMAIN_MISMATCH";
    case ErrorCode::ZERO_POLY: return "ZERO_POLY";
    case ErrorCode::NOT_PRIME: return "NOT_PRIME";
    case ErrorCode::TOWER_DEPTH: return "TOWER_DEPTH";
    case ErrorCode::DEGREE_BOUND: return "DEGREE_BOUND";
    case ErrorCode::NOT_IRREDUCIBLE: return "NOT_IRREDUCIBLE";
    case ErrorCode::REFINEMENT_LIMIT: return "REFINEMENT_LIMIT";
    case ErrorCode::PRECISION_EXHAUSTED: return "PRECISION_EXHAUSTED";
    case ErrorCode::UNCERTIFIED_DESCRIPTOR: return "UNCERTIFIED_DESCRIPTOR";
    case ErrorCode::DUPLICATE_VALUATIONS: return "DUPLICATE_VALUATIONS";
    case ErrorCode::INDEX_OUT_OF_RANGE: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::HENSEL_PRECONDITION: return "HENSEL_PRECONDITION";
    case ErrorCode::PRECISION_OVERFLOW: return "PRECISION_OVERFLOW";
    case ErrorCode::NOT_SIMPLE_ROOT: return "NOT_SIMPLE_ROOT";
    case ErrorCode::NOT_INTEGRAL: return "NOT_INTEGRAL";
    case ErrorCode::NOT_A_MEMBER: return "NOT_A_MEMBER";
    case ErrorCode::MISSING_ONE: return "MISSING_ONE";
    case ErrorCode::NOT_SUBGROUP: return "NOT_SUBGROUP";
    case ErrorCode::INFINITE_INDEX: return "INFINITE_INDEX";
    case ErrorCode::MALFORMED_STAGE: return "MALFORMED_STAGE";
    case ErrorCode::NOT_FORMALLY_PADIC: return "NOT_FORMALLY_PADIC";
    case ErrorCode::TRIGGER_UNMET: return "TRIGGER_UNMET";
    case ErrorCode::PARSE_ERROR: return "PARSE_ERROR";
    case ErrorCode::DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
    case ErrorCode::INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

} // namespace vlab
