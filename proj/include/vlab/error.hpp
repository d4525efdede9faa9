#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vlab {

// Error names are part of the CLI contract: they appear verbatim as the
// "code" field of JSON error objects.
enum class ErrorCode {
    DOMAIN_MISMATCH,
    ZERO_POLY,
    NOT_PRIME,
    TOWER_DEPTH,
    DEGREE_BOUND,
    NOT_IRREDUCIBLE,
    REFINEMENT_LIMIT,
    PRECISION_EXHAUSTED,
    UNCERTIFIED_DESCRIPTOR,
    DUPLICATE_VALUATIONS,
    INDEX_OUT_OF_RANGE,
    HENSEL_PRECONDITION,
    PRECISION_OVERFLOW,
    NOT_SIMPLE_ROOT,
    NOT_INTEGRAL,
    NOT_A_MEMBER,
    MISSING_ONE,
    NOT_SUBGROUP,
    INFINITE_INDEX,
    MALFORMED_STAGE,
    NOT_FORMALLY_PADIC,
    TRIGGER_UNMET,
    PARSE_ERROR,
    DIVISION_BY_ZERO,
    INVALID_ARGUMENT,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::PARSE_ERROR, what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace vlab
