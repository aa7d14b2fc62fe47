#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codag {

enum class ErrorCode {
    not_finitely_ambiguous,
    not_limit_deterministic,
    invalid_partition,
    tracked_not_subset,
    alphabet_mismatch,
    incompatible_algorithm,
    shape_unsatisfiable,
    phase_mismatch,
    size_bound_exceeded,
    undeclared_state,
    parse_error,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& msg)
        : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace codag
