#pragma once

#include <doctest.h>

#include <string_view>

#include "codag/errors.hpp"
#include "codag/nbw.hpp"

namespace testing {

// Letters are single characters of the automaton's alphabet.
inline std::vector<codag::Symbol> letters(const codag::Nbw& a, std::string_view text) {
    std::vector<codag::Symbol> out;
    for (char c : text) out.push_back(*a.symbol(std::string(1, c)));
    return out;
}

inline codag::LassoWord lasso(const codag::Nbw& a, std::string_view stem, std::string_view loop) {
    return {letters(a, stem), letters(a, loop)};
}

template <class F>
codag::ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const codag::Error& e) {
        return e.code();
    }
    FAIL("no codag::Error thrown");
    return codag::ErrorCode::parse_error;
}

} // namespace testing
