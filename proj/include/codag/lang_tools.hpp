#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codag/nbw.hpp"

namespace codag {

bool member(const Nbw& a, const LassoWord& w);

// A witness lasso when L(a) is nonempty.
std::optional<LassoWord> is_empty(const Nbw& a);

// Two-copy product. Throws AlphabetMismatch unless both alphabets hold the
// same symbols; b is re-indexed to a's symbol order.
Nbw intersect(const Nbw& a, const Nbw& b);

enum class Algorithm { automatic, rkc, rkc_fa, slc_fa, nsbc, disambiguate_slc };

const char* algorithm_name(Algorithm algo);
std::optional<Algorithm> parse_algorithm(const std::string& name);

// The algorithm auto resolves to for b.
Algorithm resolve_algorithm(const Nbw& b, Algorithm algo);
// Complement of b with the given algorithm. Precondition failures surface as
// NotFinitelyAmbiguous or NotLimitDeterministic.
Nbw complement(const Nbw& b, Algorithm algo);

struct CheckReport {
    bool passed = true;
    std::optional<LassoWord> counterexample;
    std::size_t lassos_tested = 0;
    bool member_a = false;
    bool member_b = false;
};

// Checks L(a) is contained in L(b) through emptiness of a and the complement
// of b. A counterexample is in L(a) but not in L(b). Throws
// IncompatibleAlgorithm when algo does not apply to b.
CheckReport contains(const Nbw& a, const Nbw& b, Algorithm algo);

// Shortest stem, primitive loop.
LassoWord canonical(const LassoWord& w);
// Distinct words u.v^omega with |u| <= max_stem and 1 <= |v| <= max_loop, in
// canonical form, ordered by (|stem|+|loop|, stem, loop).
std::vector<LassoWord> enumerate_lassos(std::size_t alphabet_size, std::size_t max_stem, std::size_t max_loop);

// Passes when a and c disagree on every enumerated lasso.
CheckReport complement_check(const Nbw& a, const Nbw& c, std::size_t max_stem, std::size_t max_loop);

enum class Shape { any, ldbw, fanbw };

// Seeded generator; the result is complete. Throws ShapeUnsatisfiable when
// rejection sampling for fanbw runs out of retries.
Nbw random_nbw(std::size_t n, std::size_t alphabet_size, double density, double acc_fraction, std::uint64_t seed,
               Shape shape);

} // namespace codag
