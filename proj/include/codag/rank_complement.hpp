#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codag/complement.hpp"

namespace codag {

inline constexpr std::int8_t kNoRank = -1;

// Level ranking (kNoRank outside the domain) plus breakpoint set O.
struct RankMacrostate {
    std::vector<std::int8_t> ranking;
    StateSet o;

    StateSet domain() const;
    bool operator==(const RankMacrostate&) const = default;
};

struct RankMacrostateHash {
    std::size_t operator()(const RankMacrostate& m) const;
};

enum class RankMode { general, fa };

using RankComplement = Complement<RankMacrostate, RankMacrostateHash>;

// All rankings covered by m.ranking under sym. In fa mode predecessors are
// taken through the reduced transition function with context dom(ranking).
std::vector<std::vector<std::int8_t>> covering_rankings(const Nbw& a, const RankMacrostate& m, Symbol sym,
                                                        int max_rank, RankMode mode);

// Completes the input first. Throws NotFinitelyAmbiguous in fa mode on an
// infinitely ambiguous input.
RankComplement rkc_complement(const Nbw& a, RankMode mode);

bool rank_subsumes(const RankMacrostate& m1, const RankMacrostate& m2);
bool rank_well_formed(const Nbw& a, const RankMacrostate& m, int max_rank);

std::string to_string(const Nbw& a, const RankMacrostate& m);

} // namespace codag
