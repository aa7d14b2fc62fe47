#pragma once

#include <string>
#include <vector>

#include "codag/complement.hpp"

namespace codag {

// Ordered sequence of nonempty, pairwise disjoint state sets.
using Slice = std::vector<StateSet>;

bool slice_well_formed(const Slice& s);
Slice initial_slice(const Nbw& a);
Slice slice_successor(const Nbw& a, const Slice& s, Symbol sym);

// Language-equivalent finitely ambiguous automaton whose states are pairs
// (slice, tracked block). Completes the input first.
Nbw disambiguate(const Nbw& a);

// Initial phase holds the subset in n; the accepting phase holds (n, c, b).
struct SliceMacrostate {
    bool accepting_phase = false;
    StateSet n;
    StateSet c;
    StateSet b;

    bool operator==(const SliceMacrostate&) const = default;
};

struct SliceMacrostateHash {
    std::size_t operator()(const SliceMacrostate& m) const;
};

using SliceComplement = Complement<SliceMacrostate, SliceMacrostateHash>;

// Transitions of the complement from one macrostate, without building it.
std::vector<SliceMacrostate> slc_successors(const Nbw& a, const SliceMacrostate& m, Symbol sym);

// Completes the input first. Throws NotFinitelyAmbiguous.
SliceComplement slc_complement_fa(const Nbw& a);

// Throws PhaseMismatch unless both macrostates are in the accepting phase.
bool slc_subsumes(const SliceMacrostate& m1, const SliceMacrostate& m2);

std::string to_string(const Nbw& a, const SliceMacrostate& m);
std::string to_string(const Nbw& a, const Slice& s);

} // namespace codag
