#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "codag/ldbw_complement.hpp"
#include "codag/nbw.hpp"
#include "codag/run_dag.hpp"

namespace codag {

struct ParseOptions {
    bool complete = true;
};

// Text format:
//   states: N
//   alphabet: a b
//   initial: 0
//   accepting: 1 2
//   0 a 1
// '#' starts a comment. Throws ParseError (line and column are 1-based).
// Repeated transition lines are merged and reported in warnings.
Nbw parse(std::string_view text, const ParseOptions& opts = {}, std::vector<std::string>* warnings = nullptr);

// States ascending, transitions sorted by source, symbol name, target. With
// names set, each state's name is emitted as a comment.
std::string write(const Nbw& a, bool names = false);

std::string to_dot(const Nbw& a);
// When full is given (same automaton and word), its edges missing from d
// are drawn dashed.
std::string to_dot(const Nbw& a, const LassoDag& d, const LassoDag* full = nullptr);
std::string to_dot(const Nbw& a, const LdbwDag& d);

// Words are written as plain letters when every symbol is one character,
// otherwise space separated. Throws ParseError on unknown symbols.
std::string format_word(const Nbw& a, const std::vector<Symbol>& w);
std::string format_lasso(const Nbw& a, const LassoWord& w);
std::vector<Symbol> parse_word(const Nbw& a, std::string_view text);

} // namespace codag
