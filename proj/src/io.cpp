#include "codag/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "codag/core.hpp"
#include "codag/errors.hpp"

namespace codag {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line, std::size_t from) {
    std::vector<Token> out;
    std::size_t i = from;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

std::size_t parse_number(const Token& t, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError(ErrorCode::parse_error, line, t.column, "expected a state number, got '" + t.text + "'");
    return v;
}

} // namespace

Nbw parse(std::string_view text, const ParseOptions& opts, std::vector<std::string>* warnings) {
    std::optional<std::size_t> num_states;
    std::optional<std::vector<std::string>> alphabet;
    std::vector<std::pair<std::size_t, Token>> initial, accepting;
    struct Line {
        std::size_t number;
        std::vector<Token> tokens;
    };
    std::vector<Line> body;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            auto tokens = tokenize(line, 0);
            if (!tokens.empty()) body.push_back({line_no, std::move(tokens)});
            continue;
        }
        auto key_tokens = tokenize(line.substr(0, colon), 0);
        if (key_tokens.size() != 1)
            throw ParseError(ErrorCode::parse_error, line_no, 1, "malformed header line");
        const std::string& key = key_tokens[0].text;
        auto values = tokenize(line, colon + 1);
        if (key == "states") {
            if (values.size() != 1)
                throw ParseError(ErrorCode::parse_error, line_no, colon + 2, "expected one state count");
            num_states = parse_number(values[0], line_no);
        } else if (key == "alphabet") {
            std::vector<std::string> syms;
            for (const auto& v : values) {
                if (std::find(syms.begin(), syms.end(), v.text) != syms.end())
                    throw ParseError(ErrorCode::parse_error, line_no, v.column, "repeated symbol '" + v.text + "'");
                syms.push_back(v.text);
            }
            if (syms.empty()) throw ParseError(ErrorCode::parse_error, line_no, colon + 2, "empty alphabet");
            alphabet = std::move(syms);
        } else if (key == "initial") {
            for (auto& v : values) initial.emplace_back(line_no, v);
        } else if (key == "accepting") {
            for (auto& v : values) accepting.emplace_back(line_no, v);
        } else {
            throw ParseError(ErrorCode::parse_error, line_no, key_tokens[0].column, "unknown header '" + key + "'");
        }
    }
    if (!num_states) throw ParseError(ErrorCode::parse_error, line_no, 1, "missing 'states:' header");
    if (!alphabet) throw ParseError(ErrorCode::parse_error, line_no, 1, "missing 'alphabet:' header");

    Nbw a(*num_states, *alphabet);
    auto state_at = [&](const Token& t, std::size_t line) {
        std::size_t q = parse_number(t, line);
        if (q >= *num_states)
            throw ParseError(ErrorCode::undeclared_state, line, t.column, "state " + t.text + " is not declared");
        return static_cast<State>(q);
    };
    for (auto& [l, t] : initial) a.set_initial(state_at(t, l));
    for (auto& [l, t] : accepting) a.set_accepting(state_at(t, l));
    if (a.initial().empty()) throw ParseError(ErrorCode::parse_error, line_no, 1, "no initial state");

    for (const auto& line : body) {
        if (line.tokens.size() != 3)
            throw ParseError(ErrorCode::parse_error, line.number, line.tokens[0].column,
                             "expected 'SRC SYM DST'");
        State from = state_at(line.tokens[0], line.number);
        auto sym = a.symbol(line.tokens[1].text);
        if (!sym)
            throw ParseError(ErrorCode::parse_error, line.number, line.tokens[1].column,
                             "unknown symbol '" + line.tokens[1].text + "'");
        State to = state_at(line.tokens[2], line.number);
        if (a.successors(from, *sym).contains(to) && warnings)
            warnings->push_back("line " + std::to_string(line.number) + ": duplicate transition merged");
        a.add_transition(from, *sym, to);
    }
    return opts.complete ? complete(a) : a;
}

std::string write(const Nbw& a, bool names) {
    std::ostringstream out;
    out << "states: " << a.num_states() << "\nalphabet:";
    for (const auto& s : a.alphabet()) out << ' ' << s;
    out << "\ninitial:";
    for (State q : a.initial()) out << ' ' << q;
    out << "\naccepting:";
    for (State q : a.accepting()) out << ' ' << q;
    out << '\n';
    std::vector<Symbol> syms(a.alphabet_size());
    for (Symbol s = 0; s < syms.size(); ++s) syms[s] = s;
    std::sort(syms.begin(), syms.end(), [&](Symbol x, Symbol y) { return a.alphabet()[x] < a.alphabet()[y]; });
    for (State q = 0; q < a.num_states(); ++q) {
        if (names) out << "# " << q << " = " << a.state_name(q) << '\n';
        for (Symbol s : syms)
            for (State r : a.successors(q, s)) out << q << ' ' << a.alphabet()[s] << ' ' << r << '\n';
    }
    return out.str();
}

namespace {

std::string quote(const std::string& s) {
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r + "\"";
}

} // namespace

std::string to_dot(const Nbw& a) {
    std::ostringstream out;
    out << "digraph nbw {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (State q = 0; q < a.num_states(); ++q) {
        out << "  s" << q << " [label=" << quote(a.state_name(q)) << (a.is_accepting(q) ? ", shape=doublecircle" : "")
            << "];\n";
        if (a.initial().contains(q)) out << "  init" << q << " [shape=point];\n  init" << q << " -> s" << q << ";\n";
    }
    for (State q = 0; q < a.num_states(); ++q) {
        StateSet targets;
        for (Symbol s = 0; s < a.alphabet_size(); ++s) targets |= a.successors(q, s);
        for (State r : targets) {
            std::string label;
            for (Symbol s = 0; s < a.alphabet_size(); ++s)
                if (a.successors(q, s).contains(r)) label += (label.empty() ? "" : ",") + a.alphabet()[s];
            out << "  s" << q << " -> s" << r << " [label=" << quote(label) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

namespace {

// Shared layout for both DAG kinds: one cluster per level, edges out of the
// last level drawn back to period_start.
template <class Label>
void dag_body(std::ostringstream& out, const LevelGraph& g, Label label,
              const std::vector<std::vector<std::vector<std::size_t>>>* dashed) {
    for (std::size_t l = 0; l < g.levels.size(); ++l) {
        out << "  subgraph level" << l << " {\n    rank=same;\n";
        out << "    lvl" << l << " [shape=plaintext, label=\"" << l << (l == g.period_start ? " (period)" : "")
            << "\"];\n";
        for (std::size_t i = 0; i < g.levels[l].size(); ++i)
            out << "    v" << l << '_' << i << " [label=" << quote(label(l, i))
                << (g.levels[l][i].f ? ", shape=doublecircle" : "") << "];\n";
        out << "  }\n";
    }
    for (std::size_t l = 0; l + 1 < g.levels.size(); ++l) out << "  lvl" << l << " -> lvl" << l + 1 << " [style=invis];\n";
    for (std::size_t l = 0; l < g.levels.size(); ++l) {
        std::size_t next = g.next_level(l);
        bool wrap = l + 1 == g.levels.size();
        for (std::size_t i = 0; i < g.levels[l].size(); ++i) {
            for (auto s : g.levels[l][i].succ)
                out << "  v" << l << '_' << i << " -> v" << next << '_' << s << (wrap ? " [constraint=false, color=gray]" : "")
                    << ";\n";
            if (dashed)
                for (auto s : (*dashed)[l][i])
                    out << "  v" << l << '_' << i << " -> v" << next << '_' << s << " [style=dashed"
                        << (wrap ? ", constraint=false" : "") << "];\n";
        }
    }
}

} // namespace

std::string to_dot(const Nbw& a, const LassoDag& d, const LassoDag* full) {
    std::ostringstream out;
    out << "digraph dag {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::vector<std::vector<std::vector<std::size_t>>> removed;
    if (full) {
        removed.resize(d.graph.levels.size());
        for (std::size_t l = 0; l < d.graph.levels.size(); ++l)
            for (std::size_t i = 0; i < d.graph.levels[l].size(); ++i) {
                const auto& kept = d.graph.levels[l][i].succ;
                std::vector<std::size_t> gone;
                if (l < full->graph.levels.size() && i < full->graph.levels[l].size())
                    for (auto s : full->graph.levels[l][i].succ)
                        if (std::find(kept.begin(), kept.end(), s) == kept.end()) gone.push_back(s);
                removed[l].push_back(std::move(gone));
            }
    }
    dag_body(
        out, d.graph, [&](std::size_t l, std::size_t i) { return a.state_name(d.states[l][i]); },
        full ? &removed : nullptr);
    out << "}\n";
    return out.str();
}

std::string to_dot(const Nbw& a, const LdbwDag& d) {
    std::ostringstream out;
    out << "digraph ldbw_dag {\n  rankdir=LR;\n  node [shape=circle];\n";
    dag_body(
        out, d.graph,
        [&](std::size_t l, std::size_t i) {
            const auto& v = d.vertices[l][i];
            std::string name;
            if (v.nondeterministic) {
                name = "<{";
                bool first = true;
                for (State q : v.states) {
                    name += (first ? "" : ",") + a.state_name(q);
                    first = false;
                }
                name += "}>";
            } else {
                name = a.state_name(v.state);
            }
            return name + " p=" + std::to_string(v.priority);
        },
        nullptr);
    out << "}\n";
    return out.str();
}

std::string format_word(const Nbw& a, const std::vector<Symbol>& w) {
    bool single = std::all_of(a.alphabet().begin(), a.alphabet().end(), [](const std::string& s) { return s.size() == 1; });
    std::string r;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i) r += ' ';
        r += a.alphabet()[w[i]];
    }
    return r;
}

std::string format_lasso(const Nbw& a, const LassoWord& w) {
    return format_word(a, w.stem) + ";" + format_word(a, w.loop);
}

std::vector<Symbol> parse_word(const Nbw& a, std::string_view text) {
    std::vector<Symbol> out;
    bool separated = text.find_first_of(" ,") != std::string_view::npos;
    bool single = std::all_of(a.alphabet().begin(), a.alphabet().end(), [](const std::string& s) { return s.size() == 1; });
    auto add = [&](std::string_view tok, std::size_t column) {
        auto s = a.symbol(tok);
        if (!s) throw ParseError(ErrorCode::parse_error, 1, column, "unknown symbol '" + std::string(tok) + "'");
        out.push_back(*s);
    };
    if (!separated && single) {
        for (std::size_t i = 0; i < text.size(); ++i) add(text.substr(i, 1), i + 1);
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != ',') ++i;
        if (i > start) add(text.substr(start, i - start), start + 1);
    }
    return out;
}

} // namespace codag
