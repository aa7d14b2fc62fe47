#include "codag/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "codag/core.hpp"
#include "codag/errors.hpp"
#include "codag/io.hpp"
#include "codag/lang_tools.hpp"
#include "codag/ldbw_complement.hpp"
#include "codag/run_dag.hpp"

namespace codag {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path, or fixture:NAME for a built-in automaton.
Nbw load(const std::string& path, bool no_complete) {
    if (path.rfind("fixture:", 0) == 0) {
        try {
            Nbw a = fixture(path.substr(8));
            return no_complete ? a : complete(a);
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str(), ParseOptions{!no_complete});
    } catch (const ParseError& e) {
        throw ParseError(e.code(), e.line(), e.column(), path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

Algorithm algorithm(const std::string& name) {
    auto algo = parse_algorithm(name);
    if (!algo) throw UsageError("unknown algorithm " + name);
    return *algo;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_report(std::ostream& out, const DagReport& r) {
    out << "accepting: " << yes_no(r.accepting) << '\n';
    out << "stable_level: " << (r.stable_level ? std::to_string(*r.stable_level) : "none") << '\n';
    out << "separating_level: " << (r.separating_level ? std::to_string(*r.separating_level) : "none") << '\n';
    out << "omega_branches: " << r.omega_branch_count_at_tail << '\n';
}

int failed_check(std::ostream& out, const Nbw& a, const CheckReport& r) {
    out << "failed\n" << format_lasso(a, *r.counterexample) << '\n';
    return 1;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complementation of nondeterministic Buchi automata"};
    app.require_subcommand(1);
    bool no_complete = false;
    app.add_flag("--no-complete", no_complete, "Do not add a sink to incomplete inputs");

    std::string file, file_b, algo_name = "auto", output, stem, loop, mode = "reduced", dot, shape = "any",
                                  against;
    std::size_t max_stem = 3, max_loop = 3, n = 4, alphabet = 2;
    std::uint64_t seed = 1;
    double density = 0.3, acc = 0.3;
    const std::vector<std::string> algos{"auto", "rkc", "rkc-fa", "slc-fa", "nsbc", "dslc"};

    auto* classify_cmd = app.add_subcommand("classify", "Report determinism, limit determinism and ambiguity");
    classify_cmd->add_option("FILE", file)->required();

    auto* complement_cmd = app.add_subcommand("complement", "Build a complement automaton");
    complement_cmd->add_option("FILE", file)->required();
    complement_cmd->add_option("--algo", algo_name)->check(CLI::IsMember(algos));
    complement_cmd->add_option("-o,--output", output);

    auto* contains_cmd = app.add_subcommand("contains", "Check L(A) is contained in L(B)");
    contains_cmd->add_option("A", file)->required();
    contains_cmd->add_option("B", file_b)->required();
    contains_cmd->add_option("--algo", algo_name)->check(CLI::IsMember(algos));

    auto* member_cmd = app.add_subcommand("member", "Decide membership of stem.loop^omega");
    member_cmd->add_option("FILE", file)->required();
    member_cmd->add_option("--stem", stem);
    member_cmd->add_option("--loop", loop)->required();

    auto* check_cmd = app.add_subcommand("check-complement", "Compare a complement against the input on short lassos");
    check_cmd->add_option("FILE", file)->required();
    check_cmd->add_option("--algo", algo_name)->check(CLI::IsMember(algos));
    check_cmd->add_option("--complement", against, "Use this complement instead of building one");
    check_cmd->add_option("--max-stem", max_stem);
    check_cmd->add_option("--max-loop", max_loop);

    auto* dag_cmd = app.add_subcommand("dag", "Build and analyse the run DAG over a lasso word");
    dag_cmd->add_option("FILE", file)->required();
    dag_cmd->add_option("--stem", stem);
    dag_cmd->add_option("--loop", loop)->required();
    dag_cmd->add_option("--mode", mode)->check(CLI::IsMember({"full", "reduced", "ldbw"}));
    dag_cmd->add_option("--dot", dot);

    auto* random_cmd = app.add_subcommand("random", "Generate a random automaton");
    random_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--shape", shape)->check(CLI::IsMember({"any", "ldbw", "fanbw"}));
    random_cmd->add_option("--alphabet", alphabet)->check(CLI::PositiveNumber);
    random_cmd->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--acc", acc)->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) {
            Nbw a = load(file, no_complete);
            auto r = classify(a);
            out << "complete: " << yes_no(r.complete) << '\n'
                << "deterministic: " << yes_no(r.deterministic) << '\n'
                << "reverse_deterministic: " << yes_no(r.reverse_deterministic) << '\n'
                << "limit_deterministic: " << yes_no(r.limit_deterministic) << '\n'
                << "finitely_ambiguous: " << yes_no(r.finitely_ambiguous) << '\n';
            if (r.ldbw_partition)
                out << "q_n: " << detail::format_set(a, r.ldbw_partition->q_n) << '\n'
                    << "q_d: " << detail::format_set(a, r.ldbw_partition->q_d) << '\n';
            return 0;
        }
        if (complement_cmd->parsed()) {
            Nbw a = load(file, no_complete);
            Nbw c = complement(a, algorithm(algo_name));
            emit(write(c, true), output, out);
            if (!output.empty()) out << "wrote " << c.num_states() << " states to " << output << '\n';
            return 0;
        }
        if (contains_cmd->parsed()) {
            Nbw a = load(file, no_complete);
            Nbw b = load(file_b, no_complete);
            auto r = contains(a, b, algorithm(algo_name));
            if (!r.passed) return failed_check(out, a, r);
            out << "passed\n";
            return 0;
        }
        if (member_cmd->parsed()) {
            Nbw a = load(file, no_complete);
            LassoWord w{parse_word(a, stem), parse_word(a, loop)};
            if (w.loop.empty()) throw UsageError("the loop must be nonempty");
            out << yes_no(member(a, w)) << '\n';
            return 0;
        }
        if (check_cmd->parsed()) {
            Nbw a = load(file, no_complete);
            Nbw c;
            if (!against.empty()) {
                c = load(against, no_complete);
            } else {
                c = complement(a, algorithm(algo_name));
            }
            auto r = complement_check(a, c, max_stem, max_loop);
            if (!r.passed) return failed_check(out, a, r);
            out << "passed (" << r.lassos_tested << " lassos)\n";
            return 0;
        }
        if (dag_cmd->parsed()) {
            Nbw a = load(file, no_complete);
            LassoWord w{parse_word(a, stem), parse_word(a, loop)};
            if (w.loop.empty()) throw UsageError("the loop must be nonempty");
            if (mode == "ldbw") {
                auto p = ldbw_partition(a);
                auto d = ldbw_codet_dag(a, p, w);
                out << "levels: " << d.num_levels() << "\nperiod_start: " << d.period_start()
                    << "\nperiod_len: " << d.period_len() << '\n';
                print_report(out, analyze_dag(d));
                if (!dot.empty()) emit(to_dot(a, d), dot, out);
            } else {
                auto d = lasso_dag(a, w, mode == "full" ? DagMode::full : DagMode::reduced);
                out << "levels: " << d.num_levels() << "\nperiod_start: " << d.period_start()
                    << "\nperiod_len: " << d.period_len() << '\n';
                print_report(out, analyze_dag(d));
                if (!dot.empty()) {
                    if (d.mode == DagMode::reduced) {
                        auto full = lasso_dag(a, w, DagMode::full);
                        emit(to_dot(a, d, &full), dot, out);
                    } else {
                        emit(to_dot(a, d), dot, out);
                    }
                }
            }
            return 0;
        }
        if (random_cmd->parsed()) {
            Shape s = shape == "ldbw" ? Shape::ldbw : shape == "fanbw" ? Shape::fanbw : Shape::any;
            emit(write(random_nbw(n, alphabet, density, acc, seed, s)), output, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << error_name(e.code()) << ": " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace codag
