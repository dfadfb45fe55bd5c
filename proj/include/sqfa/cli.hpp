// Copyright 2026 The sqfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. parse_args turns argv into a validated Command;
// execute runs it against the library and writes the artifacts. Nothing here
// computes probabilities.
//
// Exit status: 0 success, 1 usage or I/O error, 2 ill-formed machine,
// 3 verification failure, 4 any other analysis or construction error.

#pragma once

#include "sqfa/analysis.hpp"
#include "sqfa/constructions.hpp"
#include "sqfa/montecarlo.hpp"
#include "sqfa/report_io.hpp"
#include "sqfa/spec_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace sqfa::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum ExitCode : int { kOk = 0, kUsage = 1, kIllFormed = 2, kVerifyFailed = 3, kAnalysisError = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, structured, human };

struct Range {
    long long lo = 0;
    long long hi = 0;
    bool operator==(const Range&) const = default;
};

struct Command {
    std::string verb;  // build, eval, sweep, simulate, verify, report; "help" carries help_text
    std::string help_text;

    // machine source: exactly one of family / spec_path (report uses family L, C or EQ)
    std::string family;
    std::string spec_path;

    // factory parameters; report takes ranges in the same flags
    std::optional<Range> p, m, n;
    std::optional<long long> q1;
    std::optional<Rational> eps;
    std::string alphabet;
    std::uint64_t search_seed = MoqfaSearchOptions{}.seed;
    int attempts = MoqfaSearchOptions{}.attempts_per_k;
    double b = 1.0;

    // words
    std::vector<std::string> words;
    std::optional<Range> lengths;
    bool exhaustive = false;
    std::optional<std::uint64_t> samples;
    std::string language;  // mod:P, len:M or eq:N, classifies words for --spec

    // verification mode
    std::string mode;
    std::optional<double> mode_eps;
    double lambda = 0.5;
    double gap = 0.0;

    // simulation
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t runs = 10000;
    std::uint64_t step_cap = 0;  // 0 = 100 x analytic expected steps, else 10^7

    std::string out;
    Format format = Format::human;

    bool operator==(const Command&) const = default;
};

// ---------------------------------------------------------------------------
// Value parsing

namespace detail {

inline long long parse_integer(const std::string& flag, const std::string& text) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
}

/// "k" or "lo..hi".
inline Range parse_range(const std::string& flag, const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long long v = parse_integer(flag, text);
        return {v, v};
    }
    Range r{parse_integer(flag, text.substr(0, dots)), parse_integer(flag, text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + text + "'");
    return r;
}

inline int single(const std::optional<Range>& r, const std::string& flag) {
    if (!r) throw UsageError("missing parameter " + flag);
    if (r->lo != r->hi) throw UsageError(flag + ": expected a single value, not a range");
    if (r->lo < 1 || r->lo > 1'000'000) throw UsageError(flag + ": value out of range");
    return static_cast<int>(r->lo);
}

inline Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "structured" || text == "json") return Format::structured;
    if (text == "human") return Format::human;
    throw UsageError("--format: expected csv, structured or human, got '" + text + "'");
}

inline const std::vector<std::string>& factory_names() {
    static const std::vector<std::string> names{"dfa-mod",   "dfa-len",   "eq-1qcfa",      "mod-2qcfa",
                                                "len-2qcfa", "moqfa-mod", "tradeoff-1qcfa"};
    return names;
}

inline bool is_factory(const std::string& f) {
    const auto& names = factory_names();
    return std::find(names.begin(), names.end(), f) != names.end();
}

inline std::optional<std::uint64_t> env_seed() {
    const char* s = std::getenv("SQFA_SEED");
    if (!s || !*s) return std::nullopt;
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used);
        if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SQFA_SEED: expected a nonnegative integer, got '") + s + "'");
}

/// Which family parameters each factory needs.
struct FactoryNeeds {
    bool p = false, m = false, n = false, eps = false, q1 = false;
};

inline FactoryNeeds needs(const std::string& f) {
    if (f == "dfa-mod") return {.p = true};
    if (f == "dfa-len") return {.m = true};
    if (f == "eq-1qcfa") return {.n = true};
    if (f == "mod-2qcfa" || f == "moqfa-mod") return {.p = true, .eps = true};
    if (f == "len-2qcfa") return {.m = true, .eps = true};
    return {.p = true, .eps = true, .q1 = true};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// parse_args

namespace detail {

constexpr const char* kMachineHelp =
    "Machine source: --family NAME with its parameters, or --spec FILE.\n"
    "Families: dfa-mod --p P | dfa-len --m M | eq-1qcfa --n N | mod-2qcfa --p P --eps E |\n"
    "          len-2qcfa --m M --eps E | moqfa-mod --p P --eps E | tradeoff-1qcfa --p P --q1 Q --eps E\n"
    "Words: --word W (repeatable), --lengths LO..HI (unary words a^k), or for equality\n"
    "       --exhaustive (every pair x#y, outside-promise pairs reported only) / --samples K --seed S.\n";

}  // namespace detail

inline Command parse_args(const std::vector<std::string>& args) {
    Command c;
    CLI::App app{"Quantum and classical finite automata: build, analyze and simulate.", "sqfa"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 ok, 1 usage, 2 ill-formed machine, 3 verification failure, 4 analysis error.\n"
               "SQFA_SEED sets the default random seed (overridden by --seed).");

    std::string p, m, n, eps, lengths, format, seed;
    std::optional<std::string> mode_eps;

    auto machine_opts = [&](CLI::App* s, bool words) {
        s->add_option("--family", c.family, "factory name");
        s->add_option("--spec", c.spec_path, "machine spec file (JSON)");
        s->add_option("--p", p, "modulus p");
        s->add_option("--m", m, "exact length m");
        s->add_option("--n", n, "string length n for equality");
        s->add_option("--q1", c.q1, "quantum part of the trade-off partition");
        s->add_option("--eps", eps, "error bound (decimal or p/q)");
        s->add_option("--alphabet", c.alphabet, "input alphabet for dfa-len / len-2qcfa (default ab)");
        s->add_option("--search-seed", c.search_seed, "seed of the measure-once angle search");
        s->add_option("--attempts", c.attempts, "angle-search attempts per k");
        if (words) {
            s->add_option("--word", c.words, "input word (repeatable)");
            s->add_option("--lengths", lengths, "unary word lengths LO..HI");
            s->add_flag("--exhaustive", c.exhaustive, "every pair x#y (equality)");
            s->add_option("--samples", c.samples, "random promise instances (equality)");
            s->add_option("--language", c.language, "classifier for --spec machines: mod:P, len:M or eq:N");
            s->add_option("--seed", seed, "random seed");
        }
        s->add_option("--out", c.out, "output path (default stdout)");
        s->add_option("--format", format, "csv, structured or human");
    };

    auto* build = app.add_subcommand("build", "construct a machine and write its spec document");
    machine_opts(build, false);
    build->footer(std::string(detail::kMachineHelp) + "Output: the machine spec document (JSON).");

    auto* eval = app.add_subcommand("eval", "exact acceptance probabilities and expected steps");
    machine_opts(eval, true);
    eval->footer(std::string(detail::kMachineHelp) +
                 "Default format human. CSV columns: word,p_accept,p_reject,expected_steps,exact_accept,"
                 "exact_reject,representation");

    auto* sweep = app.add_subcommand("sweep", "eval over a word range, CSV by default");
    machine_opts(sweep, true);
    sweep->footer(std::string(detail::kMachineHelp) +
                  "CSV columns: word,p_accept,p_reject,expected_steps,exact_accept,exact_reject,representation");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimates");
    machine_opts(sim, true);
    sim->add_option("--runs", c.runs, "runs per word (default 10000)");
    sim->add_option("--step-cap", c.step_cap, "censoring cap (default 100 x analytic expected steps)");
    sim->footer(std::string(detail::kMachineHelp) +
                "CSV columns: word,n_runs,censored,p_accept_hat,p_reject_hat,ci_halfwidth,mean_steps,usable");

    auto* verify = app.add_subcommand("verify", "check an acceptance mode on every word");
    machine_opts(verify, true);
    verify->add_option("--mode", c.mode, "one-sided, error-prob, cut-point or exact")->required();
    verify->add_option("--mode-eps", mode_eps, "error of the mode (default --eps)");
    verify->add_option("--lambda", c.lambda, "cut point");
    verify->add_option("--gap", c.gap, "isolation gap around the cut point");
    verify->footer(std::string(detail::kMachineHelp) +
                   "Default format human; exit 3 when any word fails.\n"
                   "CSV columns: word,class,p_accept,p_reject,expected_steps,exact_accept,exact_reject,"
                   "representation,margin,pass");

    auto* report = app.add_subcommand("report", "state-complexity table");
    report->add_option("--family", c.family, "L (mod p), C (exact length) or EQ (equality)")->required();
    report->add_option("--p", p, "range LO..HI for L");
    report->add_option("--m", m, "range LO..HI for C");
    report->add_option("--n", n, "range LO..HI for EQ");
    report->add_option("--b", c.b, "constant of the two-way probabilistic lower bound (default 1)");
    report->add_option("--eps", eps, "error used to build the quantum machines (default 1/4)");
    report->add_option("--out", c.out, "output path (default stdout)");
    report->add_option("--format", format, "csv, structured or human");
    report->footer(
        "Default format csv. Columns:\n"
        "  L:  p,dfa_states,2qcfa_quantum,2qcfa_classical,2pfa_lower_bound\n"
        "  C:  m,dfa_states,2qcfa_quantum,2qcfa_classical,2pfa_lower_bound\n"
        "  EQ: n,1qcfa_quantum,1qcfa_classical,1dfa_states\n"
        "2pfa_lower_bound = cbrt(log2(parameter)/b), constant b unspecified in source; "
        "1dfa_states is the formula 2^Omega(n). Neither is validated empirically.");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        c.verb = "help";
        c.help_text = app.help();
        return c;
    } catch (const CLI::CallForAllHelp&) {
        c.verb = "help";
        c.help_text = app.help("", CLI::AppFormatMode::All);
        return c;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CLI::App* chosen = app.get_subcommands().front();
    c.verb = chosen->get_name();

    if (!p.empty()) c.p = detail::parse_range("--p", p);
    if (!m.empty()) c.m = detail::parse_range("--m", m);
    if (!n.empty()) c.n = detail::parse_range("--n", n);
    if (!lengths.empty()) {
        c.lengths = detail::parse_range("--lengths", lengths);
        if (c.lengths->lo < 0) throw UsageError("--lengths: lengths must be nonnegative");
    }
    if (!eps.empty()) {
        try {
            c.eps = parse_rational(eps);
        } catch (const std::invalid_argument& e) {
            throw UsageError("--eps: " + std::string(e.what()));
        }
    }
    if (mode_eps) {
        try {
            c.mode_eps = std::stod(*mode_eps);
        } catch (const std::exception&) {
            throw UsageError("--mode-eps: expected a number, got '" + *mode_eps + "'");
        }
    }
    if (auto env = detail::env_seed()) c.seed = *env;
    if (!seed.empty()) {
        long long s = detail::parse_integer("--seed", seed);
        if (s < 0) throw UsageError("--seed: must be nonnegative");
        c.seed = static_cast<std::uint64_t>(s);
    }

    if (c.verb == "report") {
        c.format = format.empty() ? Format::csv : detail::parse_format(format);
        if (c.family != "L" && c.family != "C" && c.family != "EQ")
            throw UsageError("--family: report needs L, C or EQ, got '" + c.family + "'");
        const auto& r = c.family == "L" ? c.p : c.family == "C" ? c.m : c.n;
        const char* flag = c.family == "L" ? "--p" : c.family == "C" ? "--m" : "--n";
        if (!r) throw UsageError(std::string("missing parameter ") + flag + " (range LO..HI)");
        if (r->lo < 1) throw UsageError(std::string(flag) + ": parameters must be positive");
        if (!(c.b > 0)) throw UsageError("--b: must be positive");
        return c;
    }

    c.format = format.empty() ? (c.verb == "sweep" || c.verb == "simulate" ? Format::csv
                                 : c.verb == "build"                      ? Format::structured
                                                                          : Format::human)
                              : detail::parse_format(format);

    // exactly one machine source
    if (c.family.empty() == c.spec_path.empty())
        throw UsageError(c.family.empty() ? "missing machine source: give --family or --spec"
                                          : "conflicting machine sources: --family and --spec");
    if (!c.family.empty()) {
        if (!detail::is_factory(c.family)) throw UsageError("--family: unknown factory '" + c.family + "'");
        auto need = detail::needs(c.family);
        if (need.p) detail::single(c.p, "--p");
        if (need.m) detail::single(c.m, "--m");
        if (need.n) detail::single(c.n, "--n");
        if (need.eps && !c.eps) throw UsageError("missing parameter --eps");
        if (need.q1 && !c.q1) throw UsageError("missing parameter --q1");
        if (!c.language.empty()) throw UsageError("--language only applies to --spec machines");
    } else if (!std::filesystem::exists(c.spec_path)) {
        throw UsageError("cannot open machine spec '" + c.spec_path + "': file not found");
    }

    if (c.verb == "build") return c;

    const int word_sources = !c.words.empty() + c.lengths.has_value() + c.exhaustive + c.samples.has_value();
    if (word_sources > 1) throw UsageError("conflicting word sources: use one of --word, --lengths, --exhaustive, --samples");
    const bool equality = c.family == "eq-1qcfa" || c.language.rfind("eq:", 0) == 0;
    if (word_sources == 0) {
        if (equality) c.exhaustive = true;  // every pair x#y
        else throw UsageError("missing words: give --word or --lengths");
    }
    if ((c.exhaustive || c.samples) && !equality)
        throw UsageError("--exhaustive and --samples need an equality machine (eq-1qcfa or --language eq:N)");
    if (c.samples && *c.samples == 0) throw UsageError("--samples: must be positive");

    if (c.verb == "verify") {
        if (c.mode != "one-sided" && c.mode != "error-prob" && c.mode != "cut-point" && c.mode != "exact")
            throw UsageError("--mode: expected one-sided, error-prob, cut-point or exact, got '" + c.mode + "'");
        if ((c.mode == "one-sided" || c.mode == "error-prob") && !c.mode_eps && !c.eps)
            throw UsageError("--mode " + c.mode + " needs --mode-eps or --eps");
        if (c.mode == "cut-point" && !(c.gap > 0)) throw UsageError("--mode cut-point needs --gap > 0");
        if (!c.spec_path.empty() && c.language.empty())
            throw UsageError("verify --spec needs --language mod:P, len:M or eq:N");
    }
    if (c.verb == "simulate" && c.runs < 1) throw UsageError("--runs: must be positive");
    return c;
}

inline Command parse_args(int argc, const char* const* argv) {
    return parse_args(std::vector<std::string>(argv + 1, argv + argc));
}

// ---------------------------------------------------------------------------
// execute

namespace detail {

inline Machine build_machine(const Command& c) {
    if (!c.spec_path.empty()) return spec_load_file(c.spec_path);
    const std::string& f = c.family;
    const std::string alpha = c.alphabet.empty() ? "ab" : c.alphabet;
    MoqfaSearchOptions opt{c.search_seed, c.attempts};
    if (f == "dfa-mod") return dfa_mod(single(c.p, "--p"));
    if (f == "dfa-len") return dfa_len(single(c.m, "--m"), alpha);
    if (f == "eq-1qcfa") return eq_1qcfa(single(c.n, "--n"));
    if (f == "mod-2qcfa") return mod_2qcfa(single(c.p, "--p"), *c.eps);
    if (f == "len-2qcfa") return len_2qcfa(single(c.m, "--m"), *c.eps, alpha);
    if (f == "moqfa-mod") return moqfa_mod(single(c.p, "--p"), *c.eps, opt);
    return tradeoff_1qcfa(make_partition(single(c.p, "--p"), *c.q1), *c.eps, opt);
}

/// The language the words are checked against.
inline Classifier classifier(const Command& c) {
    std::string kind;
    int param = 0;
    if (!c.language.empty()) {
        auto colon = c.language.find(':');
        if (colon == std::string::npos) throw UsageError("--language: expected mod:P, len:M or eq:N");
        kind = c.language.substr(0, colon);
        long long v = parse_integer("--language", c.language.substr(colon + 1));
        if (v < 1) throw UsageError("--language: parameter must be positive");
        param = static_cast<int>(v);
    } else if (c.family == "dfa-len" || c.family == "len-2qcfa") {
        kind = "len", param = single(c.m, "--m");
    } else if (c.family == "eq-1qcfa") {
        kind = "eq", param = single(c.n, "--n");
    } else {
        kind = "mod", param = single(c.p, "--p");
    }
    if (kind == "mod") return [param](std::string_view w) { return classify_mod(param, w); };
    if (kind == "len") return [param](std::string_view w) { return classify_len(param, w); };
    if (kind == "eq") return [param](std::string_view w) { return classify_eq(param, w); };
    throw UsageError("--language: unknown language '" + kind + "'");
}

inline int equality_n(const Command& c) {
    if (c.family == "eq-1qcfa") return single(c.n, "--n");
    return static_cast<int>(parse_integer("--language", c.language.substr(3)));
}

/// Random promise instances: a fair choice between yes and no, a uniform x,
/// and for no-instances a uniform set of n/2 flipped positions.
inline std::vector<std::string> sample_promise_instances(int n, std::uint64_t k, std::uint64_t seed) {
    std::vector<std::string> out;
    for (std::uint64_t i = 0; i < k; ++i) {
        CounterRng rng(seed, i);
        std::string x(static_cast<std::size_t>(n), '0');
        for (auto& ch : x) ch = (rng() & 1u) ? '1' : '0';
        std::string y = x;
        if (n % 2 == 0 && (rng() & 1u)) {
            std::vector<int> pos(static_cast<std::size_t>(n));
            std::iota(pos.begin(), pos.end(), 0);
            std::shuffle(pos.begin(), pos.end(), rng);
            for (int j = 0; j < n / 2; ++j) y[pos[j]] = y[pos[j]] == '0' ? '1' : '0';
        }
        out.push_back(promise_word(x, y));
    }
    return out;
}

inline std::vector<std::string> words(const Command& c, const Machine& m) {
    std::vector<std::string> out;
    if (!c.words.empty()) {
        out = c.words;
    } else if (c.lengths) {
        const std::string& alpha = machine_alphabet(m);
        for (long long k = c.lengths->lo; k <= c.lengths->hi; ++k) out.emplace_back(static_cast<std::size_t>(k), alpha[0]);
    } else if (c.exhaustive) {
        out = all_equality_pairs(equality_n(c));
    } else {
        out = sample_promise_instances(equality_n(c), *c.samples, c.seed);
    }
    if (c.verb != "eval") {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

inline AcceptanceMode mode(const Command& c) {
    double e = c.mode_eps ? *c.mode_eps : c.eps ? to_double(*c.eps) : 0.0;
    try {
        if (c.mode == "one-sided") return AcceptanceMode::one_sided(e);
        if (c.mode == "error-prob") return AcceptanceMode::error_prob(e);
        if (c.mode == "cut-point") return AcceptanceMode::cut_point(c.lambda, c.gap);
    } catch (const std::invalid_argument& ex) {
        throw UsageError("--mode " + c.mode + ": " + ex.what());
    }
    return AcceptanceMode::exact();
}

inline int run(const Command& c, std::ostream& out) {
    if (c.verb == "report") {
        Family f = c.family == "L" ? Family::mod_p : c.family == "C" ? Family::exact_length : Family::equality;
        const Range& r = *(c.family == "L" ? c.p : c.family == "C" ? c.m : c.n);
        ComplexityOptions opt;
        opt.b = c.b;
        if (c.eps) opt.eps = *c.eps;
        auto rows = complexity_report(f, static_cast<int>(r.lo), static_cast<int>(r.hi), opt);
        if (c.format == Format::csv) write_complexity_csv(out, rows);
        else if (c.format == Format::structured) out << complexity_json(rows).dump(2) << '\n';
        else write_complexity_human(out, rows);
        return kOk;
    }

    Machine m = build_machine(c);
    if (c.verb == "build") {
        out << spec_dump(m);
        return kOk;
    }

    auto ws = words(c, m);
    for (const auto& w : ws)
        for (char ch : w)
            if (machine_alphabet(m).find(ch) == std::string::npos)
                throw UsageError("word '" + w + "' uses symbol '" + std::string(1, ch) + "' outside the alphabet \"" +
                                 machine_alphabet(m) + "\"");

    if (c.verb == "eval" || c.verb == "sweep") {
        std::vector<EvalRow> rows;
        for (const auto& w : ws) rows.push_back({w, acceptance(m, w)});
        if (c.format == Format::csv) write_sweep_csv(out, rows);
        else if (c.format == Format::structured) out << sweep_json(machine_name(m), rows).dump(2) << '\n';
        else write_sweep_human(out, machine_name(m), rows);
        return kOk;
    }

    if (c.verb == "simulate") {
        std::vector<EstimateRow> rows;
        for (const auto& w : ws) rows.push_back({w, estimate(m, w, c.runs, c.seed, c.step_cap)});
        if (c.format == Format::csv) write_estimates_csv(out, rows);
        else if (c.format == Format::structured) out << estimates_json(machine_name(m), c.seed, rows).dump(2) << '\n';
        else write_estimates_human(out, machine_name(m), c.seed, rows);
        return kOk;
    }

    auto rep = verify_mode(m, mode(c), classifier(c), ws);
    if (c.format == Format::csv) write_verification_csv(out, rep);
    else if (c.format == Format::structured) out << verification_json(rep).dump(2) << '\n';
    else write_verification_human(out, rep);
    return rep.pass ? kOk : kVerifyFailed;
}

}  // namespace detail

/// Runs a parsed command. Artifacts go to c.out (or `out`); diagnostics to `err`.
inline int execute(const Command& c, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    if (c.verb == "help") {
        out << c.help_text;
        return kOk;
    }
    try {
        if (c.out.empty()) return detail::run(c, out);
        std::ostringstream buffer;
        int status = detail::run(c, buffer);
        std::ofstream file(c.out, std::ios::binary);
        if (!file) throw UsageError("cannot write output file '" + c.out + "'");
        file << buffer.str();
        return status;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const LoadError& e) {
        err << "error: ill-formed machine spec at " << e.what() << '\n';
        return kIllFormed;
    } catch (const IllFormedMachine& e) {
        err << "error: ill-formed machine: " << e.what() << '\n';
        return kIllFormed;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid parameter: " << e.what() << '\n';
        return kUsage;
    } catch (const ConstructionFailed& e) {
        err << "error: " << e.what() << " (best certified error " << format_number(e.best_error, 6) << ")\n";
        return kAnalysisError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kAnalysisError;
    }
}

/// parse_args + execute with usage errors mapped to exit status 1.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Command c;
    try {
        c = parse_args(argc, argv);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kUsage;
    }
    return execute(c, out, err);
}

}  // namespace sqfa::cli
