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

// Report serialization. CSV column orders are fixed:
//
//   verify:   word,class,p_accept,p_reject,expected_steps,exact_accept,exact_reject,representation,margin,pass
//   sweep:    word,p_accept,p_reject,expected_steps,exact_accept,exact_reject,representation
//   simulate: word,n_runs,censored,p_accept_hat,p_reject_hat,ci_halfwidth,mean_steps,usable
//   report L: p,dfa_states,2qcfa_quantum,2qcfa_classical,2pfa_lower_bound
//   report C: m,dfa_states,2qcfa_quantum,2qcfa_classical,2pfa_lower_bound
//   report EQ: n,1qcfa_quantum,1qcfa_classical,1dfa_states
//
// Numbers in CSV and JSON use 17 significant digits so output is byte-stable
// and round-trips. Human output uses 6 significant digits and appends the
// exact rational when one is known.

#pragma once

#include "sqfa/analysis.hpp"
#include "sqfa/montecarlo.hpp"
#include "sqfa/spec_io.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace sqfa {

inline std::string format_number(double x, int digits = 17) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

/// Six significant digits, plus " (= p/q)" when the exact value is known.
inline std::string format_human(double x, const std::optional<Rational>& exact = std::nullopt) {
    std::string s = format_number(x, 6);
    if (exact) s += " (= " + to_string(*exact) + ")";
    return s;
}

/// Which arithmetic produced a probability pair.
inline const char* representation(const std::optional<Rational>& exact) { return exact ? "exact" : "double"; }

namespace detail {

inline std::string opt_rational(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

inline Json opt_rational_json(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

/// Words are unary or binary strings plus '#', so no CSV quoting is needed;
/// anything else is quoted defensively.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline Json number_json(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Word-level evaluation rows (eval, sweep)

struct EvalRow {
    std::string word;
    AcceptanceResult result;
};

inline void write_sweep_csv(std::ostream& os, const std::vector<EvalRow>& rows) {
    os << "word,p_accept,p_reject,expected_steps,exact_accept,exact_reject,representation\n";
    for (const auto& r : rows)
        os << detail::csv_field(r.word) << ',' << format_number(r.result.p_accept) << ','
           << format_number(r.result.p_reject) << ',' << format_number(r.result.expected_steps) << ','
           << detail::opt_rational(r.result.exact_accept) << ',' << detail::opt_rational(r.result.exact_reject) << ','
           << representation(r.result.exact_accept) << '\n';
}

inline Json sweep_json(const std::string& machine, const std::vector<EvalRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back({{"word", r.word},
                       {"p_accept", r.result.p_accept},
                       {"p_reject", r.result.p_reject},
                       {"expected_steps", detail::number_json(r.result.expected_steps)},
                       {"exact_accept", detail::opt_rational_json(r.result.exact_accept)},
                       {"exact_reject", detail::opt_rational_json(r.result.exact_reject)},
                       {"representation", representation(r.result.exact_accept)}});
    return {{"machine", machine}, {"rows", out}};
}

inline void write_sweep_human(std::ostream& os, const std::string& machine, const std::vector<EvalRow>& rows) {
    os << "machine: " << machine << '\n';
    for (const auto& r : rows)
        os << "word \"" << r.word << "\": p_accept = " << format_human(r.result.p_accept, r.result.exact_accept)
           << ", p_reject = " << format_human(r.result.p_reject, r.result.exact_reject)
           << ", expected_steps = " << format_human(r.result.expected_steps, r.result.exact_steps) << '\n';
}

// ---------------------------------------------------------------------------
// VerificationReport

inline void write_verification_csv(std::ostream& os, const VerificationReport& rep) {
    os << "word,class,p_accept,p_reject,expected_steps,exact_accept,exact_reject,representation,margin,pass\n";
    for (const auto& r : rep.rows)
        os << detail::csv_field(r.word) << ',' << to_string(r.classification) << ',' << format_number(r.p_accept) << ','
           << format_number(r.p_reject) << ',' << format_number(r.expected_steps) << ','
           << detail::opt_rational(r.exact_accept) << ',' << detail::opt_rational(r.exact_reject) << ','
           << representation(r.exact_accept) << ',' << format_number(r.margin) << ',' << (r.pass ? "true" : "false")
           << '\n';
}

inline Json verification_json(const VerificationReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"word", r.word},
                        {"class", to_string(r.classification)},
                        {"p_accept", r.p_accept},
                        {"p_reject", r.p_reject},
                        {"expected_steps", detail::number_json(r.expected_steps)},
                        {"exact_accept", detail::opt_rational_json(r.exact_accept)},
                        {"exact_reject", detail::opt_rational_json(r.exact_reject)},
                        {"representation", representation(r.exact_accept)},
                        {"margin", detail::number_json(r.margin)},
                        {"pass", r.pass}});
    return {{"machine", rep.machine},
            {"mode", to_string(rep.mode)},
            {"pass", rep.pass},
            {"min_margin", detail::number_json(rep.min_margin)},
            {"max_steps", detail::number_json(rep.max_steps)},
            {"failures", rep.failures()},
            {"rows", rows}};
}

inline void write_verification_human(std::ostream& os, const VerificationReport& rep) {
    os << "machine: " << rep.machine << "\nmode: " << to_string(rep.mode) << "\nwords: " << rep.rows.size()
       << "\nmin margin: " << format_human(rep.min_margin) << "\nmax expected steps: " << format_human(rep.max_steps)
       << '\n';
    auto bad = rep.failures();
    if (bad.empty()) {
        os << "result: PASS\n";
        return;
    }
    os << "result: FAIL (" << bad.size() << " words)\n";
    for (const auto& r : rep.rows)
        if (!r.pass)
            os << "  \"" << r.word << "\" [" << to_string(r.classification)
               << "]: p_accept = " << format_human(r.p_accept, r.exact_accept)
               << ", p_reject = " << format_human(r.p_reject, r.exact_reject) << '\n';
}

// ---------------------------------------------------------------------------
// Monte Carlo estimates

struct EstimateRow {
    std::string word;
    Estimate estimate;
};

inline void write_estimates_csv(std::ostream& os, const std::vector<EstimateRow>& rows) {
    os << "word,n_runs,censored,p_accept_hat,p_reject_hat,ci_halfwidth,mean_steps,usable\n";
    for (const auto& r : rows) {
        const auto& e = r.estimate;
        os << detail::csv_field(r.word) << ',' << e.n_runs << ',' << e.censored << ',' << format_number(e.p_accept_hat)
           << ',' << format_number(e.p_reject_hat) << ',' << format_number(e.ci_halfwidth) << ','
           << format_number(e.mean_steps) << ',' << (e.usable ? "true" : "false") << '\n';
    }
}

inline Json estimates_json(const std::string& machine, std::uint64_t seed, const std::vector<EstimateRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        const auto& e = r.estimate;
        out.push_back({{"word", r.word},
                       {"n_runs", e.n_runs},
                       {"censored", e.censored},
                       {"p_accept_hat", e.p_accept_hat},
                       {"p_reject_hat", e.p_reject_hat},
                       {"ci_halfwidth", e.ci_halfwidth},
                       {"mean_steps", e.mean_steps},
                       {"usable", e.usable}});
    }
    return {{"machine", machine}, {"seed", seed}, {"rows", out}};
}

inline void write_estimates_human(std::ostream& os, const std::string& machine, std::uint64_t seed,
                                  const std::vector<EstimateRow>& rows) {
    os << "machine: " << machine << "\nseed: " << seed << '\n';
    for (const auto& r : rows) {
        const auto& e = r.estimate;
        os << "word \"" << r.word << "\": runs = " << e.n_runs << ", censored = " << e.censored;
        if (e.usable)
            os << ", p_accept ~ " << format_human(e.p_accept_hat) << " +/- " << format_human(e.ci_halfwidth)
               << ", mean steps ~ " << format_human(e.mean_steps);
        else
            os << ", unusable (every run censored)";
        os << '\n';
    }
}

// ---------------------------------------------------------------------------
// Complexity rows

namespace detail {

inline std::string opt_count(const std::optional<long long>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace detail

inline std::vector<std::string> complexity_columns(Family f) {
    switch (f) {
        case Family::mod_p: return {"p", "dfa_states", "2qcfa_quantum", "2qcfa_classical", "2pfa_lower_bound"};
        case Family::exact_length: return {"m", "dfa_states", "2qcfa_quantum", "2qcfa_classical", "2pfa_lower_bound"};
        default: return {"n", "1qcfa_quantum", "1qcfa_classical", "1dfa_states"};
    }
}

inline std::vector<std::string> complexity_cells(const ComplexityRow& r) {
    if (r.family == Family::equality) {
        const auto& q = r.entry("1qcfa");
        return {std::to_string(r.parameter), detail::opt_count(q.quantum_states), detail::opt_count(q.classical_states),
                r.entry("1dfa").formula};
    }
    const auto& q = r.entry("2qcfa");
    return {std::to_string(r.parameter), detail::opt_count(r.entry("dfa").classical_states),
            detail::opt_count(q.quantum_states), detail::opt_count(q.classical_states),
            format_number(*r.entry("2pfa_lower_bound").bound)};
}

inline void write_complexity_csv(std::ostream& os, const std::vector<ComplexityRow>& rows) {
    if (rows.empty()) return;
    const auto cols = complexity_columns(rows.front().family);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : rows) {
        const auto cells = complexity_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << detail::csv_field(cells[i]);
        os << '\n';
    }
}

inline Json complexity_json(const std::vector<ComplexityRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json entries = Json::array();
        for (const auto& e : r.entries) {
            Json j{{"model", e.model}, {"constructed", e.constructed}};
            j["quantum_states"] = e.quantum_states ? Json(*e.quantum_states) : Json(nullptr);
            j["classical_states"] = e.classical_states ? Json(*e.classical_states) : Json(nullptr);
            j["bound"] = e.bound ? Json(*e.bound) : Json(nullptr);
            j["formula"] = e.formula;
            entries.push_back(j);
        }
        out.push_back({{"family", family_tag(r.family)}, {"parameter", r.parameter}, {"entries", entries}});
    }
    return {{"rows", out}};
}

inline void write_complexity_human(std::ostream& os, const std::vector<ComplexityRow>& rows) {
    if (rows.empty()) return;
    const auto cols = complexity_columns(rows.front().family);
    std::vector<std::vector<std::string>> table{cols};
    for (const auto& r : rows) table.push_back(complexity_cells(r));
    std::vector<std::size_t> width(cols.size(), 0);
    for (const auto& row : table)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "  " : "") << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size(), ' ');
        }
        os << '\n';
    }
    if (rows.front().family == Family::equality)
        os << "note: 1dfa_states is a lower-bound formula, not an empirical count; " << kEqualityFootnote << '\n';
    else
        os << "note: 2pfa_lower_bound is cbrt(log2(parameter)/b), constant b unspecified in source; "
              "reported as a formula, not validated\n";
}

}  // namespace sqfa
