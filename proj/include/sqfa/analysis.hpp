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

// Exact acceptance probabilities and expected running times.
//
// One-way machines are evaluated by running the register forward and reading
// off the final measurement. Looping two-way machines are split into
// iterations: every measurement branch of one iteration is enumerated until it
// halts or comes back to the loop state, coin-flip random walks are replaced
// by their absorption probabilities, and the iterations are summed as a
// geometric series.

#pragma once

#include "sqfa/constructions.hpp"
#include "sqfa/dfa.hpp"
#include "sqfa/errors.hpp"
#include "sqfa/machine.hpp"
#include "sqfa/rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sqfa {

// ---------------------------------------------------------------------------
// One-way evaluation

struct OneWayResult {
    double p_accept = 0.0;
    double p_reject = 0.0;
};

inline OneWayResult acceptance_oneway(const OneWayQcfa& m, std::string_view w) {
    validate(m);
    auto tape = make_tape(m.alphabet, w);
    StateId s = m.initial_state;
    StateVector q = m.initial_quantum;
    for (int sym : tape) {
        q = m.gates[*m.theta[m.at(s, sym)]].gate.op().apply(q);
        if (sym != kRightMark) s = *m.delta[m.at(s, sym)];
    }
    OneWayResult r;
    for (const auto& br : measure(m.measurement, q)) {
        StateId t = m.verdict.at({s, br.label});
        (m.accepting[t] ? r.p_accept : r.p_reject) += br.probability;
    }
    return r;
}

inline OneWayResult acceptance_oneway(const Moqfa& m, std::string_view w) {
    validate(m);
    StateVector q = m.initial;
    for (char c : w) {
        auto pos = m.alphabet.find(c);
        if (pos == std::string::npos)
            throw std::invalid_argument(std::string("symbol '") + c + "' is not in the alphabet \"" + m.alphabet + "\"");
        q = m.symbol_gates[pos].op().apply(q);
    }
    q = m.final_gate.op().apply(q);
    double acc = 0.0;
    for (std::size_t i : m.accepting) acc += q.probability(i);
    return {acc, q.norm_squared() - acc};
}

// ---------------------------------------------------------------------------
// Random walk

struct WalkResult {
    double p_right = 0.0;         // absorbed at cell n+1 before cell 0
    double expected_steps = 0.0;  // moves until absorption
};

namespace detail {

/// Solves a x_{i-1} + b x_i + c x_{i+1} = d_i, i = 0..k-1 (Thomas algorithm).
inline std::vector<double> solve_tridiagonal(double a, double b, double c, std::vector<double> d) {
    const std::size_t k = d.size();
    std::vector<double> cp(k);
    double denom = b;
    cp[0] = c / denom;
    d[0] /= denom;
    for (std::size_t i = 1; i < k; ++i) {
        denom = b - a * cp[i - 1];
        cp[i] = c / denom;
        d[i] = (d[i] - a * d[i - 1]) / denom;
    }
    for (std::size_t i = k - 1; i-- > 0;) d[i] -= cp[i] * d[i + 1];
    return d;
}

}  // namespace detail

/// Walk on cells 0..n+1 absorbed at both ends, moving right with probability
/// p_heads. Both quantities come from the linear systems of the chain.
inline WalkResult walk_absorption(int n, int start = 1, double p_heads = 0.5) {
    if (n < 0) throw std::invalid_argument("walk_absorption needs n >= 0");
    if (start < 0 || start > n + 1) throw std::invalid_argument("walk start outside cells 0..n+1");
    if (!(p_heads > 0.0 && p_heads < 1.0)) throw std::invalid_argument("walk step probability must lie in (0, 1)");
    if (start == 0 || start == n + 1) return {start == n + 1 ? 1.0 : 0.0, 0.0};
    const double q = 1.0 - p_heads;
    // x_i - p x_{i+1} - q x_{i-1} = 0 with x_0 = 0, x_{n+1} = 1
    std::vector<double> rhs(n, 0.0);
    rhs[n - 1] = p_heads;
    auto x = detail::solve_tridiagonal(-q, 1.0, -p_heads, rhs);
    // T_i - p T_{i+1} - q T_{i-1} = 1 with T_0 = T_{n+1} = 0
    auto t = detail::solve_tridiagonal(-q, 1.0, -p_heads, std::vector<double>(n, 1.0));
    return {x[start - 1], t[start - 1]};
}

// ---------------------------------------------------------------------------
// Iteration analysis

struct IterationOutcome {
    double p_accept = 0.0;
    double p_reject = 0.0;
    double p_continue = 0.0;
    double expected_steps = 0.0;
    // set when every branch probability was computed in rational arithmetic
    std::optional<Rational> exact_accept;
    std::optional<Rational> exact_reject;
    std::optional<Rational> exact_continue;
};

struct IterationOptions {
    std::size_t max_transitions = 20'000'000;
    std::size_t max_live_branches = 100'000;
};

namespace detail {

/// Register of a 2-state machine written as R(pi * angle) S(split) |q0>.
/// Rotations commute, so rotations and one split can be tracked exactly.
struct SymbolicQubit {
    Rational angle{0};
    std::optional<Rational> split;
};

inline std::optional<SymbolicQubit> apply_symbolic(const SymbolicQubit& s, const GateSpec& g) {
    auto e = exact_angle(g);
    if (!e) return std::nullopt;
    SymbolicQubit out = s;
    out.angle += e->angle_pi;
    if (e->split) {
        if (out.split) return std::nullopt;
        out.split = e->split;
    }
    return out;
}

/// Exact probability of reading |q0>, when it is rational.
inline std::optional<Rational> symbolic_p0(const SymbolicQubit& s) {
    if (!s.split) return cos_squared_pi(s.angle);
    Rational twice = s.angle * 2;
    if (twice.denominator() != 1) return std::nullopt;
    return (twice.numerator() % 2 == 0) ? *s.split : 1 - *s.split;
}

inline bool is_qubit_basis_measurement(const ProjectiveMeasurement& pm) {
    if (pm.dim() != 2 || pm.outcomes().size() != 2) return false;
    for (const auto& o : pm.outcomes())
        if (o.indices.size() != 1 || o.indices[0] != static_cast<std::size_t>(o.label)) return false;
    return true;
}

struct Branch {
    Configuration c;
    double prob = 1.0;
    std::optional<Rational> exact_prob;
    std::optional<SymbolicQubit> symbolic;
};

struct Gadget {
    double p_right = 0.5;
    double steps_right = 0.0;
    double steps_left = 0.0;
};

/// Checks that, from walk state `w` at every inner cell, the machine returns
/// to `w` one cell to the right or left with a fixed probability and step
/// cost, with the register back on the ray of `q`.
inline std::optional<Gadget> analyze_gadget(const TwoWayQcfa& m, std::span<const int> tape, StateId w, const StateVector& q) {
    const int n = static_cast<int>(tape.size()) - 2;
    std::optional<Gadget> found;
    for (int h = 1; h <= n; ++h) {
        struct Item {
            Configuration c;
            double prob;
        };
        std::vector<Item> live{{Configuration{w, h, q, 0}, 1.0}};
        double p_right = 0.0, p_left = 0.0;
        std::optional<std::uint64_t> s_right, s_left;
        while (!live.empty()) {
            Item it = std::move(live.back());
            live.pop_back();
            if (it.c.steps > 64) return std::nullopt;
            for (auto& br : qcfa_step(m, it.c, tape)) {
                auto* next = std::get_if<Configuration>(&br.next);
                if (!next) return std::nullopt;
                double p = it.prob * br.probability;
                if (next->classical != w) {
                    live.push_back({std::move(*next), p});
                    continue;
                }
                if (!same_ray(next->quantum, q)) return std::nullopt;
                auto& side_steps = next->head == h + 1 ? s_right : s_left;
                if (next->head != h + 1 && next->head != h - 1) return std::nullopt;
                if (side_steps && *side_steps != next->steps) return std::nullopt;
                side_steps = next->steps;
                (next->head == h + 1 ? p_right : p_left) += p;
            }
        }
        if (!s_right || !s_left || std::fabs(p_right + p_left - 1.0) > kTolNorm) return std::nullopt;
        Gadget g{p_right, static_cast<double>(*s_right), static_cast<double>(*s_left)};
        if (found && (std::fabs(found->p_right - g.p_right) > kTolNorm || found->steps_right != g.steps_right ||
                      found->steps_left != g.steps_left))
            return std::nullopt;
        found = g;
    }
    return found;
}

}  // namespace detail

/// One iteration of a looping machine, from the initial configuration until
/// every branch halts or re-enters the annotated loop state. Branches that
/// re-enter it must do so in the initial configuration (same head, register on
/// the same ray), so that iterations are independent and identically
/// distributed. Machines without a loop annotation are explored until they
/// halt.
inline IterationOutcome iteration_analysis(const TwoWayQcfa& m, std::string_view w, IterationOptions opt = {}) {
    validate(m);
    const auto tape = make_tape(m.alphabet, w);
    const std::span<const int> tv(tape);
    const int n = static_cast<int>(w.size());
    const Configuration init = initial_configuration(m);
    const auto loop = m.annotations.loop_state;
    auto is_walk = [&](StateId s) {
        return std::find(m.annotations.walk_states.begin(), m.annotations.walk_states.end(), s) !=
               m.annotations.walk_states.end();
    };

    IterationOutcome out;
    Rational ex_acc{0}, ex_rej{0}, ex_cont{0};
    bool exact = true;
    auto settle_exact = [&](const detail::Branch& b, Rational& slot) {
        if (b.exact_prob) slot += *b.exact_prob;
        else exact = false;
    };

    std::vector<detail::Branch> live;
    {
        detail::Branch b{init, 1.0, Rational(1), std::nullopt};
        if (m.quantum_dim == 2 && init.quantum == StateVector::basis(2, 0)) b.symbolic = detail::SymbolicQubit{};
        live.push_back(std::move(b));
    }
    std::size_t transitions = 0;

    while (!live.empty()) {
        detail::Branch b = std::move(live.back());
        live.pop_back();
        const Configuration& c = b.c;

        if (loop && c.classical == *loop && c.steps > 0) {
            if (c.head != init.head || !same_ray(c.quantum, init.quantum))
                throw UnsupportedMachine("machine '" + m.name +
                                         "' re-enters its loop state in a configuration other than the initial one");
            out.p_continue += b.prob;
            settle_exact(b, ex_cont);
            continue;
        }

        if (is_walk(c.classical) && c.head >= 1 && c.head <= n) {
            auto g = detail::analyze_gadget(m, tv, c.classical, c.quantum);
            if (!g)
                throw UnsupportedMachine("walk state '" + m.states[c.classical] + "' of '" + m.name +
                                         "' is not a coin-flip walk");
            WalkResult wr = walk_absorption(n, c.head, g->p_right);
            double total = wr.expected_steps;
            double rights = (total + wr.p_right * (n + 1) - c.head) / 2.0;
            out.expected_steps += b.prob * (rights * g->steps_right + (total - rights) * g->steps_left);
            for (int side = 0; side < 2; ++side) {
                double p = side ? wr.p_right : 1.0 - wr.p_right;
                if (p < kTolPrune) continue;
                detail::Branch nb{Configuration{c.classical, side ? n + 1 : 0, c.quantum, c.steps + 1}, b.prob * p,
                                  std::nullopt, b.symbolic};
                live.push_back(std::move(nb));
            }
            continue;
        }

        if (++transitions > opt.max_transitions)
            throw UnsupportedMachine("iteration of '" + m.name + "' exceeds the exploration budget");
        out.expected_steps += b.prob;

        const int sym = tape[c.head];
        const auto& act = *m.theta[m.at(c.classical, sym)];
        auto branches = qcfa_step(m, c, tv);
        for (auto& br : branches) {
            detail::Branch nb;
            nb.prob = b.prob * br.probability;
            // symbolic overlay
            if (act.kind == QuantumAction::Kind::unitary) {
                if (b.symbolic) nb.symbolic = detail::apply_symbolic(*b.symbolic, m.gates[act.index].gate.spec());
                nb.exact_prob = b.exact_prob;
            } else if (b.symbolic && detail::is_qubit_basis_measurement(m.measurements[act.index].measurement)) {
                auto p0 = detail::symbolic_p0(*b.symbolic);
                if (p0 && b.exact_prob) nb.exact_prob = *b.exact_prob * (*br.outcome == 0 ? *p0 : 1 - *p0);
                nb.symbolic = detail::SymbolicQubit{*br.outcome == 0 ? Rational(0) : Rational(1, 2), std::nullopt};
            }
            if (auto* h = std::get_if<Halt>(&br.next)) {
                (h->accepted ? out.p_accept : out.p_reject) += nb.prob;
                settle_exact(nb, h->accepted ? ex_acc : ex_rej);
                continue;
            }
            nb.c = std::move(std::get<Configuration>(br.next));
            live.push_back(std::move(nb));
        }
        if (live.size() > opt.max_live_branches)
            throw UnsupportedMachine("iteration of '" + m.name + "' branches beyond the exploration budget");
    }

    if (exact) {
        out.exact_accept = ex_acc;
        out.exact_reject = ex_rej;
        out.exact_continue = ex_cont;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Geometric series over iterations

struct LoopTotals {
    double p_accept = 0.0;
    double p_reject = 0.0;
    double expected_iterations = 0.0;
    std::optional<Rational> exact_accept;
    std::optional<Rational> exact_reject;
    std::optional<Rational> exact_iterations;
};

/// Staged form: an iteration rejects with probability P_r; otherwise it
/// accepts with probability P_a; otherwise it repeats. Halting probability per
/// iteration is D = P_a + P_r - P_a P_r.
inline LoopTotals loop_total(double p_a, double p_r) {
    if (!(p_a >= 0 && p_a <= 1 && p_r >= 0 && p_r <= 1)) throw std::invalid_argument("probabilities must lie in [0, 1]");
    double d = p_a + p_r - p_a * p_r;
    if (d <= 0.0) throw NonterminationDetected("iteration never halts (P_a = P_r = 0)");
    double acc = p_a * (1.0 - p_r) / d;
    double rej = p_r / d;
    double s = acc + rej;
    return {acc / s, rej / s, 1.0 / d, std::nullopt, std::nullopt, std::nullopt};
}

inline LoopTotals loop_total(const Rational& p_a, const Rational& p_r) {
    if (p_a < 0 || p_a > 1 || p_r < 0 || p_r > 1) throw std::invalid_argument("probabilities must lie in [0, 1]");
    Rational d = p_a + p_r - p_a * p_r;
    if (d == 0) throw NonterminationDetected("iteration never halts (P_a = P_r = 0)");
    Rational acc = p_a * (1 - p_r) / d, rej = p_r / d, it = 1 / d;
    return {to_double(acc), to_double(rej), to_double(it), acc, rej, it};
}

/// Totals for an iteration given by its unconditional accept and reject
/// probabilities: P_r = reject and P_a = accept / (1 - reject), the
/// acceptance chance of an iteration that was not rejected.
inline LoopTotals loop_total(const IterationOutcome& o) {
    if (o.exact_accept && o.exact_reject) {
        const Rational& a = *o.exact_accept;
        const Rational& r = *o.exact_reject;
        if (r == 1) return loop_total(Rational(0), Rational(1));
        return loop_total(a / (1 - r), r);
    }
    if (o.p_accept + o.p_reject <= 0.0) throw NonterminationDetected("iteration never halts (P_a = P_r = 0)");
    if (o.p_reject >= 1.0) return loop_total(0.0, 1.0);
    return loop_total(std::min(1.0, o.p_accept / (1.0 - o.p_reject)), o.p_reject);
}

// ---------------------------------------------------------------------------
// Dispatch over machine kinds

struct AcceptanceResult {
    double p_accept = 0.0;
    double p_reject = 0.0;
    double expected_steps = 0.0;
    std::optional<Rational> exact_accept;
    std::optional<Rational> exact_reject;
    std::optional<Rational> exact_steps;
};

inline AcceptanceResult acceptance(const Dfa& d, std::string_view w) {
    bool a = dfa_run(d, w);
    auto n = static_cast<std::int64_t>(w.size());
    return {a ? 1.0 : 0.0, a ? 0.0 : 1.0, static_cast<double>(n), Rational(a ? 1 : 0), Rational(a ? 0 : 1), Rational(n)};
}

/// One step per tape cell including both end-markers.
inline AcceptanceResult acceptance(const OneWayQcfa& m, std::string_view w) {
    auto r = acceptance_oneway(m, w);
    return {r.p_accept, r.p_reject, static_cast<double>(w.size() + 2), std::nullopt, std::nullopt,
            Rational(static_cast<std::int64_t>(w.size() + 2))};
}

/// One step per input symbol.
inline AcceptanceResult acceptance(const Moqfa& m, std::string_view w) {
    auto r = acceptance_oneway(m, w);
    return {r.p_accept, r.p_reject, static_cast<double>(w.size()), std::nullopt, std::nullopt,
            Rational(static_cast<std::int64_t>(w.size()))};
}

/// Expected steps = expected iterations * expected steps per iteration (the
/// iterations are i.i.d., so Wald's identity applies).
inline AcceptanceResult acceptance(const TwoWayQcfa& m, std::string_view w) {
    auto it = iteration_analysis(m, w);
    auto lt = loop_total(it);
    AcceptanceResult r{lt.p_accept, lt.p_reject, lt.expected_iterations * it.expected_steps, lt.exact_accept,
                       lt.exact_reject, std::nullopt};
    return r;
}

inline AcceptanceResult acceptance(const Machine& m, std::string_view w) {
    return std::visit([&](const auto& x) { return acceptance(x, w); }, m);
}

// ---------------------------------------------------------------------------
// Mode verification

struct AcceptanceMode {
    enum class Kind { one_sided, error_prob, cut_point, exact };
    Kind kind = Kind::one_sided;
    double eps = 0.0;
    double lambda = 0.0;
    double gap = 0.0;

    static AcceptanceMode one_sided(double eps) {
        if (!(eps > 0 && eps <= 0.5)) throw std::invalid_argument("one-sided error needs 0 < eps <= 1/2");
        return {Kind::one_sided, eps, 0, 0};
    }
    static AcceptanceMode error_prob(double eps) {
        if (!(eps > 0 && eps < 0.5)) throw std::invalid_argument("error probability needs 0 < eps < 1/2");
        return {Kind::error_prob, eps, 0, 0};
    }
    static AcceptanceMode cut_point(double lambda, double gap) {
        if (!(lambda > 0 && lambda < 1) || !(gap > 0)) throw std::invalid_argument("cut point needs 0 < lambda < 1 and gap > 0");
        return {Kind::cut_point, 0, lambda, gap};
    }
    static AcceptanceMode exact() { return {Kind::exact, 0, 0, 0}; }
};

inline std::string to_string(const AcceptanceMode& m) {
    switch (m.kind) {
        case AcceptanceMode::Kind::one_sided: return "one-sided(" + std::to_string(m.eps) + ")";
        case AcceptanceMode::Kind::error_prob: return "error-prob(" + std::to_string(m.eps) + ")";
        case AcceptanceMode::Kind::cut_point:
            return "cut-point(" + std::to_string(m.lambda) + ", " + std::to_string(m.gap) + ")";
        default: return "exact";
    }
}

struct VerificationRow {
    std::string word;
    double p_accept = 0.0;
    double p_reject = 0.0;
    double expected_steps = 0.0;
    std::optional<Rational> exact_accept;
    std::optional<Rational> exact_reject;
    Membership classification = Membership::outside;
    double margin = 0.0;  // slack of the mode inequality; negative means violated
    bool pass = true;
};

struct VerificationReport {
    std::string machine;
    AcceptanceMode mode;
    std::vector<VerificationRow> rows;
    double min_margin = std::numeric_limits<double>::infinity();
    double max_steps = 0.0;
    bool pass = true;

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& r : rows)
            if (!r.pass) out.push_back(r.word);
        return out;
    }
};

using Classifier = std::function<Membership(std::string_view)>;

/// Margin of the mode inequality for one word; outside-promise words have no
/// constraint and report +inf.
inline double mode_margin(const AcceptanceMode& mode, Membership c, double p_acc, double p_rej) {
    if (c == Membership::outside) return std::numeric_limits<double>::infinity();
    const bool yes = c == Membership::yes;
    switch (mode.kind) {
        case AcceptanceMode::Kind::one_sided:
            return yes ? p_acc - (1.0 - kTolNorm) : p_rej - (1.0 - mode.eps - kTolNorm);
        case AcceptanceMode::Kind::error_prob:
            return yes ? p_acc - (1.0 - mode.eps) : p_rej - (1.0 - mode.eps);
        case AcceptanceMode::Kind::cut_point:
            return yes ? p_acc - (mode.lambda + mode.gap) : (mode.lambda - mode.gap) - p_acc;
        default:
            return yes ? p_acc - (1.0 - kTolNorm) : p_rej - (1.0 - kTolNorm);
    }
}

/// Rows come out in the order of `words`, which callers keep sorted.
inline VerificationReport verify_mode(const Machine& m, const AcceptanceMode& mode, const Classifier& classify,
                                      const std::vector<std::string>& words) {
    VerificationReport rep{machine_name(m), mode, {}, std::numeric_limits<double>::infinity(), 0.0, true};
    for (const auto& w : words) {
        auto a = acceptance(m, w);
        VerificationRow row;
        row.word = w;
        row.p_accept = a.p_accept;
        row.p_reject = a.p_reject;
        row.expected_steps = a.expected_steps;
        row.exact_accept = a.exact_accept;
        row.exact_reject = a.exact_reject;
        row.classification = classify(w);
        row.margin = mode_margin(mode, row.classification, a.p_accept, a.p_reject);
        row.pass = row.margin >= 0.0;
        rep.pass = rep.pass && row.pass;
        if (row.classification != Membership::outside) rep.min_margin = std::min(rep.min_margin, row.margin);
        rep.max_steps = std::max(rep.max_steps, a.expected_steps);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// State-complexity table

enum class Family { mod_p, exact_length, equality };

inline const char* family_tag(Family f) {
    switch (f) {
        case Family::mod_p: return "L";
        case Family::exact_length: return "C";
        default: return "EQ";
    }
}

struct ComplexityEntry {
    std::string model;
    std::optional<long long> quantum_states;
    std::optional<long long> classical_states;
    std::optional<double> bound;  // evaluated formula
    std::string formula;          // for rows without a number, or to explain one
    bool constructed = true;
};

struct ComplexityRow {
    Family family = Family::mod_p;
    int parameter = 0;
    std::vector<ComplexityEntry> entries;

    const ComplexityEntry& entry(std::string_view model) const {
        for (const auto& e : entries)
            if (e.model == model) return e;
        throw std::out_of_range("no entry for model " + std::string(model));
    }
};

struct ComplexityOptions {
    double b = 1.0;        // constant of the two-way probabilistic lower bound
    Rational eps{1, 4};    // error used to build the quantum machines
};

/// Lower bound on the states of a two-way probabilistic automaton for L(p)
/// or C(m): cube root of log2(parameter) / b.
inline double two_way_pfa_bound(int parameter, double b) {
    if (!(b > 0)) throw std::invalid_argument("the constant b must be positive");
    return std::cbrt(std::log2(static_cast<double>(parameter)) / b);
}

inline const char* kEqualityFootnote =
    "the construction uses n quantum basis states; a 2n figure quoted elsewhere for the same machine is not reproduced";

inline ComplexityRow complexity_row(Family f, int parameter, const ComplexityOptions& opt = {}) {
    ComplexityRow row{f, parameter, {}};
    switch (f) {
        case Family::mod_p: {
            auto q = mod_2qcfa(parameter, opt.eps);
            row.entries.push_back({"2qcfa", static_cast<long long>(q.quantum_dim),
                                   static_cast<long long>(q.classical_count()), std::nullopt, "", true});
            row.entries.push_back({"dfa", std::nullopt, static_cast<long long>(dfa_minimize(dfa_mod(parameter)).size()),
                                   std::nullopt, "minimized", true});
            row.entries.push_back({"2pfa_lower_bound", std::nullopt, std::nullopt, two_way_pfa_bound(parameter, opt.b),
                                   "cbrt(log2(p)/b), constant b unspecified in source", false});
            break;
        }
        case Family::exact_length: {
            auto q = len_2qcfa(parameter, opt.eps);
            row.entries.push_back({"2qcfa", static_cast<long long>(q.quantum_dim),
                                   static_cast<long long>(q.classical_count()), std::nullopt, "", true});
            row.entries.push_back({"dfa", std::nullopt, static_cast<long long>(dfa_minimize(dfa_len(parameter)).size()),
                                   std::nullopt, "minimized", true});
            row.entries.push_back({"2pfa_lower_bound", std::nullopt, std::nullopt, two_way_pfa_bound(parameter, opt.b),
                                   "cbrt(log2(m)/b), constant b unspecified in source", false});
            break;
        }
        case Family::equality: {
            auto q = eq_1qcfa(parameter);
            row.entries.push_back({"1qcfa", static_cast<long long>(q.quantum_dim),
                                   static_cast<long long>(q.classical_count()), std::nullopt, kEqualityFootnote, true});
            row.entries.push_back({"1dfa", std::nullopt, std::nullopt, std::nullopt, "2^Omega(n)", false});
            break;
        }
    }
    return row;
}

inline std::vector<ComplexityRow> complexity_report(Family f, int from, int to, const ComplexityOptions& opt = {}) {
    if (from > to) throw std::invalid_argument("empty parameter range");
    std::vector<ComplexityRow> rows;
    for (int k = from; k <= to; ++k) rows.push_back(complexity_row(f, k, opt));
    return rows;
}

}  // namespace sqfa
