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

// Machine descriptions for automata with quantum and classical states, and
// the single-step semantics of the two-way model.
//
// Tape layout: cell 0 holds the left end-marker, cells 1..n the input and
// cell n+1 the right end-marker. Tape symbols are small integers: the two
// markers, then the input alphabet in order.

#pragma once

#include "sqfa/dfa.hpp"
#include "sqfa/errors.hpp"
#include "sqfa/gate.hpp"
#include "sqfa/quantum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace sqfa {

using StateId = int;

inline constexpr int kLeftMark = 0;
inline constexpr int kRightMark = 1;

inline int tape_symbol_count(std::string_view alphabet) { return static_cast<int>(alphabet.size()) + 2; }

inline std::string tape_symbol_name(std::string_view alphabet, int sym) {
    if (sym == kLeftMark) return "LEFT_MARK";
    if (sym == kRightMark) return "RIGHT_MARK";
    return std::string(1, alphabet[sym - 2]);
}

/// Encodes `word` as tape cells with both end-markers.
inline std::vector<int> make_tape(std::string_view alphabet, std::string_view word) {
    std::vector<int> cells;
    cells.reserve(word.size() + 2);
    cells.push_back(kLeftMark);
    for (char c : word) {
        auto pos = alphabet.find(c);
        if (pos == std::string_view::npos)
            throw std::invalid_argument(std::string("symbol '") + c + "' is not in the alphabet \"" +
                                        std::string(alphabet) + "\"");
        cells.push_back(static_cast<int>(pos) + 2);
    }
    cells.push_back(kRightMark);
    return cells;
}

struct NamedGate {
    std::string name;
    Gate gate;
    bool operator==(const NamedGate&) const = default;
};

struct NamedMeasurement {
    std::string name;
    ProjectiveMeasurement measurement;
    bool operator==(const NamedMeasurement&) const = default;
};

/// Measure-once one-way QFA: one unitary per input symbol, a final unitary,
/// then a measurement accepting on `accepting` basis states.
struct Moqfa {
    std::string name;
    std::string alphabet;
    std::vector<Gate> symbol_gates;  // parallel to alphabet
    StateVector initial;
    Gate final_gate;
    std::vector<std::size_t> accepting;
    std::map<std::string, std::string> annotations;

    std::size_t quantum_dim() const { return initial.dim(); }
    bool operator==(const Moqfa&) const = default;
};

inline void validate(const Moqfa& m) {
    if (m.alphabet.empty()) throw IllFormedMachine("MO-1QFA alphabet is empty");
    if (m.symbol_gates.size() != m.alphabet.size()) throw IllFormedMachine("MO-1QFA needs one unitary per symbol");
    for (const auto& g : m.symbol_gates)
        if (g.dim() != m.quantum_dim()) throw IllFormedMachine("MO-1QFA unitaries must share the register dimension");
    if (m.final_gate.dim() != m.quantum_dim()) throw IllFormedMachine("MO-1QFA final unitary has the wrong dimension");
    for (std::size_t i : m.accepting)
        if (i >= m.quantum_dim()) throw IllFormedMachine("MO-1QFA accepting index out of range");
}

/// One-way automaton with quantum and classical states. Every step applies
/// the unitary theta(s, sigma) and moves right; after the unitary on the
/// right end-marker the register is measured once and `verdict` maps
/// (state, outcome label) to the final classical state. The run accepts iff
/// that state is accepting.
struct OneWayQcfa {
    std::string name;
    std::size_t quantum_dim = 1;
    std::vector<std::string> states;
    std::string alphabet;
    std::vector<NamedGate> gates;
    std::vector<std::optional<int>> theta;      // gate index, [state * tape_symbols + symbol]
    std::vector<std::optional<StateId>> delta;  // next state, right end-marker excluded
    ProjectiveMeasurement measurement = ProjectiveMeasurement::computational(1);
    std::map<std::pair<StateId, int>, StateId> verdict;
    StateVector initial_quantum = StateVector::basis(1, 0);
    StateId initial_state = 0;
    std::vector<bool> accepting;
    std::vector<bool> rejecting;

    int tape_symbols() const { return tape_symbol_count(alphabet); }
    std::size_t at(StateId s, int sym) const { return static_cast<std::size_t>(s) * tape_symbols() + sym; }
    bool halting(StateId s) const { return accepting[s] || rejecting[s]; }
    std::size_t classical_count() const { return states.size(); }
    bool operator==(const OneWayQcfa&) const = default;
};

inline void validate(const OneWayQcfa& m) {
    const auto n = static_cast<StateId>(m.states.size());
    auto fail = [&](const std::string& why) { throw IllFormedMachine("1QCFA '" + m.name + "': " + why); };
    if (n == 0) fail("no classical states");
    if (m.accepting.size() != m.states.size() || m.rejecting.size() != m.states.size()) fail("halting flags do not match states");
    for (StateId s = 0; s < n; ++s)
        if (m.accepting[s] && m.rejecting[s]) fail("state '" + m.states[s] + "' is both accepting and rejecting");
    if (m.initial_state < 0 || m.initial_state >= n || m.halting(m.initial_state)) fail("bad initial state");
    if (m.initial_quantum.dim() != m.quantum_dim) fail("initial quantum state has the wrong dimension");
    if (m.measurement.dim() != m.quantum_dim) fail("measurement has the wrong dimension");
    for (const auto& g : m.gates)
        if (g.gate.dim() != m.quantum_dim) fail("gate '" + g.name + "' has the wrong dimension");
    const std::size_t cells = m.states.size() * m.tape_symbols();
    if (m.theta.size() != cells || m.delta.size() != cells) fail("transition tables have the wrong size");
    for (StateId s = 0; s < n; ++s) {
        if (m.halting(s)) continue;
        for (int sym = 0; sym < m.tape_symbols(); ++sym) {
            auto where = "(" + m.states[s] + ", " + tape_symbol_name(m.alphabet, sym) + ")";
            const auto& g = m.theta[m.at(s, sym)];
            if (!g || *g < 0 || static_cast<std::size_t>(*g) >= m.gates.size()) fail("theta undefined at " + where);
            if (sym == kRightMark) continue;
            const auto& t = m.delta[m.at(s, sym)];
            if (!t || *t < 0 || *t >= n) fail("delta undefined at " + where);
            if (m.halting(*t)) fail("delta enters a halting state before the right end-marker at " + where);
        }
        for (const auto& o : m.measurement.outcomes()) {
            auto it = m.verdict.find({s, o.label});
            if (it == m.verdict.end()) fail("no verdict for state '" + m.states[s] + "' outcome " + std::to_string(o.label));
            if (it->second < 0 || it->second >= n) fail("verdict for state '" + m.states[s] + "' is out of range");
        }
    }
}

struct QuantumAction {
    enum class Kind { unitary, measurement };
    Kind kind = Kind::unitary;
    int index = 0;  // into gates or measurements
    bool operator==(const QuantumAction&) const = default;
};

struct ClassicalMove {
    StateId next = 0;
    int move = 0;  // -1, 0, +1
    bool operator==(const ClassicalMove&) const = default;
};

/// Hints emitted by the factories for the iteration analysis.
struct LoopAnnotations {
    std::optional<StateId> loop_state;  // entered exactly once per iteration
    std::vector<StateId> walk_states;   // coin-flip random-walk entry states
    bool operator==(const LoopAnnotations&) const = default;
};

/// Two-way automaton with quantum and classical states. theta assigns a
/// unitary or a measurement to each (non-halting state, tape symbol); the two
/// delta tables hold the classical update for each kind of action.
struct TwoWayQcfa {
    std::string name;
    std::size_t quantum_dim = 2;
    std::vector<std::string> states;
    std::string alphabet;
    std::vector<NamedGate> gates;
    std::vector<NamedMeasurement> measurements;
    std::vector<std::optional<QuantumAction>> theta;          // [state * tape_symbols + symbol]
    std::vector<std::optional<ClassicalMove>> delta_unitary;  // same indexing
    std::map<std::tuple<StateId, int, int>, ClassicalMove> delta_measure;  // (state, symbol, label)
    StateVector initial_quantum = StateVector::basis(2, 0);
    StateId initial_state = 0;
    std::vector<bool> accepting;
    std::vector<bool> rejecting;
    LoopAnnotations annotations;

    int tape_symbols() const { return tape_symbol_count(alphabet); }
    std::size_t at(StateId s, int sym) const { return static_cast<std::size_t>(s) * tape_symbols() + sym; }
    bool halting(StateId s) const { return accepting[s] || rejecting[s]; }
    std::size_t classical_count() const { return states.size(); }

    StateId state_id(std::string_view label) const {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == label) return static_cast<StateId>(i);
        throw std::invalid_argument("no classical state named '" + std::string(label) + "'");
    }

    bool operator==(const TwoWayQcfa&) const = default;
};

inline void validate(const TwoWayQcfa& m) {
    const auto n = static_cast<StateId>(m.states.size());
    auto fail = [&](const std::string& why) { throw IllFormedMachine("2QCFA '" + m.name + "': " + why); };
    if (n == 0) fail("no classical states");
    if (m.accepting.size() != m.states.size() || m.rejecting.size() != m.states.size()) fail("halting flags do not match states");
    for (StateId s = 0; s < n; ++s)
        if (m.accepting[s] && m.rejecting[s]) fail("state '" + m.states[s] + "' is both accepting and rejecting");
    if (m.initial_state < 0 || m.initial_state >= n) fail("initial state out of range");
    if (m.initial_quantum.dim() != m.quantum_dim) fail("initial quantum state has the wrong dimension");
    for (const auto& g : m.gates)
        if (g.gate.dim() != m.quantum_dim) fail("gate '" + g.name + "' has the wrong dimension");
    for (const auto& x : m.measurements)
        if (x.measurement.dim() != m.quantum_dim) fail("measurement '" + x.name + "' has the wrong dimension");
    const std::size_t cells = m.states.size() * m.tape_symbols();
    if (m.theta.size() != cells || m.delta_unitary.size() != cells) fail("transition tables have the wrong size");

    auto check_move = [&](const ClassicalMove& mv, int sym, const std::string& where) {
        if (mv.next < 0 || mv.next >= n) fail("delta target out of range at " + where);
        if (mv.move < -1 || mv.move > 1) fail("head move must be -1, 0 or +1 at " + where);
        if (sym == kLeftMark && mv.move < 0) fail("head would leave the tape on the left at " + where);
        if (sym == kRightMark && mv.move > 0) fail("head would leave the tape on the right at " + where);
    };

    std::size_t measure_entries = 0;
    for (StateId s = 0; s < n; ++s) {
        for (int sym = 0; sym < m.tape_symbols(); ++sym) {
            auto where = "(" + m.states[s] + ", " + tape_symbol_name(m.alphabet, sym) + ")";
            const auto& act = m.theta[m.at(s, sym)];
            const auto& du = m.delta_unitary[m.at(s, sym)];
            if (m.halting(s)) {
                if (act || du) fail("halting state has transitions at " + where);
                continue;
            }
            if (!act) fail("theta undefined at " + where);
            if (act->kind == QuantumAction::Kind::unitary) {
                if (act->index < 0 || static_cast<std::size_t>(act->index) >= m.gates.size()) fail("unknown gate at " + where);
                if (!du) fail("delta (unitary branch) undefined at " + where);
                check_move(*du, sym, where);
            } else {
                if (act->index < 0 || static_cast<std::size_t>(act->index) >= m.measurements.size())
                    fail("unknown measurement at " + where);
                if (du) fail("unitary delta given for a measurement at " + where);
                for (const auto& o : m.measurements[act->index].measurement.outcomes()) {
                    auto it = m.delta_measure.find({s, sym, o.label});
                    if (it == m.delta_measure.end())
                        fail("delta (measurement branch) undefined for outcome " + std::to_string(o.label) + " at " + where);
                    check_move(it->second, sym, where);
                    ++measure_entries;
                }
            }
        }
    }
    if (measure_entries != m.delta_measure.size()) fail("delta has measurement entries that theta never uses");
    if (m.annotations.loop_state && (*m.annotations.loop_state < 0 || *m.annotations.loop_state >= n))
        fail("loop state annotation out of range");
    for (StateId w : m.annotations.walk_states)
        if (w < 0 || w >= n) fail("walk state annotation out of range");
}

struct Configuration {
    StateId classical = 0;
    int head = 0;
    StateVector quantum = StateVector::basis(1, 0);
    std::uint64_t steps = 0;
};

struct Halt {
    bool accepted = false;
    std::uint64_t steps = 0;
};

struct StepBranch {
    double probability = 1.0;
    std::optional<int> outcome;  // measurement label, if the step measured
    std::variant<Configuration, Halt> next;
};

inline Configuration initial_configuration(const TwoWayQcfa& m) {
    return Configuration{m.initial_state, 0, m.initial_quantum, 0};
}

namespace detail {

inline std::variant<Configuration, Halt> settle(const TwoWayQcfa& m, const ClassicalMove& mv, int head, StateVector q,
                                                std::uint64_t steps, std::size_t tape_len) {
    if (m.accepting[mv.next]) return Halt{true, steps};
    if (m.rejecting[mv.next]) return Halt{false, steps};
    int h = head + mv.move;
    if (h < 0 || static_cast<std::size_t>(h) >= tape_len)
        throw IllFormedMachine("2QCFA '" + m.name + "': head left the tape");
    return Configuration{mv.next, h, std::move(q), steps};
}

}  // namespace detail

/// Successor distribution of one transition on an encoded tape.
inline std::vector<StepBranch> qcfa_step(const TwoWayQcfa& m, const Configuration& c, std::span<const int> tape) {
    if (c.classical < 0 || static_cast<std::size_t>(c.classical) >= m.states.size())
        throw IllFormedMachine("configuration refers to an unknown classical state");
    if (c.head < 0 || static_cast<std::size_t>(c.head) >= tape.size())
        throw IllFormedMachine("configuration head is off the tape");
    if (m.accepting[c.classical]) return {StepBranch{1.0, std::nullopt, Halt{true, c.steps}}};
    if (m.rejecting[c.classical]) return {StepBranch{1.0, std::nullopt, Halt{false, c.steps}}};

    const int sym = tape[c.head];
    const auto& act = m.theta[m.at(c.classical, sym)];
    auto where = [&] { return "(" + m.states[c.classical] + ", " + tape_symbol_name(m.alphabet, sym) + ")"; };
    if (!act) throw IllFormedMachine("2QCFA '" + m.name + "': theta undefined at " + where());
    const std::uint64_t steps = c.steps + 1;

    if (act->kind == QuantumAction::Kind::unitary) {
        const auto& mv = m.delta_unitary[m.at(c.classical, sym)];
        if (!mv) throw IllFormedMachine("2QCFA '" + m.name + "': delta undefined at " + where());
        StateVector q = m.gates[act->index].gate.op().apply(c.quantum);
        return {StepBranch{1.0, std::nullopt, detail::settle(m, *mv, c.head, std::move(q), steps, tape.size())}};
    }

    std::vector<StepBranch> out;
    for (auto& br : measure(m.measurements[act->index].measurement, c.quantum)) {
        auto it = m.delta_measure.find({c.classical, sym, br.label});
        if (it == m.delta_measure.end())
            throw IllFormedMachine("2QCFA '" + m.name + "': delta undefined for outcome " + std::to_string(br.label) +
                                   " at " + where());
        out.push_back(StepBranch{br.probability, br.label,
                                 detail::settle(m, it->second, c.head, std::move(br.post_state), steps, tape.size())});
    }
    return out;
}

inline std::vector<StepBranch> qcfa_step(const TwoWayQcfa& m, const Configuration& c, std::string_view word) {
    auto tape = make_tape(m.alphabet, word);
    return qcfa_step(m, c, std::span<const int>(tape));
}

using Machine = std::variant<Dfa, Moqfa, OneWayQcfa, TwoWayQcfa>;

inline const std::string& machine_name(const Machine& m) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, m);
}

inline const std::string& machine_alphabet(const Machine& m) {
    return std::visit([](const auto& x) -> const std::string& { return x.alphabet; }, m);
}

inline void validate(const Machine& m) {
    std::visit([](const auto& x) { validate(x); }, m);
}

}  // namespace sqfa
