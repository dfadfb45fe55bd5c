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

// Factories for the concrete machines: classical baselines for the unary
// mod-p language and the exact-length language, the exact one-way machine for
// promised string equality, the looping two-way machines for both regular
// families, a certified measure-once machine for mod-p, and the product and
// trade-off constructions for one-way machines.

#pragma once

#include "sqfa/dfa.hpp"
#include "sqfa/errors.hpp"
#include "sqfa/gate.hpp"
#include "sqfa/machine.hpp"
#include "sqfa/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace sqfa {

// ---------------------------------------------------------------------------
// Classical baselines

/// p-state cycle over {a}; accepts a^k iff p divides k.
inline Dfa dfa_mod(int p) {
    if (p < 1) throw std::invalid_argument("dfa_mod needs p >= 1");
    Dfa d;
    d.name = "dfa_mod(" + std::to_string(p) + ")";
    d.alphabet = "a";
    for (int r = 0; r < p; ++r) {
        d.states.push_back("r" + std::to_string(r));
        d.accepting.push_back(r == 0);
        d.transition.push_back((r + 1) % p);
    }
    return d;
}

/// Counter 0..m plus a dead state; accepts exactly the words of length m.
inline Dfa dfa_len(int m, std::string alphabet = "ab") {
    if (m < 1) throw std::invalid_argument("dfa_len needs m >= 1");
    if (alphabet.empty()) throw std::invalid_argument("dfa_len needs a nonempty alphabet");
    Dfa d;
    d.name = "dfa_len(" + std::to_string(m) + ")";
    d.alphabet = std::move(alphabet);
    const int dead = m + 1;
    for (int c = 0; c <= m + 1; ++c) {
        d.states.push_back(c == dead ? "dead" : "c" + std::to_string(c));
        d.accepting.push_back(c == m);
        for (std::size_t s = 0; s < d.alphabet.size(); ++s) d.transition.push_back(c >= m ? dead : c + 1);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

class TwoWayBuilder {
  public:
    TwoWayBuilder(std::string name, std::string alphabet, std::size_t dim) {
        m_.name = std::move(name);
        m_.alphabet = std::move(alphabet);
        m_.quantum_dim = dim;
        m_.initial_quantum = StateVector::basis(dim, 0);
    }

    StateId state(std::string name, bool accepting = false, bool rejecting = false) {
        m_.states.push_back(std::move(name));
        m_.accepting.push_back(accepting);
        m_.rejecting.push_back(rejecting);
        return static_cast<StateId>(m_.states.size() - 1);
    }

    int gate(std::string name, Gate g) {
        m_.gates.push_back({std::move(name), std::move(g)});
        return static_cast<int>(m_.gates.size() - 1);
    }

    int measurement(std::string name, ProjectiveMeasurement pm) {
        m_.measurements.push_back({std::move(name), std::move(pm)});
        return static_cast<int>(m_.measurements.size() - 1);
    }

    void unitary(StateId s, int sym, int g, StateId next, int move) {
        grow();
        m_.theta[m_.at(s, sym)] = QuantumAction{QuantumAction::Kind::unitary, g};
        m_.delta_unitary[m_.at(s, sym)] = ClassicalMove{next, move};
    }

    /// The same unitary move on every input symbol (not the end-markers).
    void unitary_inner(StateId s, int g, StateId next, int move) {
        for (int sym = 2; sym < m_.tape_symbols(); ++sym) unitary(s, sym, g, next, move);
    }

    void measure(StateId s, int sym, int meas, std::vector<std::pair<int, ClassicalMove>> branches) {
        grow();
        m_.theta[m_.at(s, sym)] = QuantumAction{QuantumAction::Kind::measurement, meas};
        m_.delta_unitary[m_.at(s, sym)].reset();
        for (auto& [label, mv] : branches) m_.delta_measure[{s, sym, label}] = mv;
    }

    void measure_inner(StateId s, int meas, const std::vector<std::pair<int, ClassicalMove>>& branches) {
        for (int sym = 2; sym < m_.tape_symbols(); ++sym) measure(s, sym, meas, branches);
    }

    /// Entries never reached from the initial configuration: identity, stay,
    /// reject. Keeps theta total as the model requires.
    TwoWayQcfa finish(int identity_gate, StateId reject) {
        grow();
        for (StateId s = 0; s < static_cast<StateId>(m_.states.size()); ++s) {
            if (m_.halting(s)) continue;
            for (int sym = 0; sym < m_.tape_symbols(); ++sym)
                if (!m_.theta[m_.at(s, sym)]) unitary(s, sym, identity_gate, reject, 0);
        }
        validate(m_);
        return std::move(m_);
    }

    TwoWayQcfa& machine() { return m_; }

  private:
    void grow() {
        std::size_t cells = m_.states.size() * m_.tape_symbols();
        if (m_.theta.size() < cells) {
            // re-index: tables are row-major by state, so appending states only appends rows
            m_.theta.resize(cells);
            m_.delta_unitary.resize(cells);
        }
    }

    TwoWayQcfa m_;
};

inline Rational checked_eps(const Rational& eps, const Rational& hi, const char* who) {
    if (eps <= 0 || eps > hi)
        throw std::invalid_argument(std::string(who) + ": eps must lie in (0, " + to_string(hi) + "]");
    return eps;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Two-way machines

/// Looping machine for L(p) with two basis states. Each iteration rotates by
/// pi/p per 'a', rejects on |q1> at the right end-marker, otherwise splits off
/// an accepting amplitude of weight 4 eps / p^2, and on failure resets to |q0>
/// and rewinds.
inline TwoWayQcfa mod_2qcfa(int p, Rational eps) {
    if (p < 1) throw std::invalid_argument("mod_2qcfa needs p >= 1");
    detail::checked_eps(eps, Rational(1, 2), "mod_2qcfa");
    Rational weight = 4 * eps / Rational(static_cast<std::int64_t>(p) * p);
    if (weight > 1) weight = 1;  // only p = 1

    detail::TwoWayBuilder b("mod_2qcfa(" + std::to_string(p) + ", " + to_string(eps) + ")", "a", 2);
    const int sym_a = 2;
    StateId start = b.state("start");
    StateId scan = b.state("scan");
    StateId amplify = b.state("amplify");
    StateId check = b.state("check");
    StateId reset = b.state("reset");
    StateId rewind = b.state("rewind");
    StateId accept = b.state("accept", true, false);
    StateId reject = b.state("reject", false, true);

    int id = b.gate("I", identity_gate(2));
    int u_p = b.gate("U_p", rotation_gate(Rational(1, p)));
    int u_pe = b.gate("U_p_eps", split_gate(weight));
    int u_r = b.gate("U_reset", rotation_gate(Rational(-1, 2)));
    int meas = b.measurement("M", ProjectiveMeasurement::computational(2));

    b.unitary(start, kLeftMark, id, scan, +1);
    b.unitary(scan, sym_a, u_p, scan, +1);
    b.measure(scan, kRightMark, meas, {{0, {amplify, 0}}, {1, {reject, 0}}});
    b.unitary(amplify, kRightMark, u_pe, check, 0);
    b.measure(check, kRightMark, meas, {{0, {accept, 0}}, {1, {reset, 0}}});
    b.unitary(reset, kRightMark, u_r, rewind, -1);
    b.unitary(rewind, sym_a, id, rewind, -1);
    b.unitary(rewind, kLeftMark, id, start, 0);

    b.machine().annotations.loop_state = start;
    return b.finish(id, reject);
}

inline TwoWayQcfa mod_2qcfa(int p, double eps) { return mod_2qcfa(p, rational_from_double(eps)); }

/// Looping machine for C(m) with two basis states. The register is rotated
/// by -sqrt(2) m pi on the left end-marker and by sqrt(2) pi per symbol; after
/// a |q0> outcome two random walks from cell 1 are run with a coin-flip gadget
/// on the same register, and only if both reach the right end-marker is an
/// accepting amplitude of weight eps / (2 m^2) split off.
inline TwoWayQcfa len_2qcfa(int m, Rational eps, std::string alphabet = "ab") {
    if (m < 1) throw std::invalid_argument("len_2qcfa needs m >= 1");
    if (alphabet.empty()) throw std::invalid_argument("len_2qcfa needs a nonempty alphabet");
    detail::checked_eps(eps, Rational(1, 2), "len_2qcfa");
    Rational weight = eps / Rational(2LL * m * m);

    detail::TwoWayBuilder b("len_2qcfa(" + std::to_string(m) + ", " + to_string(eps) + ")", alphabet, 2);
    StateId start = b.state("start");
    StateId scan = b.state("scan");
    StateId w1_home = b.state("walk1_home");
    StateId w1_flip = b.state("walk1_flip");
    StateId w1_toss = b.state("walk1_toss");
    StateId w1_fix = b.state("walk1_fix");
    StateId w2_home = b.state("walk2_home");
    StateId w2_flip = b.state("walk2_flip");
    StateId w2_toss = b.state("walk2_toss");
    StateId w2_fix = b.state("walk2_fix");
    StateId w2f_flip = b.state("walk2_lost_flip");
    StateId w2f_toss = b.state("walk2_lost_toss");
    StateId w2f_fix = b.state("walk2_lost_fix");
    StateId amplify = b.state("amplify");
    StateId check = b.state("check");
    StateId reset = b.state("reset");
    StateId rewind = b.state("rewind");
    StateId accept = b.state("accept", true, false);
    StateId reject = b.state("reject", false, true);

    const double root2 = std::sqrt(2.0);
    int id = b.gate("I", identity_gate(2));
    int u_c = b.gate("U_left", rotation_gate_irrational(-root2 * m));
    int u_a = b.gate("U_alpha", rotation_gate_irrational(root2));
    int coin = b.gate("U_coin", rotation_gate(Rational(1, 4)));
    int u_r = b.gate("U_reset", rotation_gate(Rational(-1, 2)));
    int u_me = b.gate("U_m_eps", split_gate(weight));
    int meas = b.measurement("M", ProjectiveMeasurement::computational(2));

    b.unitary(start, kLeftMark, u_c, scan, +1);
    b.unitary_inner(scan, u_a, scan, +1);
    b.measure(scan, kRightMark, meas, {{0, {w1_home, -1}}, {1, {reject, 0}}});

    b.unitary_inner(w1_home, id, w1_home, -1);
    b.unitary(w1_home, kLeftMark, id, w1_flip, +1);
    b.unitary_inner(w2_home, id, w2_home, -1);
    b.unitary(w2_home, kLeftMark, id, w2_flip, +1);

    // one coin-flip walk: heads moves right, tails moves left and restores |q0>
    auto walk = [&](StateId flip, StateId toss, StateId fix) {
        b.unitary_inner(flip, coin, toss, 0);
        b.measure_inner(toss, meas, {{0, {flip, +1}}, {1, {fix, -1}}});
        b.unitary_inner(fix, u_r, flip, 0);
        b.unitary(fix, kLeftMark, u_r, flip, 0);
    };
    walk(w1_flip, w1_toss, w1_fix);
    walk(w2_flip, w2_toss, w2_fix);
    walk(w2f_flip, w2f_toss, w2f_fix);

    b.unitary(w1_flip, kLeftMark, id, w2f_flip, +1);
    b.unitary(w1_flip, kRightMark, id, w2_home, -1);
    b.unitary(w2_flip, kLeftMark, id, rewind, 0);
    b.unitary(w2_flip, kRightMark, id, amplify, 0);
    b.unitary(w2f_flip, kLeftMark, id, rewind, 0);
    b.unitary(w2f_flip, kRightMark, id, rewind, -1);

    b.unitary(amplify, kRightMark, u_me, check, 0);
    b.measure(check, kRightMark, meas, {{0, {accept, 0}}, {1, {reset, 0}}});
    b.unitary(reset, kRightMark, u_r, rewind, -1);
    b.unitary_inner(rewind, id, rewind, -1);
    b.unitary(rewind, kRightMark, id, rewind, -1);
    b.unitary(rewind, kLeftMark, id, start, 0);

    b.machine().annotations.loop_state = start;
    b.machine().annotations.walk_states = {w1_flip, w2_flip, w2f_flip};
    return b.finish(id, reject);
}

inline TwoWayQcfa len_2qcfa(int m, double eps, std::string alphabet = "ab") {
    return len_2qcfa(m, rational_from_double(eps), std::move(alphabet));
}

// ---------------------------------------------------------------------------
// Exact one-way machine for promised equality

/// Encodes x#y over {0, 1, #}.
inline std::string promise_word(std::string_view x, std::string_view y) {
    return std::string(x) + "#" + std::string(y);
}

namespace detail {

/// x#y for every pair of n-bit strings accepted by `keep(hamming distance)`,
/// in lexicographic order.
template <class Keep>
std::vector<std::string> equality_words(int n, Keep keep) {
    if (n < 1 || n > 12) throw std::invalid_argument("equality word enumeration needs 1 <= n <= 12");
    auto bits = [n](std::uint32_t v) {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if (v >> (n - 1 - i) & 1u) s[static_cast<std::size_t>(i)] = '1';
        return s;
    };
    std::vector<std::string> out;
    const std::uint32_t size = 1u << n;
    for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = 0; y < size; ++y)
            if (keep(std::popcount(x ^ y))) out.push_back(promise_word(bits(x), bits(y)));
    return out;
}

}  // namespace detail

/// Every yes-instance x#x and every no-instance at Hamming distance n/2
/// (none for odd n), sorted.
inline std::vector<std::string> promise_instances(int n) {
    return detail::equality_words(n, [n](int h) { return h == 0 || 2 * h == n; });
}

/// All 4^n words x#y, promise or not, sorted.
inline std::vector<std::string> all_equality_pairs(int n) {
    return detail::equality_words(n, [](int) { return true; });
}

/// n basis states; classical states s0, s1..s_{n+1} (position counters reused
/// for both halves), a dead state for malformed words, accept and reject.
inline OneWayQcfa eq_1qcfa(int n) {
    if (n < 1) throw std::invalid_argument("eq_1qcfa needs n >= 1");
    const auto dim = static_cast<std::size_t>(n);
    OneWayQcfa m;
    m.name = "eq_1qcfa(" + std::to_string(n) + ")";
    m.quantum_dim = dim;
    m.alphabet = "01#";
    m.states.push_back("s0");
    for (int i = 1; i <= n + 1; ++i) m.states.push_back("s" + std::to_string(i));
    const StateId dead = static_cast<StateId>(m.states.size());
    m.states.push_back("dead");
    const StateId accept = dead + 1, reject = dead + 2;
    m.states.push_back("accept");
    m.states.push_back("reject");
    m.accepting.assign(m.states.size(), false);
    m.rejecting.assign(m.states.size(), false);
    m.accepting[accept] = true;
    m.rejecting[reject] = true;

    std::vector<Amplitude> uniform(dim, 1.0 / std::sqrt(static_cast<double>(n)));
    m.gates.push_back({"I", identity_gate(dim)});
    m.gates.push_back({"U_s", Gate({HouseholderGate{uniform, false}})});
    m.gates.push_back({"U_f", Gate({HouseholderGate{uniform, true}})});
    const int g_id = 0, g_s = 1, g_f = 2;
    // U_{i,1} flips the sign of basis state i; U_{i,0} is the identity
    std::vector<int> flip(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        flip[i] = static_cast<int>(m.gates.size());
        m.gates.push_back({"U_" + std::to_string(i + 1) + "_1", Gate({PhaseFlipGate{dim, i}})});
    }

    const int ts = m.tape_symbols();
    const int sym0 = 2, sym1 = 3, hash = 4;
    m.theta.assign(m.states.size() * ts, std::nullopt);
    m.delta.assign(m.states.size() * ts, std::nullopt);
    auto set = [&](StateId s, int sym, int g, std::optional<StateId> next) {
        m.theta[m.at(s, sym)] = g;
        if (sym != kRightMark) m.delta[m.at(s, sym)] = next;
    };
    const StateId s_last = n + 1;
    for (StateId s = 0; s <= n + 1; ++s)
        for (int sym = 0; sym < ts; ++sym) set(s, sym, g_id, dead);
    set(0, kLeftMark, g_s, 1);
    for (StateId i = 1; i <= n; ++i) {
        set(i, sym0, g_id, i + 1);
        set(i, sym1, flip[i - 1], i + 1);
    }
    set(s_last, hash, g_id, 1);
    set(s_last, kRightMark, g_f, std::nullopt);
    for (int sym = 0; sym < ts; ++sym) set(dead, sym, g_id, dead);

    std::vector<ProjectiveMeasurement::Outcome> outcomes;
    for (std::size_t i = 0; i < dim; ++i) outcomes.push_back({static_cast<int>(i + 1), {i}});
    m.measurement = ProjectiveMeasurement(dim, outcomes);
    for (StateId s = 0; s <= dead; ++s)
        for (std::size_t i = 0; i < dim; ++i)
            m.verdict[{s, static_cast<int>(i + 1)}] = (s == s_last && i == 0) ? accept : reject;

    m.initial_quantum = StateVector::basis(dim, 0);
    m.initial_state = 0;
    validate(m);
    return m;
}

// ---------------------------------------------------------------------------
// Certified measure-once machine for L(p)

namespace detail {

/// Amplitude (1/k) sum_j cos(pi * a_j * i) of the parallel-rotation machine.
inline double parallel_rotation_amplitude(const std::vector<Rational>& angles_pi, std::int64_t i) {
    double acc = 0.0;
    for (const auto& a : angles_pi) {
        // reduce a * i modulo 2 exactly before going to floating point
        Rational t = a * i;
        std::int64_t num = t.numerator() % (2 * t.denominator());
        acc += std::cos(std::numbers::pi * static_cast<double>(num) / static_cast<double>(t.denominator()));
    }
    return acc / static_cast<double>(angles_pi.size());
}

/// Largest acceptance probability on a^i, i in 1..2p, with p not dividing i.
/// Returns +inf if some multiple of p is not accepted with probability 1.
inline double certify_parallel_rotation(const std::vector<Rational>& angles_pi, int p) {
    double worst = 0.0;
    for (std::int64_t i = 1; i <= 2LL * p; ++i) {
        double a = parallel_rotation_amplitude(angles_pi, i);
        double acc = a * a;
        if (i % p == 0) {
            if (std::fabs(acc - 1.0) > kTolNorm) return std::numeric_limits<double>::infinity();
        } else {
            worst = std::max(worst, acc);
        }
    }
    return worst;
}

}  // namespace detail

/// Builds an MO-1QFA from block angles (in units of pi): basis states 2j and
/// 2j+1 carry block j, the initial state is uniform over the even basis
/// states, and the final unitary sends the initial state to |0>, the single
/// accepting basis state.
inline Moqfa parallel_rotation_moqfa(const std::vector<Rational>& angles_pi, std::string name) {
    if (angles_pi.empty()) throw std::invalid_argument("parallel rotation machine needs at least one block");
    const std::size_t k = angles_pi.size();
    std::vector<Amplitude> init(2 * k, 0.0);
    for (std::size_t j = 0; j < k; ++j) init[2 * j] = 1.0 / std::sqrt(static_cast<double>(k));
    Moqfa m{std::move(name),
            "a",
            {Gate({BlockRotationGate{angles_pi}})},
            StateVector(init),
            Gate({HouseholderGate{init, true}}),
            {0},
            {}};
    validate(m);
    return m;
}

struct MoqfaSearchOptions {
    std::uint64_t seed = 20260101;
    int attempts_per_k = 1000;
};

/// Randomized search for the smallest number of blocks k whose angles give
/// one-sided error at most eps, certified exhaustively over a^1..a^{2p}.
/// Convention "2pi g/p" draws g in 1..p-1; convention "pi g/p" draws odd g in
/// 1..2p-1, which is needed for p = 2. For each k both are tried in that order.
inline Moqfa moqfa_mod(int p, Rational eps, MoqfaSearchOptions opt = {}) {
    if (p < 2) throw std::invalid_argument("moqfa_mod needs p >= 2");
    if (eps <= 0 || eps > 1) throw std::invalid_argument("moqfa_mod: eps must lie in (0, 1]");
    const double e = to_double(eps);
    const int k_max = static_cast<int>(std::ceil(4.0 * std::log(2.0 * p) / e));
    std::mt19937_64 rng(opt.seed);
    double best = std::numeric_limits<double>::infinity();

    for (int k = 1; k <= k_max; ++k) {
        for (int convention = 0; convention < 2; ++convention) {
            std::uniform_int_distribution<int> pick_a(1, p - 1);
            std::uniform_int_distribution<int> pick_b(0, p - 1);
            for (int attempt = 0; attempt < opt.attempts_per_k; ++attempt) {
                std::vector<Rational> angles;
                for (int j = 0; j < k; ++j) {
                    if (convention == 0) angles.emplace_back(2 * pick_a(rng), p);
                    else angles.emplace_back(2 * pick_b(rng) + 1, p);
                }
                double err = detail::certify_parallel_rotation(angles, p);
                best = std::min(best, err);
                if (err <= e + 1e-12) {
                    Moqfa m = parallel_rotation_moqfa(angles, "moqfa_mod(" + std::to_string(p) + ", " + to_string(eps) + ")");
                    m.annotations["angle_convention"] = convention == 0 ? "2pi*g/p, g in 1..p-1" : "pi*g/p, g odd";
                    m.annotations["certified_max_error"] = std::to_string(err);
                    m.annotations["seed"] = std::to_string(opt.seed);
                    return m;
                }
            }
        }
    }
    throw ConstructionFailed("moqfa_mod(" + std::to_string(p) + "): no certified machine within " +
                                 std::to_string(k_max) + " blocks",
                             best);
}

inline Moqfa moqfa_mod(int p, double eps, MoqfaSearchOptions opt = {}) {
    return moqfa_mod(p, rational_from_double(eps), opt);
}

// ---------------------------------------------------------------------------
// One-way lifts and products

/// Measure-once machine as a one-way automaton with states {run, accept,
/// reject}: the final unitary is applied on the right end-marker and the
/// measurement separates the accepting basis states (label 1) from the rest.
inline OneWayQcfa lift(const Moqfa& q) {
    validate(q);
    OneWayQcfa m;
    m.name = "lift(" + q.name + ")";
    m.quantum_dim = q.quantum_dim();
    m.alphabet = q.alphabet;
    m.states = {"run", "accept", "reject"};
    m.accepting = {false, true, false};
    m.rejecting = {false, false, true};
    m.gates.push_back({"I", identity_gate(m.quantum_dim)});
    for (std::size_t i = 0; i < q.alphabet.size(); ++i)
        m.gates.push_back({std::string("U_") + q.alphabet[i], q.symbol_gates[i]});
    m.gates.push_back({"U_final", q.final_gate});
    const int ts = m.tape_symbols();
    m.theta.assign(3 * ts, std::nullopt);
    m.delta.assign(3 * ts, std::nullopt);
    m.theta[m.at(0, kLeftMark)] = 0;
    m.delta[m.at(0, kLeftMark)] = 0;
    for (std::size_t i = 0; i < q.alphabet.size(); ++i) {
        m.theta[m.at(0, static_cast<int>(i) + 2)] = static_cast<int>(i) + 1;
        m.delta[m.at(0, static_cast<int>(i) + 2)] = 0;
    }
    m.theta[m.at(0, kRightMark)] = static_cast<int>(m.gates.size()) - 1;

    std::vector<std::size_t> acc = q.accepting, rest;
    for (std::size_t i = 0; i < q.quantum_dim(); ++i)
        if (std::find(acc.begin(), acc.end(), i) == acc.end()) rest.push_back(i);
    std::vector<ProjectiveMeasurement::Outcome> outcomes{{1, acc}};
    if (!rest.empty()) outcomes.push_back({0, rest});
    m.measurement = ProjectiveMeasurement(m.quantum_dim, outcomes);
    m.verdict[{0, 1}] = 1;
    if (!rest.empty()) m.verdict[{0, 0}] = 2;
    m.initial_quantum = q.initial;
    m.initial_state = 0;
    validate(m);
    return m;
}

/// DFA as a one-way automaton with one basis state: the DFA states plus a
/// single accepting state. A rejected run ends in the non-accepting DFA state
/// it reached.
inline OneWayQcfa lift(const Dfa& d) {
    validate(d);
    OneWayQcfa m;
    m.name = "lift(" + d.name + ")";
    m.quantum_dim = 1;
    m.alphabet = d.alphabet;
    m.states = d.states;
    m.states.push_back("accept");
    const auto acc = static_cast<StateId>(d.size());
    m.accepting.assign(m.states.size(), false);
    m.rejecting.assign(m.states.size(), false);
    m.accepting[acc] = true;
    m.gates.push_back({"I", identity_gate(1)});
    m.measurement = ProjectiveMeasurement::computational(1);
    const int ts = m.tape_symbols();
    m.theta.assign(m.states.size() * ts, std::nullopt);
    m.delta.assign(m.states.size() * ts, std::nullopt);
    // the left end-marker is read without a DFA move
    for (StateId s = 0; s < acc; ++s) {
        m.theta[m.at(s, kLeftMark)] = 0;
        m.delta[m.at(s, kLeftMark)] = s;
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            m.theta[m.at(s, static_cast<int>(a) + 2)] = 0;
            m.delta[m.at(s, static_cast<int>(a) + 2)] = d.next(s, a);
        }
        m.theta[m.at(s, kRightMark)] = 0;
        m.verdict[{s, 0}] = d.accepting[s] ? acc : s;
    }
    m.initial_quantum = StateVector::basis(1, 0);
    m.initial_state = d.start;
    validate(m);
    return m;
}

/// Product automaton for the intersection: tensor-product register, one
/// classical state per pair (c1 * c2 in total). A pair halts when either
/// component halts and accepts when both accept. Outcome labels pair up as
/// l1 * stride + l2.
inline OneWayQcfa intersect_1qcfa(const OneWayQcfa& a, const OneWayQcfa& b) {
    validate(a);
    validate(b);
    if (a.alphabet != b.alphabet) throw std::invalid_argument("intersect_1qcfa: input alphabets differ");
    OneWayQcfa m;
    m.name = "(" + a.name + " & " + b.name + ")";
    m.quantum_dim = a.quantum_dim * b.quantum_dim;
    m.alphabet = a.alphabet;
    const auto nb = static_cast<StateId>(b.states.size());
    auto pair_id = [&](StateId s1, StateId s2) { return s1 * nb + s2; };
    for (std::size_t i = 0; i < a.states.size(); ++i)
        for (std::size_t j = 0; j < b.states.size(); ++j) {
            m.states.push_back("(" + a.states[i] + "," + b.states[j] + ")");
            bool halt = a.halting(static_cast<StateId>(i)) || b.halting(static_cast<StateId>(j));
            bool acc = a.accepting[i] && b.accepting[j];
            m.accepting.push_back(acc);
            m.rejecting.push_back(halt && !acc);
        }

    // product gates for every pair of gates actually used
    std::map<std::pair<int, int>, int> product_gate;
    auto gate_for = [&](int g1, int g2) {
        auto [it, fresh] = product_gate.emplace(std::make_pair(g1, g2), static_cast<int>(m.gates.size()));
        if (fresh)
            m.gates.push_back({a.gates[g1].name + "x" + b.gates[g2].name,
                               Gate({TensorGate{{a.gates[g1].gate.spec(), b.gates[g2].gate.spec()}}})});
        return it->second;
    };

    const int ts = m.tape_symbols();
    m.theta.assign(m.states.size() * ts, std::nullopt);
    m.delta.assign(m.states.size() * ts, std::nullopt);
    int max_label_b = 0;
    for (const auto& o : b.measurement.outcomes()) max_label_b = std::max(max_label_b, o.label);
    const int stride = max_label_b + 1;

    for (StateId s1 = 0; s1 < static_cast<StateId>(a.states.size()); ++s1) {
        if (a.halting(s1)) continue;
        for (StateId s2 = 0; s2 < nb; ++s2) {
            if (b.halting(s2)) continue;
            StateId s = pair_id(s1, s2);
            for (int sym = 0; sym < ts; ++sym) {
                m.theta[m.at(s, sym)] = gate_for(*a.theta[a.at(s1, sym)], *b.theta[b.at(s2, sym)]);
                if (sym != kRightMark)
                    m.delta[m.at(s, sym)] = pair_id(*a.delta[a.at(s1, sym)], *b.delta[b.at(s2, sym)]);
            }
            for (const auto& o1 : a.measurement.outcomes())
                for (const auto& o2 : b.measurement.outcomes())
                    m.verdict[{s, o1.label * stride + o2.label}] =
                        pair_id(a.verdict.at({s1, o1.label}), b.verdict.at({s2, o2.label}));
        }
    }

    std::vector<ProjectiveMeasurement::Outcome> outcomes;
    for (const auto& o1 : a.measurement.outcomes())
        for (const auto& o2 : b.measurement.outcomes()) {
            std::vector<std::size_t> idx;
            for (std::size_t i1 : o1.indices)
                for (std::size_t i2 : o2.indices) idx.push_back(i1 * b.quantum_dim + i2);
            outcomes.push_back({o1.label * stride + o2.label, std::move(idx)});
        }
    m.measurement = ProjectiveMeasurement(m.quantum_dim, std::move(outcomes));

    std::vector<Amplitude> init(m.quantum_dim);
    for (std::size_t i = 0; i < a.quantum_dim; ++i)
        for (std::size_t j = 0; j < b.quantum_dim; ++j) init[i * b.quantum_dim + j] = a.initial_quantum[i] * b.initial_quantum[j];
    m.initial_quantum = StateVector(init);
    m.initial_state = pair_id(a.initial_state, b.initial_state);
    validate(m);
    return m;
}

// ---------------------------------------------------------------------------
// Trade-off

struct PrimePower {
    std::int64_t prime;
    int exponent;
    std::int64_t value() const {
        std::int64_t v = 1;
        for (int i = 0; i < exponent; ++i) v *= prime;
        return v;
    }
    bool operator==(const PrimePower&) const = default;
};

inline std::vector<PrimePower> factorize(std::int64_t p) {
    if (p < 1) throw std::invalid_argument("factorize needs a positive integer");
    std::vector<PrimePower> out;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        int e = 0;
        while (p % d == 0) {
            p /= d;
            ++e;
        }
        if (e) out.push_back({d, e});
    }
    if (p > 1) out.push_back({p, 1});
    return out;
}

/// Split of the prime-power factors of p into a quantum part q1 and a
/// classical part q2.
struct TradeoffPartition {
    std::int64_t p = 0;
    std::vector<PrimePower> factors;
    std::vector<std::size_t> quantum_part;    // indices into factors
    std::vector<std::size_t> classical_part;  // the complement

    std::int64_t q1() const {
        std::int64_t v = 1;
        for (auto i : quantum_part) v *= factors[i].value();
        return v;
    }
    std::int64_t q2() const {
        std::int64_t v = 1;
        for (auto i : classical_part) v *= factors[i].value();
        return v;
    }
};

/// Partition with q1 = the given divisor of p. q1 must be a product of whole
/// prime-power factors of p and both parts must be nonempty.
inline TradeoffPartition make_partition(std::int64_t p, std::int64_t q1) {
    TradeoffPartition t;
    t.p = p;
    t.factors = factorize(p);
    if (t.factors.size() < 2) throw std::invalid_argument("trade-off needs p with at least two distinct prime factors");
    if (q1 <= 1 || q1 >= p || p % q1 != 0 || std::gcd(q1, p / q1) != 1)
        throw std::invalid_argument("q1 = " + std::to_string(q1) + " does not split the prime powers of p = " +
                                    std::to_string(p));
    for (std::size_t i = 0; i < t.factors.size(); ++i)
        (q1 % t.factors[i].prime == 0 ? t.quantum_part : t.classical_part).push_back(i);
    return t;
}

/// Every partition with both parts nonempty, ordered by q1.
inline std::vector<TradeoffPartition> all_partitions(std::int64_t p) {
    auto f = factorize(p);
    std::vector<TradeoffPartition> out;
    if (f.size() < 2) return out;
    const std::size_t s = f.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << s); ++mask) {
        std::int64_t q1 = 1;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (std::size_t{1} << i)) q1 *= f[i].value();
        out.push_back(make_partition(p, q1));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.q1() < y.q1(); });
    return out;
}

inline OneWayQcfa tradeoff_1qcfa(const TradeoffPartition& t, Rational eps, MoqfaSearchOptions opt = {}) {
    detail::checked_eps(eps, Rational(1, 2), "tradeoff_1qcfa");
    if (t.q1() * t.q2() != t.p || std::gcd(t.q1(), t.q2()) != 1)
        throw std::invalid_argument("trade-off partition does not split p into coprime parts");
    OneWayQcfa m = intersect_1qcfa(lift(moqfa_mod(static_cast<int>(t.q1()), eps, opt)),
                                   lift(dfa_mod(static_cast<int>(t.q2()))));
    m.name = "tradeoff_1qcfa(" + std::to_string(t.p) + ", q1=" + std::to_string(t.q1()) + ", " + to_string(eps) + ")";
    return m;
}

inline OneWayQcfa tradeoff_1qcfa(const TradeoffPartition& t, double eps, MoqfaSearchOptions opt = {}) {
    return tradeoff_1qcfa(t, rational_from_double(eps), opt);
}

// ---------------------------------------------------------------------------
// Language membership

enum class Membership { yes, no, outside };

inline const char* to_string(Membership c) {
    switch (c) {
        case Membership::yes: return "yes";
        case Membership::no: return "no";
        default: return "outside-promise";
    }
}

/// a^k is a member iff p divides k. The empty word counts as a member, the
/// way every machine here treats it.
inline Membership classify_mod(int p, std::string_view w) {
    return w.size() % static_cast<std::size_t>(p) == 0 ? Membership::yes : Membership::no;
}

inline Membership classify_len(int m, std::string_view w) {
    return w.size() == static_cast<std::size_t>(m) ? Membership::yes : Membership::no;
}

/// x#y with |x| = |y| = n: yes iff x = y, no iff they differ in exactly n/2
/// positions, anything else is outside the promise.
inline Membership classify_eq(int n, std::string_view w) {
    auto hash = w.find('#');
    if (hash == std::string_view::npos || w.find('#', hash + 1) != std::string_view::npos) return Membership::outside;
    auto x = w.substr(0, hash), y = w.substr(hash + 1);
    if (x.size() != static_cast<std::size_t>(n) || y.size() != static_cast<std::size_t>(n)) return Membership::outside;
    int h = 0;
    for (int i = 0; i < n; ++i) h += x[i] != y[i];
    if (h == 0) return Membership::yes;
    if (2 * h == n) return Membership::no;
    return Membership::outside;
}

}  // namespace sqfa
