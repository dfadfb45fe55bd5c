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

// Sampling machines run by run. Two-way machines are first compiled into
// their reachable configuration graph for the given word: a node is a
// configuration about to perform a measurement with more than one possible
// outcome, and every edge carries the deterministic stretch that follows the
// outcome. Runs then walk that graph, drawing one outcome per node, so a run
// is a faithful sample of the machine's trajectory at a fraction of the cost
// of replaying every unitary step.

#pragma once

#include "sqfa/analysis.hpp"
#include "sqfa/errors.hpp"
#include "sqfa/machine.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace sqfa {

/// Counter-based generator: output k of stream (seed, stream) is the SplitMix64
/// finalizer applied to key + k * golden, so any run's stream can be created
/// in O(1) regardless of which runs were drawn before it.
class CounterRng {
  public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(mix(seed) ^ (stream + 0x632BE59BD9B4E019ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

enum class RunOutcome { accept, reject, censored };

inline const char* to_string(RunOutcome o) {
    switch (o) {
        case RunOutcome::accept: return "accept";
        case RunOutcome::reject: return "reject";
        default: return "censored";
    }
}

struct RunResult {
    RunOutcome outcome = RunOutcome::censored;
    std::uint64_t steps = 0;
    std::uint64_t iterations = 0;
    bool operator==(const RunResult&) const = default;
};

struct Estimate {
    std::uint64_t n_runs = 0;
    std::uint64_t censored = 0;
    double p_accept_hat = 0.0;
    double p_reject_hat = 0.0;
    double ci_halfwidth = 0.0;  // 3 * sqrt(p(1-p)/n) over uncensored runs
    double mean_steps = 0.0;    // over uncensored runs
    bool usable = false;        // false when every run was censored
    bool operator==(const Estimate&) const = default;
};

inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

struct SamplerOptions {
    std::size_t max_nodes = 200'000;
    std::uint64_t max_fold = 50'000'000;  // deterministic steps folded into one edge
};

/// Compiled sampler for one machine and one word.
class Sampler {
  public:
    Sampler(Machine m, std::string word, SamplerOptions opt = {})
        : machine_(std::move(m)), word_(std::move(word)), opt_(opt) {
        validate(machine_);
        if (auto* q = std::get_if<TwoWayQcfa>(&machine_)) {
            tape_ = make_tape(q->alphabet, word_);
            compile(*q);
        } else if (auto* o = std::get_if<OneWayQcfa>(&machine_)) {
            auto r = acceptance_oneway(*o, word_);
            p_one_way_accept_ = r.p_accept;
            one_way_steps_ = word_.size() + 2;
        } else if (auto* mo = std::get_if<Moqfa>(&machine_)) {
            auto r = acceptance_oneway(*mo, word_);
            p_one_way_accept_ = r.p_accept;
            one_way_steps_ = word_.size();
        } else {
            p_one_way_accept_ = dfa_run(std::get<Dfa>(machine_), word_) ? 1.0 : 0.0;
            one_way_steps_ = word_.size();
        }
    }

    /// Run `index` of the family seeded by `seed`. Censored iff the run has
    /// not halted within `step_cap` steps.
    RunResult run(std::uint64_t seed, std::uint64_t index, std::uint64_t step_cap) const {
        if (step_cap == 0) throw std::invalid_argument("step cap must be positive");
        CounterRng rng(seed, index);
        if (!std::holds_alternative<TwoWayQcfa>(machine_)) {
            if (one_way_steps_ > step_cap) return {RunOutcome::censored, step_cap, 1};
            bool acc = p_one_way_accept_ >= 1.0 || (p_one_way_accept_ > 0.0 && rng.uniform() < p_one_way_accept_);
            return {acc ? RunOutcome::accept : RunOutcome::reject, one_way_steps_, 1};
        }
        if (graph_ok_) return run_graph(rng, step_cap);
        return run_direct(rng, step_cap);
    }

    bool compiled() const { return graph_ok_; }
    std::size_t node_count() const { return nodes_.size(); }

  private:
    static constexpr int kAccept = -1;
    static constexpr int kReject = -2;
    static constexpr int kDiverge = -3;

    struct Edge {
        int target = kDiverge;
        std::uint64_t steps = 0;
        std::uint64_t loops = 0;  // entries into the loop state along the edge
    };

    struct Node {
        Configuration config;
        std::vector<double> cumulative;
        std::vector<Edge> edges;
        int self_edge = -1;
        bool fair = false;
    };

    struct Chunk {
        int target;
        std::uint8_t bits;
        std::uint64_t steps;
        std::uint64_t loops;
    };

    using Key = std::tuple<StateId, int, std::vector<std::int64_t>>;

    Key key_of(const Configuration& c) const {
        std::vector<std::int64_t> k;
        k.reserve(2 * c.quantum.dim());
        for (const auto& a : c.quantum.amplitudes()) {
            k.push_back(std::llround(a.real() * 1e9));
            k.push_back(std::llround(a.imag() * 1e9));
        }
        return {c.classical, c.head, std::move(k)};
    }

    /// Follows single-successor steps from `c` until a branching measurement
    /// or a halt, returning the edge into that node.
    Edge fold(const TwoWayQcfa& m, Configuration c, std::map<Key, int>& index, std::vector<int>& pending) {
        Edge e{kDiverge, 0, 0};
        const auto loop = m.annotations.loop_state;
        for (std::uint64_t k = 0; k < opt_.max_fold; ++k) {
            auto br = qcfa_step(m, c, std::span<const int>(tape_));
            if (br.size() > 1) {
                auto key = key_of(c);
                auto it = index.find(key);
                if (it == index.end()) {
                    if (nodes_.size() >= opt_.max_nodes) throw UnsupportedMachine("configuration graph too large");
                    it = index.emplace(std::move(key), static_cast<int>(nodes_.size())).first;
                    nodes_.push_back(Node{c, {}, {}, -1, false});
                    pending.push_back(it->second);
                }
                e.target = it->second;
                return e;
            }
            ++e.steps;
            if (auto* h = std::get_if<Halt>(&br[0].next)) {
                e.target = h->accepted ? kAccept : kReject;
                return e;
            }
            c = std::move(std::get<Configuration>(br[0].next));
            if (loop && c.classical == *loop) ++e.loops;
        }
        return e;
    }

    void compile(const TwoWayQcfa& m) {
        std::map<Key, int> index;
        std::vector<int> pending;
        try {
            root_ = fold(m, initial_configuration(m), index, pending);
            const auto loop = m.annotations.loop_state;
            while (!pending.empty()) {
                int id = pending.back();
                pending.pop_back();
                Configuration c = nodes_[id].config;
                std::vector<double> cum;
                std::vector<Edge> edges;
                double acc = 0.0;
                for (auto& br : qcfa_step(m, c, std::span<const int>(tape_))) {
                    Edge e{kDiverge, 1, 0};
                    if (auto* h = std::get_if<Halt>(&br.next)) {
                        e.target = h->accepted ? kAccept : kReject;
                    } else {
                        auto& next = std::get<Configuration>(br.next);
                        bool enters_loop = loop && next.classical == *loop;
                        Edge rest = fold(m, std::move(next), index, pending);
                        e.target = rest.target;
                        e.steps += rest.steps;
                        e.loops = rest.loops + (enters_loop ? 1 : 0);
                    }
                    acc += br.probability;
                    cum.push_back(acc);
                    edges.push_back(e);
                }
                for (auto& x : cum) x /= acc;  // absorb pruned mass
                Node& node = nodes_[id];
                node.cumulative = std::move(cum);
                node.edges = std::move(edges);
                for (std::size_t i = 0; i < node.edges.size(); ++i)
                    if (node.edges[i].target == id) node.self_edge = static_cast<int>(i);
                node.fair = node.edges.size() == 2 && std::fabs(node.cumulative[0] - 0.5) < 1e-12 && node.self_edge < 0;
            }
        } catch (const UnsupportedMachine&) {
            nodes_.clear();
            graph_ok_ = false;
            return;
        }
        graph_ok_ = true;
        build_chunks();
    }

    /// For every fair node and every byte of coin flips, where up to eight
    /// consecutive fair draws lead.
    void build_chunks() {
        chunk_base_.assign(nodes_.size(), -1);
        std::size_t fair = 0;
        for (const auto& n : nodes_) fair += n.fair;
        if (fair == 0 || fair > 20'000) return;
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            if (!nodes_[id].fair) continue;
            chunk_base_[id] = static_cast<int>(chunks_.size());
            for (int byte = 0; byte < 256; ++byte) {
                Chunk ch{static_cast<int>(id), 0, 0, 0};
                while (ch.bits < 8 && ch.target >= 0 && nodes_[ch.target].fair) {
                    const Edge& e = nodes_[ch.target].edges[(byte >> ch.bits) & 1];
                    ch.steps += e.steps;
                    ch.loops += e.loops;
                    ch.target = e.target;
                    ++ch.bits;
                }
                chunks_.push_back(ch);
            }
        }
    }

    RunResult finish(int target, std::uint64_t steps, std::uint64_t loops, std::uint64_t cap) const {
        if (target == kDiverge || steps > cap) return {RunOutcome::censored, cap, loops + 1};
        return {target == kAccept ? RunOutcome::accept : RunOutcome::reject, steps, loops + 1};
    }

    RunResult run_graph(CounterRng& rng, std::uint64_t cap) const {
        std::uint64_t steps = root_.steps, loops = root_.loops;
        int cur = root_.target;
        std::uint64_t bitbuf = 0;
        int bitcount = 0;
        while (cur >= 0) {
            if (steps > cap) return {RunOutcome::censored, cap, loops + 1};
            const Node& node = nodes_[cur];
            if (node.fair && chunk_base_[cur] >= 0) {
                if (bitcount < 8) {
                    bitbuf = rng();
                    bitcount = 64;
                }
                const Chunk& ch = chunks_[chunk_base_[cur] + static_cast<int>(bitbuf & 0xFF)];
                bitbuf >>= ch.bits;
                bitcount -= ch.bits;
                steps += ch.steps;
                loops += ch.loops;
                cur = ch.target;
                continue;
            }
            if (node.self_edge >= 0) {
                // repeated self-loops are a geometric number of failures
                double p_self = node.cumulative[node.self_edge] -
                                (node.self_edge > 0 ? node.cumulative[node.self_edge - 1] : 0.0);
                if (p_self >= 1.0) return {RunOutcome::censored, cap, loops + 1};
                const Edge& se = node.edges[node.self_edge];
                std::geometric_distribution<std::uint64_t> geo(1.0 - p_self);
                std::uint64_t k = p_self > 0.0 ? geo(rng) : 0;
                if (k > 0 && se.steps > 0 && k > (cap - std::min(cap, steps)) / se.steps + 1)
                    return {RunOutcome::censored, cap, loops + 1};
                steps += k * se.steps;
                loops += k * se.loops;
                double u = rng.uniform() * (1.0 - p_self);
                double acc = 0.0;
                int pick = -1;
                for (std::size_t i = 0; i < node.edges.size(); ++i) {
                    if (static_cast<int>(i) == node.self_edge) continue;
                    double lo = i == 0 ? 0.0 : node.cumulative[i - 1];
                    acc += node.cumulative[i] - lo;
                    pick = static_cast<int>(i);
                    if (u < acc) break;
                }
                const Edge& e = node.edges[pick];
                steps += e.steps;
                loops += e.loops;
                cur = e.target;
                continue;
            }
            double u = rng.uniform();
            std::size_t i = 0;
            while (i + 1 < node.edges.size() && u >= node.cumulative[i]) ++i;
            const Edge& e = node.edges[i];
            steps += e.steps;
            loops += e.loops;
            cur = e.target;
        }
        return finish(cur, steps, loops, cap);
    }

    /// Step-by-step replay, used when the configuration graph is too large.
    RunResult run_direct(CounterRng& rng, std::uint64_t cap) const {
        const auto& m = std::get<TwoWayQcfa>(machine_);
        const auto loop = m.annotations.loop_state;
        Configuration c = initial_configuration(m);
        std::uint64_t loops = 0;
        while (c.steps < cap) {
            auto br = qcfa_step(m, c, std::span<const int>(tape_));
            std::size_t pick = 0;
            if (br.size() > 1) {
                double total = 0.0;
                for (const auto& b : br) total += b.probability;
                double u = rng.uniform() * total, acc = 0.0;
                for (pick = 0; pick + 1 < br.size(); ++pick) {
                    acc += br[pick].probability;
                    if (u < acc) break;
                }
            }
            if (auto* h = std::get_if<Halt>(&br[pick].next))
                return {h->accepted ? RunOutcome::accept : RunOutcome::reject, h->steps, loops + 1};
            c = std::move(std::get<Configuration>(br[pick].next));
            if (loop && c.classical == *loop) ++loops;
        }
        return {RunOutcome::censored, cap, loops + 1};
    }

    Machine machine_;
    std::string word_;
    SamplerOptions opt_;
    std::vector<int> tape_;
    std::vector<Node> nodes_;
    std::vector<int> chunk_base_;
    std::vector<Chunk> chunks_;
    Edge root_;
    bool graph_ok_ = false;
    double p_one_way_accept_ = 0.0;
    std::uint64_t one_way_steps_ = 0;
};

inline RunResult simulate_run(const Machine& m, std::string_view w, std::uint64_t seed,
                              std::uint64_t step_cap = kDefaultStepCap) {
    return Sampler(m, std::string(w)).run(seed, 0, step_cap);
}

/// 100 x the analytic expected steps when the analysis applies, else 10^7.
inline std::uint64_t default_step_cap(const Machine& m, std::string_view w) {
    try {
        double e = acceptance(m, w).expected_steps;
        if (std::isfinite(e) && e > 0) return static_cast<std::uint64_t>(std::ceil(100.0 * e));
    } catch (const std::exception&) {
    }
    return kDefaultStepCap;
}

inline Estimate summarize(const std::vector<RunResult>& runs) {
    Estimate e;
    e.n_runs = runs.size();
    std::uint64_t acc = 0, rej = 0;
    long double steps = 0;
    for (const auto& r : runs) {
        if (r.outcome == RunOutcome::censored) {
            ++e.censored;
            continue;
        }
        (r.outcome == RunOutcome::accept ? acc : rej) += 1;
        steps += static_cast<long double>(r.steps);
    }
    const std::uint64_t used = acc + rej;
    e.usable = used > 0;
    if (e.usable) {
        e.p_accept_hat = static_cast<double>(acc) / static_cast<double>(used);
        e.p_reject_hat = static_cast<double>(rej) / static_cast<double>(used);
        e.ci_halfwidth = 3.0 * std::sqrt(e.p_accept_hat * (1.0 - e.p_accept_hat) / static_cast<double>(used));
        e.mean_steps = static_cast<double>(steps / used);
    }
    return e;
}

inline Estimate estimate(const Sampler& s, std::uint64_t n_runs, std::uint64_t seed, std::uint64_t step_cap) {
    if (n_runs < 1) throw std::invalid_argument("estimate needs at least one run");
    std::vector<RunResult> runs;
    runs.reserve(n_runs);
    for (std::uint64_t i = 0; i < n_runs; ++i) runs.push_back(s.run(seed, i, step_cap));
    return summarize(runs);
}

/// step_cap = 0 selects default_step_cap.
inline Estimate estimate(const Machine& m, std::string_view w, std::uint64_t n_runs, std::uint64_t seed,
                         std::uint64_t step_cap = 0) {
    if (step_cap == 0) step_cap = default_step_cap(m, w);
    return estimate(Sampler(m, std::string(w)), n_runs, seed, step_cap);
}

}  // namespace sqfa
