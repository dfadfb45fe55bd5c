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

#pragma once

#include "sqfa/errors.hpp"

#include <cstddef>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqfa {

/// Complete deterministic automaton. States are 0..size()-1, the transition
/// table is row-major: next = transition[state * alphabet.size() + symbol].
struct Dfa {
    std::string name;
    std::string alphabet;
    std::vector<std::string> states;
    std::vector<int> transition;
    int start = 0;
    std::vector<bool> accepting;

    std::size_t size() const { return states.size(); }

    int next(int state, std::size_t symbol) const { return transition[state * alphabet.size() + symbol]; }

    std::size_t symbol_index(char c) const {
        auto pos = alphabet.find(c);
        if (pos == std::string::npos)
            throw std::invalid_argument(std::string("symbol '") + c + "' is not in the alphabet \"" + alphabet + "\"");
        return pos;
    }

    bool operator==(const Dfa&) const = default;
};

inline void validate(const Dfa& d) {
    if (d.states.empty()) throw IllFormedMachine("DFA has no states");
    if (d.alphabet.empty()) throw IllFormedMachine("DFA alphabet is empty");
    if (d.transition.size() != d.size() * d.alphabet.size())
        throw IllFormedMachine("DFA transition table is not total");
    if (d.accepting.size() != d.size()) throw IllFormedMachine("DFA accepting flags do not match state count");
    if (d.start < 0 || static_cast<std::size_t>(d.start) >= d.size()) throw IllFormedMachine("DFA start state out of range");
    for (int t : d.transition)
        if (t < 0 || static_cast<std::size_t>(t) >= d.size()) throw IllFormedMachine("DFA transition target out of range");
}

inline bool dfa_run(const Dfa& d, std::string_view word) {
    int s = d.start;
    for (char c : word) s = d.next(s, d.symbol_index(c));
    return d.accepting[s];
}

/// Minimal complete DFA for the same language: unreachable states dropped,
/// then Moore partition refinement. States are renumbered in BFS order from
/// the start state, so the result is canonical.
inline Dfa dfa_minimize(const Dfa& d) {
    validate(d);
    const std::size_t k = d.alphabet.size();

    std::vector<int> order;
    std::vector<bool> reached(d.size(), false);
    std::queue<int> q;
    q.push(d.start);
    reached[d.start] = true;
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        order.push_back(s);
        for (std::size_t a = 0; a < k; ++a) {
            int t = d.next(s, a);
            if (!reached[t]) {
                reached[t] = true;
                q.push(t);
            }
        }
    }

    std::vector<int> block(d.size(), -1);
    for (int s : order) block[s] = d.accepting[s] ? 1 : 0;
    std::size_t count = 0;
    while (true) {
        // signature = (block, blocks of successors)
        std::map<std::vector<int>, int> ids;
        std::vector<int> next_block(d.size(), -1);
        for (int s : order) {
            std::vector<int> sig{block[s]};
            for (std::size_t a = 0; a < k; ++a) sig.push_back(block[d.next(s, a)]);
            auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next_block[s] = it->second;
        }
        block = std::move(next_block);
        if (ids.size() == count) break;
        count = ids.size();
    }

    // renumber blocks in BFS order from the start block
    std::vector<int> rep(count, -1);
    for (int s : order)
        if (rep[block[s]] < 0) rep[block[s]] = s;
    std::vector<int> canon(count, -1);
    std::vector<int> seq;
    canon[block[d.start]] = 0;
    seq.push_back(block[d.start]);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int s = rep[seq[i]];
        for (std::size_t a = 0; a < k; ++a) {
            int b = block[d.next(s, a)];
            if (canon[b] < 0) {
                canon[b] = static_cast<int>(seq.size());
                seq.push_back(b);
            }
        }
    }

    Dfa out;
    out.name = d.name.empty() ? "minimized" : "min(" + d.name + ")";
    out.alphabet = d.alphabet;
    out.start = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int s = rep[seq[i]];
        out.states.push_back("m" + std::to_string(i));
        out.accepting.push_back(d.accepting[s]);
        for (std::size_t a = 0; a < k; ++a) out.transition.push_back(canon[block[d.next(s, a)]]);
    }
    return out;
}

/// Product automaton accepting the intersection.
inline Dfa dfa_product(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) throw std::invalid_argument("product of DFAs over different alphabets");
    const std::size_t k = a.alphabet.size();
    Dfa out;
    out.name = a.name + "&" + b.name;
    out.alphabet = a.alphabet;
    out.start = static_cast<int>(a.start * b.size() + b.start);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            out.states.push_back("(" + a.states[i] + "," + b.states[j] + ")");
            out.accepting.push_back(a.accepting[i] && b.accepting[j]);
            for (std::size_t s = 0; s < k; ++s)
                out.transition.push_back(static_cast<int>(a.next(static_cast<int>(i), s) * b.size() +
                                                          b.next(static_cast<int>(j), s)));
        }
    return out;
}

}  // namespace sqfa
