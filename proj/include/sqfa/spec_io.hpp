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

// JSON machine documents (format_version 1).
//
// Common fields: format_version, model ("dfa" | "moqfa" | "1qcfa" | "2qcfa"),
// name, alphabet. Complex numbers are [re, im] pairs; matrices are row-major
// arrays of them. Tape symbols are written as the input character or as
// "LEFT_MARK" / "RIGHT_MARK". Gates are objects tagged by "kind":
//   identity {dim}              rotation {angle_pi: "p/q" | number}
//   split {weight: "p/q"}       block_rotation {angles_pi: ["p/q", ...]}
//   phase_flip {dim, index}     householder {column, adjoint}
//   matrix {dim, entries}       tensor {factors: [gate, ...]}
// Loading checks every invariant of the model; failures are LoadError with a
// JSON-pointer location.

#pragma once

#include "sqfa/errors.hpp"
#include "sqfa/gate.hpp"
#include "sqfa/machine.hpp"
#include "sqfa/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace sqfa {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Saving

namespace detail {

inline Json complex_json(const Amplitude& a) { return Json::array({a.real(), a.imag()}); }

inline Json complex_list(std::span<const Amplitude> v) {
    Json out = Json::array();
    for (const auto& a : v) out.push_back(complex_json(a));
    return out;
}

inline Json gate_json(const GateSpec& g) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IdentityGate>) {
                return {{"kind", "identity"}, {"dim", x.dim}};
            } else if constexpr (std::is_same_v<T, RotationGate>) {
                Json j{{"kind", "rotation"}};
                if (auto* r = std::get_if<Rational>(&x.angle_pi)) j["angle_pi"] = to_string(*r);
                else j["angle_pi"] = std::get<double>(x.angle_pi);
                return j;
            } else if constexpr (std::is_same_v<T, SplitGate>) {
                return {{"kind", "split"}, {"weight", to_string(x.weight)}};
            } else if constexpr (std::is_same_v<T, BlockRotationGate>) {
                Json a = Json::array();
                for (const auto& r : x.angles_pi) a.push_back(to_string(r));
                return {{"kind", "block_rotation"}, {"angles_pi", a}};
            } else if constexpr (std::is_same_v<T, PhaseFlipGate>) {
                return {{"kind", "phase_flip"}, {"dim", x.dim}, {"index", x.index}};
            } else if constexpr (std::is_same_v<T, HouseholderGate>) {
                return {{"kind", "householder"}, {"column", complex_list(x.column)}, {"adjoint", x.adjoint}};
            } else if constexpr (std::is_same_v<T, MatrixGate>) {
                return {{"kind", "matrix"}, {"dim", x.dim}, {"entries", complex_list(x.entries)}};
            } else {
                Json f = Json::array();
                for (const auto& g : x.factors) f.push_back(gate_json(g));
                return {{"kind", "tensor"}, {"factors", f}};
            }
        },
        g.v);
}

inline Json measurement_json(const ProjectiveMeasurement& pm) {
    Json outs = Json::array();
    for (const auto& o : pm.outcomes()) outs.push_back({{"label", o.label}, {"indices", o.indices}});
    return {{"dim", pm.dim()}, {"outcomes", outs}};
}

inline Json header(const char* model, const std::string& name, const std::string& alphabet) {
    return {{"format_version", kFormatVersion}, {"model", model}, {"name", name}, {"alphabet", alphabet}};
}

}  // namespace detail

inline Json spec_save(const Dfa& d) {
    validate(d);
    Json j = detail::header("dfa", d.name, d.alphabet);
    j["states"] = d.states;
    j["start"] = d.states[d.start];
    Json acc = Json::array();
    for (std::size_t s = 0; s < d.size(); ++s)
        if (d.accepting[s]) acc.push_back(d.states[s]);
    j["accepting"] = acc;
    Json tr = Json::array();
    for (std::size_t s = 0; s < d.size(); ++s)
        for (std::size_t a = 0; a < d.alphabet.size(); ++a)
            tr.push_back({{"state", d.states[s]},
                          {"symbol", std::string(1, d.alphabet[a])},
                          {"next", d.states[d.next(static_cast<int>(s), a)]}});
    j["transitions"] = tr;
    return j;
}

inline Json spec_save(const Moqfa& m) {
    validate(m);
    Json j = detail::header("moqfa", m.name, m.alphabet);
    j["quantum_dim"] = m.quantum_dim();
    Json sg = Json::object();
    for (std::size_t i = 0; i < m.alphabet.size(); ++i)
        sg[std::string(1, m.alphabet[i])] = detail::gate_json(m.symbol_gates[i].spec());
    j["symbol_gates"] = sg;
    j["initial"] = detail::complex_list(m.initial.amplitudes());
    j["final_gate"] = detail::gate_json(m.final_gate.spec());
    j["accepting"] = m.accepting;
    j["annotations"] = m.annotations;
    return j;
}

inline Json spec_save(const OneWayQcfa& m) {
    validate(m);
    Json j = detail::header("1qcfa", m.name, m.alphabet);
    j["quantum_dim"] = m.quantum_dim;
    j["classical_states"] = m.states;
    Json gates = Json::array();
    for (const auto& g : m.gates) {
        Json x = detail::gate_json(g.gate.spec());
        x["name"] = g.name;
        gates.push_back(x);
    }
    j["gates"] = gates;
    j["measurement"] = detail::measurement_json(m.measurement);
    Json theta = Json::array(), delta = Json::array(), verdict = Json::array();
    for (StateId s = 0; s < static_cast<StateId>(m.states.size()); ++s)
        for (int sym = 0; sym < m.tape_symbols(); ++sym) {
            const auto& g = m.theta[m.at(s, sym)];
            if (g) theta.push_back({{"state", m.states[s]}, {"symbol", tape_symbol_name(m.alphabet, sym)}, {"gate", m.gates[*g].name}});
            const auto& d = m.delta[m.at(s, sym)];
            if (d) delta.push_back({{"state", m.states[s]}, {"symbol", tape_symbol_name(m.alphabet, sym)}, {"next", m.states[*d]}});
        }
    for (const auto& [k, t] : m.verdict)
        verdict.push_back({{"state", m.states[k.first]}, {"outcome", k.second}, {"next", m.states[t]}});
    j["theta"] = theta;
    j["delta"] = delta;
    j["verdict"] = verdict;
    j["initial"] = {{"classical", m.states[m.initial_state]}, {"quantum", detail::complex_list(m.initial_quantum.amplitudes())}};
    Json acc = Json::array(), rej = Json::array();
    for (StateId s = 0; s < static_cast<StateId>(m.states.size()); ++s) {
        if (m.accepting[s]) acc.push_back(m.states[s]);
        if (m.rejecting[s]) rej.push_back(m.states[s]);
    }
    j["accepting"] = acc;
    j["rejecting"] = rej;
    return j;
}

inline Json spec_save(const TwoWayQcfa& m) {
    validate(m);
    Json j = detail::header("2qcfa", m.name, m.alphabet);
    j["quantum_dim"] = m.quantum_dim;
    j["classical_states"] = m.states;
    Json gates = Json::array();
    for (const auto& g : m.gates) {
        Json x = detail::gate_json(g.gate.spec());
        x["name"] = g.name;
        gates.push_back(x);
    }
    j["gates"] = gates;
    Json meas = Json::array();
    for (const auto& x : m.measurements) {
        Json mj = detail::measurement_json(x.measurement);
        mj["name"] = x.name;
        meas.push_back(mj);
    }
    j["measurements"] = meas;
    Json theta = Json::array(), delta = Json::array();
    for (StateId s = 0; s < static_cast<StateId>(m.states.size()); ++s)
        for (int sym = 0; sym < m.tape_symbols(); ++sym) {
            const auto& act = m.theta[m.at(s, sym)];
            if (!act) continue;
            Json t{{"state", m.states[s]}, {"symbol", tape_symbol_name(m.alphabet, sym)}};
            if (act->kind == QuantumAction::Kind::unitary) {
                t["gate"] = m.gates[act->index].name;
                const auto& mv = *m.delta_unitary[m.at(s, sym)];
                delta.push_back({{"state", m.states[s]}, {"symbol", tape_symbol_name(m.alphabet, sym)},
                                 {"next", m.states[mv.next]}, {"move", mv.move}});
            } else {
                t["measurement"] = m.measurements[act->index].name;
                for (const auto& o : m.measurements[act->index].measurement.outcomes()) {
                    const auto& mv = m.delta_measure.at({s, sym, o.label});
                    delta.push_back({{"state", m.states[s]}, {"symbol", tape_symbol_name(m.alphabet, sym)},
                                     {"outcome", o.label}, {"next", m.states[mv.next]}, {"move", mv.move}});
                }
            }
            theta.push_back(t);
        }
    j["theta"] = theta;
    j["delta"] = delta;
    j["initial"] = {{"classical", m.states[m.initial_state]}, {"quantum", detail::complex_list(m.initial_quantum.amplitudes())}};
    Json acc = Json::array(), rej = Json::array();
    for (StateId s = 0; s < static_cast<StateId>(m.states.size()); ++s) {
        if (m.accepting[s]) acc.push_back(m.states[s]);
        if (m.rejecting[s]) rej.push_back(m.states[s]);
    }
    j["accepting"] = acc;
    j["rejecting"] = rej;
    Json ann = Json::object();
    if (m.annotations.loop_state) ann["loop_state"] = m.states[*m.annotations.loop_state];
    Json walks = Json::array();
    for (StateId w : m.annotations.walk_states) walks.push_back(m.states[w]);
    ann["walk_states"] = walks;
    j["annotations"] = ann;
    return j;
}

inline Json spec_save(const Machine& m) {
    return std::visit([](const auto& x) { return spec_save(x); }, m);
}

// ---------------------------------------------------------------------------
// Loading

namespace detail {

/// Cursor into a document that remembers its JSON-pointer location.
class Node {
  public:
    Node(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const Json& json() const { return *j_; }
    const std::string& path() const { return path_; }
    [[noreturn]] void fail(const std::string& what) const { throw LoadError(path_.empty() ? "/" : path_, what); }

    Node operator[](const char* key) const {
        if (!j_->is_object()) fail("expected an object");
        auto it = j_->find(key);
        if (it == j_->end()) throw LoadError(path_ + "/" + key, "required field is missing");
        return Node(*it, path_ + "/" + key);
    }
    bool has(const char* key) const { return j_->is_object() && j_->contains(key); }

    std::vector<Node> items() const {
        if (!j_->is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i));
        return out;
    }

    std::string str() const {
        if (!j_->is_string()) fail("expected a string");
        return j_->get<std::string>();
    }
    long long integer() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        return j_->get<long long>();
    }
    std::size_t count() const {
        long long v = integer();
        if (v < 0) fail("expected a nonnegative integer");
        return static_cast<std::size_t>(v);
    }
    double number() const {
        if (!j_->is_number()) fail("expected a number");
        return j_->get<double>();
    }
    bool boolean() const {
        if (!j_->is_boolean()) fail("expected true or false");
        return j_->get<bool>();
    }
    Rational rational() const {
        try {
            if (j_->is_number_integer()) return Rational(j_->get<std::int64_t>());
            return parse_rational(str());
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    Amplitude complex() const {
        if (!j_->is_array() || j_->size() != 2 || !(*j_)[0].is_number() || !(*j_)[1].is_number())
            fail("expected a complex number [re, im]");
        return {(*j_)[0].get<double>(), (*j_)[1].get<double>()};
    }
    std::vector<Amplitude> complex_list() const {
        std::vector<Amplitude> out;
        for (const auto& x : items()) out.push_back(x.complex());
        return out;
    }

  private:
    const Json* j_;
    std::string path_;
};

inline GateSpec gate_spec(const Node& n) {
    std::string kind = n["kind"].str();
    if (kind == "identity") return {IdentityGate{n["dim"].count()}};
    if (kind == "rotation") {
        Node a = n["angle_pi"];
        if (a.json().is_string()) return {RotationGate{a.rational()}};
        return {RotationGate{a.number()}};
    }
    if (kind == "split") return {SplitGate{n["weight"].rational()}};
    if (kind == "block_rotation") {
        std::vector<Rational> angles;
        for (const auto& x : n["angles_pi"].items()) angles.push_back(x.rational());
        return {BlockRotationGate{angles}};
    }
    if (kind == "phase_flip") return {PhaseFlipGate{n["dim"].count(), n["index"].count()}};
    if (kind == "householder")
        return {HouseholderGate{n["column"].complex_list(), n.has("adjoint") && n["adjoint"].boolean()}};
    if (kind == "matrix") return {MatrixGate{n["dim"].count(), n["entries"].complex_list()}};
    if (kind == "tensor") {
        std::vector<GateSpec> f;
        for (const auto& x : n["factors"].items()) f.push_back(gate_spec(x));
        return {TensorGate{f}};
    }
    n["kind"].fail("unknown gate kind '" + kind + "'");
}

inline Gate gate(const Node& n) {
    GateSpec spec = gate_spec(n);
    try {
        return Gate(std::move(spec));
    } catch (const std::invalid_argument& e) {
        n.fail(e.what());
    }
}

inline ProjectiveMeasurement measurement(const Node& n) {
    std::vector<ProjectiveMeasurement::Outcome> outs;
    for (const auto& o : n["outcomes"].items()) {
        std::vector<std::size_t> idx;
        for (const auto& i : o["indices"].items()) idx.push_back(i.count());
        outs.push_back({static_cast<int>(o["label"].integer()), idx});
    }
    try {
        return ProjectiveMeasurement(n["dim"].count(), outs);
    } catch (const std::invalid_argument& e) {
        n.fail(e.what());
    }
}

inline StateVector state_vector(const Node& n) {
    try {
        return StateVector(n.complex_list());
    } catch (const std::invalid_argument& e) {
        n.fail(e.what());
    }
}

inline std::size_t lookup(const std::vector<std::string>& names, const Node& n, const char* what) {
    std::string s = n.str();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return i;
    n.fail(std::string("unknown ") + what + " '" + s + "'");
}

inline int tape_symbol(const std::string& alphabet, const Node& n) {
    std::string s = n.str();
    if (s == "LEFT_MARK") return kLeftMark;
    if (s == "RIGHT_MARK") return kRightMark;
    if (s.size() == 1 && alphabet.find(s[0]) != std::string::npos) return static_cast<int>(alphabet.find(s[0])) + 2;
    n.fail("unknown tape symbol '" + s + "'");
}

inline std::string alphabet(const Node& root) {
    std::string a = root["alphabet"].str();
    if (a.empty()) root["alphabet"].fail("alphabet is empty");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.find(a[i], i + 1) != std::string::npos) root["alphabet"].fail("alphabet repeats a symbol");
    return a;
}

template <class F>
auto check_invariants(const Node& root, F&& f) {
    try {
        return f();
    } catch (const IllFormedMachine& e) {
        root.fail(std::string("invariant violated: ") + e.what());
    } catch (const std::invalid_argument& e) {
        root.fail(std::string("invariant violated: ") + e.what());
    }
}

inline std::vector<std::string> state_names(const Node& n) {
    std::vector<std::string> out;
    for (const auto& x : n.items()) {
        std::string s = x.str();
        if (std::find(out.begin(), out.end(), s) != out.end()) x.fail("duplicate state name '" + s + "'");
        out.push_back(std::move(s));
    }
    if (out.empty()) n.fail("no states");
    return out;
}

inline Dfa load_dfa(const Node& root) {
    Dfa d;
    d.name = root.has("name") ? root["name"].str() : "";
    d.alphabet = alphabet(root);
    d.states = state_names(root["states"]);
    d.start = static_cast<int>(lookup(d.states, root["start"], "state"));
    d.accepting.assign(d.size(), false);
    for (const auto& a : root["accepting"].items()) d.accepting[lookup(d.states, a, "state")] = true;
    d.transition.assign(d.size() * d.alphabet.size(), -1);
    for (const auto& t : root["transitions"].items()) {
        auto s = lookup(d.states, t["state"], "state");
        std::string sym = t["symbol"].str();
        auto a = d.alphabet.find(sym.empty() ? '\0' : sym[0]);
        if (sym.size() != 1 || a == std::string::npos) t["symbol"].fail("unknown symbol '" + sym + "'");
        d.transition[s * d.alphabet.size() + a] = static_cast<int>(lookup(d.states, t["next"], "state"));
    }
    for (std::size_t i = 0; i < d.transition.size(); ++i)
        if (d.transition[i] < 0)
            root["transitions"].fail("transition missing for state '" + d.states[i / d.alphabet.size()] + "' on '" +
                                     std::string(1, d.alphabet[i % d.alphabet.size()]) + "'");
    check_invariants(root, [&] {
        validate(d);
        return 0;
    });
    return d;
}

inline Moqfa load_moqfa(const Node& root) {
    std::string name = root.has("name") ? root["name"].str() : "";
    std::string alpha = alphabet(root);
    std::vector<Gate> gates;
    Node sg = root["symbol_gates"];
    for (char c : alpha) {
        std::string key(1, c);
        gates.push_back(gate(sg[key.c_str()]));
    }
    std::vector<std::size_t> acc;
    for (const auto& a : root["accepting"].items()) acc.push_back(a.count());
    std::map<std::string, std::string> ann;
    if (root.has("annotations")) {
        Node an = root["annotations"];
        if (!an.json().is_object()) an.fail("expected an object");
        for (const auto& [k, v] : an.json().items()) {
            if (!v.is_string()) Node(v, an.path() + "/" + k).fail("expected a string");
            ann[k] = v.get<std::string>();
        }
    }
    Moqfa m{name, alpha, gates, state_vector(root["initial"]), gate(root["final_gate"]), acc, ann};
    if (root.has("quantum_dim") && root["quantum_dim"].count() != m.quantum_dim())
        root["quantum_dim"].fail("does not match the initial state");
    check_invariants(root, [&] {
        validate(m);
        return 0;
    });
    return m;
}

template <class M>
void load_common(const Node& root, M& m) {
    m.name = root.has("name") ? root["name"].str() : "";
    m.alphabet = alphabet(root);
    m.quantum_dim = root["quantum_dim"].count();
    if (m.quantum_dim == 0) root["quantum_dim"].fail("must be positive");
    m.states = state_names(root["classical_states"]);
    m.accepting.assign(m.states.size(), false);
    m.rejecting.assign(m.states.size(), false);
    for (const auto& a : root["accepting"].items()) m.accepting[lookup(m.states, a, "state")] = true;
    for (const auto& a : root["rejecting"].items()) m.rejecting[lookup(m.states, a, "state")] = true;
    Node init = root["initial"];
    m.initial_state = static_cast<StateId>(lookup(m.states, init["classical"], "state"));
    m.initial_quantum = state_vector(init["quantum"]);
    for (const auto& g : root["gates"].items()) m.gates.push_back({g["name"].str(), gate(g)});
}

inline std::vector<std::string> gate_names(const std::vector<NamedGate>& g) {
    std::vector<std::string> out;
    for (const auto& x : g) out.push_back(x.name);
    return out;
}

inline OneWayQcfa load_1qcfa(const Node& root) {
    OneWayQcfa m;
    load_common(root, m);
    m.measurement = measurement(root["measurement"]);
    auto gn = gate_names(m.gates);
    const std::size_t cells = m.states.size() * m.tape_symbols();
    m.theta.assign(cells, std::nullopt);
    m.delta.assign(cells, std::nullopt);
    for (const auto& t : root["theta"].items()) {
        auto s = static_cast<StateId>(lookup(m.states, t["state"], "state"));
        int sym = tape_symbol(m.alphabet, t["symbol"]);
        if (m.theta[m.at(s, sym)]) t.fail("duplicate theta entry");
        m.theta[m.at(s, sym)] = static_cast<int>(lookup(gn, t["gate"], "gate"));
    }
    for (const auto& t : root["delta"].items()) {
        auto s = static_cast<StateId>(lookup(m.states, t["state"], "state"));
        int sym = tape_symbol(m.alphabet, t["symbol"]);
        if (sym == kRightMark) t["symbol"].fail("one-way delta has no entry for the right end-marker");
        if (t.has("move") && t["move"].integer() != 1) t["move"].fail("one-way machines always move +1");
        if (m.delta[m.at(s, sym)]) t.fail("duplicate delta entry");
        m.delta[m.at(s, sym)] = static_cast<StateId>(lookup(m.states, t["next"], "state"));
    }
    for (const auto& v : root["verdict"].items()) {
        auto s = static_cast<StateId>(lookup(m.states, v["state"], "state"));
        int label = static_cast<int>(v["outcome"].integer());
        if (!m.verdict.emplace(std::make_pair(s, label), static_cast<StateId>(lookup(m.states, v["next"], "state"))).second)
            v.fail("duplicate verdict entry");
    }
    check_invariants(root, [&] {
        validate(m);
        return 0;
    });
    return m;
}

inline TwoWayQcfa load_2qcfa(const Node& root) {
    TwoWayQcfa m;
    load_common(root, m);
    std::vector<std::string> mn;
    for (const auto& x : root["measurements"].items()) {
        m.measurements.push_back({x["name"].str(), measurement(x)});
        mn.push_back(m.measurements.back().name);
    }
    auto gn = gate_names(m.gates);
    const std::size_t cells = m.states.size() * m.tape_symbols();
    m.theta.assign(cells, std::nullopt);
    m.delta_unitary.assign(cells, std::nullopt);
    for (const auto& t : root["theta"].items()) {
        auto s = static_cast<StateId>(lookup(m.states, t["state"], "state"));
        int sym = tape_symbol(m.alphabet, t["symbol"]);
        if (m.theta[m.at(s, sym)]) t.fail("duplicate theta entry");
        if (t.has("gate") == t.has("measurement")) t.fail("theta entry needs exactly one of 'gate' or 'measurement'");
        if (t.has("gate"))
            m.theta[m.at(s, sym)] = QuantumAction{QuantumAction::Kind::unitary, static_cast<int>(lookup(gn, t["gate"], "gate"))};
        else
            m.theta[m.at(s, sym)] =
                QuantumAction{QuantumAction::Kind::measurement, static_cast<int>(lookup(mn, t["measurement"], "measurement"))};
    }
    for (const auto& t : root["delta"].items()) {
        auto s = static_cast<StateId>(lookup(m.states, t["state"], "state"));
        int sym = tape_symbol(m.alphabet, t["symbol"]);
        ClassicalMove mv{static_cast<StateId>(lookup(m.states, t["next"], "state")), static_cast<int>(t["move"].integer())};
        if (mv.move < -1 || mv.move > 1) t["move"].fail("head move must be -1, 0 or +1");
        if (t.has("outcome")) {
            if (!m.delta_measure.emplace(std::make_tuple(s, sym, static_cast<int>(t["outcome"].integer())), mv).second)
                t.fail("duplicate delta entry");
        } else {
            if (m.delta_unitary[m.at(s, sym)]) t.fail("duplicate delta entry");
            m.delta_unitary[m.at(s, sym)] = mv;
        }
    }
    if (root.has("annotations")) {
        Node an = root["annotations"];
        if (an.has("loop_state")) m.annotations.loop_state = static_cast<StateId>(lookup(m.states, an["loop_state"], "state"));
        if (an.has("walk_states"))
            for (const auto& w : an["walk_states"].items())
                m.annotations.walk_states.push_back(static_cast<StateId>(lookup(m.states, w, "state")));
    }
    check_invariants(root, [&] {
        validate(m);
        return 0;
    });
    return m;
}

}  // namespace detail

inline Machine spec_load(const Json& doc) {
    detail::Node root(doc, "");
    if (!doc.is_object()) root.fail("machine document must be an object");
    if (root["format_version"].integer() != kFormatVersion)
        root["format_version"].fail("unsupported format version (expected " + std::to_string(kFormatVersion) + ")");
    std::string model = root["model"].str();
    if (model == "dfa") return detail::load_dfa(root);
    if (model == "moqfa") return detail::load_moqfa(root);
    if (model == "1qcfa") return detail::load_1qcfa(root);
    if (model == "2qcfa") return detail::load_2qcfa(root);
    root["model"].fail("unknown model '" + model + "'");
}

inline Machine spec_load_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw LoadError("/", std::string("not valid JSON: ") + e.what());
    }
    return spec_load(doc);
}

inline std::string spec_dump(const Machine& m) { return spec_save(m).dump(2) + "\n"; }

inline Machine spec_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open machine spec '" + path + "': file not found or unreadable");
    std::stringstream ss;
    ss << in.rdbuf();
    return spec_load_text(ss.str());
}

}  // namespace sqfa
