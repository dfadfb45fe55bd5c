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

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace sqfa;

namespace {

std::vector<Machine> every_factory() {
    return {dfa_mod(4),
            dfa_len(3),
            dfa_minimize(dfa_product(dfa_mod(2), dfa_mod(3))),
            moqfa_mod(5, Rational(1, 2)),
            moqfa_mod(2, Rational(1, 4)),
            eq_1qcfa(3),
            lift(dfa_mod(3)),
            lift(moqfa_mod(3, Rational(1, 4))),
            intersect_1qcfa(lift(moqfa_mod(3, Rational(1, 4))), lift(dfa_mod(2))),
            tradeoff_1qcfa(make_partition(15, 5), Rational(1, 4)),
            mod_2qcfa(3, Rational(1, 4)),
            mod_2qcfa(7, Rational(1, 10)),
            len_2qcfa(2, Rational(1, 2)),
            len_2qcfa(3, Rational(1, 4), "xyz")};
}

Json find_gate(const Json& doc, const std::string& name) {
    for (const auto& g : doc["gates"])
        if (g["name"] == name) return g;
    return {};
}

LoadError load_error(const Json& doc) {
    try {
        spec_load(doc);
    } catch (const LoadError& e) {
        return e;
    }
    ADD_FAILURE() << "document loaded without error";
    return LoadError("", "");
}

}  // namespace

TEST(SpecRoundTrip, EveryFactoryRoundTrips) {
    for (const auto& m : every_factory()) {
        auto text = spec_dump(m);
        auto back = spec_load_text(text);
        EXPECT_EQ(back, m) << machine_name(m);
        EXPECT_EQ(spec_dump(back), text) << machine_name(m);
    }
}

TEST(SpecRoundTrip, BehaviourSurvives) {
    Machine m = mod_2qcfa(3, Rational(1, 4));
    auto back = spec_load_text(spec_dump(m));
    EXPECT_EQ(*acceptance(back, "aa").exact_reject, *acceptance(m, "aa").exact_reject);
    Machine q = tradeoff_1qcfa(make_partition(6, 3), Rational(1, 4));
    auto q2 = spec_load_text(spec_dump(q));
    for (std::size_t k = 0; k <= 12; ++k)
        EXPECT_DOUBLE_EQ(acceptance(q2, std::string(k, 'a')).p_accept, acceptance(q, std::string(k, 'a')).p_accept);
}

TEST(SpecRoundTrip, FileHelpers) {
    const std::string path = ::testing::TempDir() + "sqfa_spec_roundtrip.json";
    {
        std::ofstream out(path);
        out << spec_dump(Machine(eq_1qcfa(2)));
    }
    EXPECT_EQ(spec_load_file(path), Machine(eq_1qcfa(2)));
    std::remove(path.c_str());
    try {
        spec_load_file(path);
        FAIL() << "missing file loaded";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find(path), std::string::npos);
    }
}

TEST(SpecFormat, RationalAnglesStayExact) {
    auto doc = spec_save(Machine(mod_2qcfa(3, Rational(1, 4))));
    EXPECT_EQ(doc["model"], "2qcfa");
    EXPECT_EQ(doc["format_version"], kFormatVersion);
    auto u = find_gate(doc, "U_p");
    EXPECT_EQ(u["kind"], "rotation");
    EXPECT_EQ(u["angle_pi"], "1/3");
    EXPECT_EQ(find_gate(doc, "U_p_eps")["weight"], "1/9");
    EXPECT_EQ(doc["annotations"]["loop_state"], "start");
    // irrational angles are plain numbers
    auto len = spec_save(Machine(len_2qcfa(2, Rational(1, 2))));
    EXPECT_TRUE(find_gate(len, "U_alpha")["angle_pi"].is_number_float());
}

TEST(SpecFormat, EndMarkersHaveNames) {
    auto doc = spec_save(Machine(mod_2qcfa(2, Rational(1, 2))));
    bool left = false, right = false;
    for (const auto& t : doc["theta"]) {
        left = left || t["symbol"] == "LEFT_MARK";
        right = right || t["symbol"] == "RIGHT_MARK";
    }
    EXPECT_TRUE(left && right);
}

TEST(SpecLoad, NonUnitaryMatrixNamesTheGate) {
    auto doc = spec_save(Machine(mod_2qcfa(3, Rational(1, 4))));
    for (auto& g : doc["gates"])
        if (g["name"] == "U_reset") {
            g = Json{{"kind", "matrix"}, {"dim", 2}, {"entries", Json::array({{1.5, 0}, {0, 0}, {0, 0}, {1, 0}})},
                     {"name", "U_reset"}};
        }
    auto e = load_error(doc);
    EXPECT_EQ(e.location.rfind("/gates/", 0), 0u) << e.location;
    EXPECT_NE(std::string(e.what()).find("unitar"), std::string::npos) << e.what();
}

TEST(SpecLoad, OverlappingProjectorsAreRejected) {
    auto doc = spec_save(Machine(eq_1qcfa(2)));
    doc["measurement"]["outcomes"][1]["indices"] = Json::array({0});
    auto e = load_error(doc);
    EXPECT_NE(e.location.find("measurement"), std::string::npos) << e.location;
}

TEST(SpecLoad, SchemaViolationsCarryLocations) {
    auto base = spec_save(Machine(dfa_mod(3)));
    {
        auto doc = base;
        doc.erase("start");
        EXPECT_EQ(load_error(doc).location, "/start");
    }
    {
        auto doc = base;
        doc["transitions"][1]["next"] = "nowhere";
        EXPECT_EQ(load_error(doc).location, "/transitions/1/next");
    }
    {
        auto doc = base;
        doc["format_version"] = 99;
        EXPECT_EQ(load_error(doc).location, "/format_version");
    }
    {
        auto doc = base;
        doc["model"] = "turing";
        EXPECT_EQ(load_error(doc).location, "/model");
    }
    EXPECT_THROW(spec_load_text("{not json"), LoadError);
    EXPECT_THROW(spec_load_text("[1, 2]"), LoadError);
}

TEST(SpecLoad, InvariantViolationsAreLoadErrors) {
    auto doc = spec_save(Machine(mod_2qcfa(3, Rational(1, 4))));
    auto& delta = doc["delta"];
    delta.erase(delta.begin());
    auto e = load_error(doc);
    EXPECT_NE(std::string(e.what()).find("invariant violated"), std::string::npos) << e.what();
}
