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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Details of each check follow its line, indented.

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

using namespace sqfa;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) notes << "    first failure: " << what << '\n';
            ok = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string unary(std::size_t k) { return std::string(k, 'a'); }

int failures = 0;

void report(int id, const std::string& title, const Check& c) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << '\n' << c.notes.str();
    std::cout.flush();
    if (!c.ok) ++failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// -------------------------------------------------------------------------
// 1

Check promised_equality() {
    Check c;
    auto t0 = Clock::now();
    std::size_t words = 0;
    for (int n : {2, 4, 6, 8}) {
        auto m = eq_1qcfa(n);
        for (const auto& w : promise_instances(n)) {
            auto r = acceptance_oneway(m, w);
            ++words;
            if (classify_eq(n, w) == Membership::yes) c.require(std::fabs(r.p_accept - 1) <= 1e-9, "accept " + w);
            else c.require(std::fabs(r.p_reject - 1) <= 1e-9, "reject " + w);
        }
    }
    const double secs = seconds_since(t0);
    c.require(secs < 60, "runtime " + fmt(secs) + " s");
    c.notes << "    " << words << " promise instances for n in {2,4,6,8}, " << fmt(secs) << " s\n";
    return c;
}

// -------------------------------------------------------------------------
// 2

Check mod_one_sided() {
    Check c;
    std::size_t words = 0;
    double worst_nonmember = 1.0;
    for (int p : {2, 3, 5, 6, 7, 30}) {
        for (Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
            auto m = mod_2qcfa(p, eps);
            const Rational weight = 4 * eps / Rational(p * p);
            const double e = to_double(eps);
            for (int k = 1; k <= 5 * p; ++k) {
                const auto w = unary(static_cast<std::size_t>(k));
                auto it = iteration_analysis(m, w);
                const double s = std::sin(k * kPi / p);
                c.require(std::fabs(it.p_reject - s * s) <= 1e-9, m.name + " step-3 rejection on a^" + std::to_string(k));
                if (k % p == 0) {
                    c.require(it.exact_accept && *it.exact_accept == weight,
                              m.name + " P_a on a^" + std::to_string(k) + " is not exactly 4eps/p^2");
                    c.require(it.exact_reject && *it.exact_reject == Rational(0), m.name + " P_r nonzero on member");
                }
                auto a = acceptance(m, w);
                ++words;
                if (k % p == 0) {
                    c.require(std::fabs(a.p_accept - 1) <= 1e-9, m.name + " member a^" + std::to_string(k));
                } else {
                    c.require(a.p_reject >= 1 - e, m.name + " nonmember a^" + std::to_string(k) + " rejected with " +
                                                       fmt(a.p_reject));
                    worst_nonmember = std::min(worst_nonmember, a.p_reject - (1 - e));
                }
            }
        }
    }
    c.notes << "    " << words << " words, smallest slack on nonmembers " << fmt(worst_nonmember) << '\n';
    return c;
}

// -------------------------------------------------------------------------
// 3

Check length_one_sided() {
    Check c;
    std::size_t words = 0;
    for (int m : {1, 2, 4, 8}) {
        for (Rational eps : {Rational(1, 2), Rational(1, 4)}) {
            auto q = len_2qcfa(m, eps);
            const double e = to_double(eps);
            for (int n = 1; n <= 3 * m; ++n) {
                const auto w = unary(static_cast<std::size_t>(n));
                auto it = iteration_analysis(q, w);
                auto a = acceptance(q, w);
                ++words;
                if (n == m) {
                    const double want = e / (2.0 * m * m * (n + 1.0) * (n + 1.0));
                    c.require(std::fabs(it.p_accept - want) <= 1e-9, q.name + " member P_a");
                    c.require(std::fabs(a.p_accept - 1) <= 1e-9, q.name + " member a^" + std::to_string(n));
                } else {
                    c.require(a.p_reject >= 1 - e, q.name + " nonmember a^" + std::to_string(n) + " rejected with " +
                                                       fmt(a.p_reject));
                }
            }
        }
    }
    double worst = 0;
    for (int n = 1; n <= 10'000; ++n) worst = std::max(worst, std::fabs(walk_absorption(n).p_right - 1.0 / (n + 1)));
    c.require(worst <= 1e-9, "walk absorption deviates by " + fmt(worst));
    c.notes << "    " << words << " words; walk absorption max |p - 1/(n+1)| = " << fmt(worst) << " over n <= 10^4\n";
    return c;
}

// -------------------------------------------------------------------------
// 4

Check closed_form_series() {
    Check c;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const double pa = u(rng), pr = u(rng);
        auto t = loop_total(pa, pr);
        worst = std::max(worst, std::fabs(t.p_reject - oracle::geometric_series(pa, pr, pr, 1e-16)));
        worst = std::max(worst, std::fabs(t.p_accept - oracle::geometric_series(pa, pr, pa * (1 - pr), 1e-16)));
    }
    c.require(worst <= 1e-12, "series deviation " + fmt(worst));
    auto worked = loop_total(Rational(1, 36), Rational(3, 4));
    c.require(*worked.exact_reject == Rational(108, 109), "(1/36, 3/4) gives " + to_string(*worked.exact_reject));
    c.notes << "    max deviation " << fmt(worst) << " over 100 pairs; (1/36, 3/4) -> reject "
            << to_string(*worked.exact_reject) << '\n';
    return c;
}

// -------------------------------------------------------------------------
// 5

Check monte_carlo() {
    Check c;
    auto t0 = Clock::now();
    struct Case {
        Machine m;
        std::vector<std::string> words;
    };
    const std::vector<Case> cases{
        {mod_2qcfa(3, Rational(1, 4)), {"a", "aa", "aaa", "aaaa", "aaaaaa"}},
        {mod_2qcfa(30, Rational(1, 10)), {unary(1), unary(15), unary(29), unary(30), unary(31)}},
        {len_2qcfa(2, Rational(1, 2)), {"a", "aa", "aaa", "ab", "aaaa"}},
        {len_2qcfa(4, Rational(1, 4)), {"a", "aaa", "aaaa", "aabb", "aaaaa"}},
    };
    const std::uint64_t runs = 100'000, seed = 20260101;
    std::size_t inside = 0, total = 0;
    for (const auto& cs : cases) {
        for (const auto& w : cs.words) {
            auto exact = acceptance(cs.m, w);
            auto e = estimate(cs.m, w, runs, seed);
            const double sigma3 = 3 * std::sqrt(exact.p_accept * (1 - exact.p_accept) / static_cast<double>(runs));
            const double dev = std::fabs(e.p_accept_hat - exact.p_accept);
            const double censored = static_cast<double>(e.censored) / static_cast<double>(runs);
            ++total;
            const bool ok = dev <= sigma3 + 1e-12;
            inside += ok;
            c.require(ok, machine_name(cs.m) + " on " + w + ": |p_hat - p| = " + fmt(dev) + " > " + fmt(sigma3));
            c.require(censored < 0.01, machine_name(cs.m) + " on " + w + ": censored " + fmt(censored));
        }
    }
    const double secs = seconds_since(t0);
    c.require(secs < 300, "runtime " + fmt(secs) + " s");
    c.notes << "    " << inside << "/" << total << " words inside 3 sigma, 10^5 runs each, seed " << seed << ", "
            << fmt(secs) << " s\n";
    return c;
}

// -------------------------------------------------------------------------
// 6

double affine_misfit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    double worst = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::fabs(ys[i] - (icept + slope * xs[i])) / ys[i]);
    return slope > 0 ? worst : std::numeric_limits<double>::infinity();
}

Check scaling() {
    Check c;
    // L(p): affine in n over n in {p, 2p, 4p, 8p}
    double worst_affine = 0;
    for (int p : {3, 5, 7, 11}) {
        auto m = mod_2qcfa(p, Rational(1, 4));
        std::vector<double> xs, ys;
        for (int k : {1, 2, 4, 8}) {
            xs.push_back(k * p);
            ys.push_back(acceptance(m, unary(static_cast<std::size_t>(k * p))).expected_steps);
        }
        worst_affine = std::max(worst_affine, affine_misfit(xs, ys));
    }
    c.require(worst_affine <= 0.10, "L(p) misfit from a line " + fmt(worst_affine));
    c.notes << "    L(p): largest deviation from a fitted line " << fmt(worst_affine) << " (limit 0.10)\n";

    // C(m): doubling n should multiply expected steps by 16
    for (int m : {2, 4}) {
        auto q = len_2qcfa(m, Rational(1, 4));
        std::vector<double> e;
        for (int k : {1, 2, 4}) e.push_back(acceptance(q, unary(static_cast<std::size_t>(k * m))).expected_steps);
        const double r1 = e[1] / e[0], r2 = e[2] / e[1];
        const bool ok = std::fabs(r1 / 16 - 1) <= 0.25 && std::fabs(r2 / 16 - 1) <= 0.25;
        c.require(ok, "C(" + std::to_string(m) + ") doubling ratios " + fmt(r1) + ", " + fmt(r2) + " (want 16)");
        c.notes << "    C(" << m << "): E[steps] at n = m, 2m, 4m: " << fmt(e[0]) << ", " << fmt(e[1]) << ", "
                << fmt(e[2]) << "; doubling ratios " << fmt(r1) << ", " << fmt(r2) << " (want 16 +- 25%)\n";
    }
    return c;
}

// -------------------------------------------------------------------------
// 7

Check tradeoff() {
    Check c;
    std::size_t machines = 0;
    for (std::int64_t p : {6, 12, 15, 30}) {
        for (const auto& t : all_partitions(p)) {
            auto m = tradeoff_1qcfa(t, Rational(1, 4));
            ++machines;
            const auto q1 = moqfa_mod(static_cast<int>(t.q1()), Rational(1, 4));
            c.require(m.quantum_dim == q1.quantum_dim(), m.name + " quantum dimension");
            c.require(m.classical_count() <= static_cast<std::size_t>(3 * (t.q2() + 1)), m.name + " classical count");
            std::vector<std::string> ws;
            for (std::int64_t k = 1; k <= 4 * p; ++k) ws.push_back(unary(static_cast<std::size_t>(k)));
            auto rep = verify_mode(Machine(m), AcceptanceMode::one_sided(0.25),
                                   [p](std::string_view w) { return classify_mod(static_cast<int>(p), w); }, ws);
            c.require(rep.pass, m.name + " fails one-sided verification");
            c.notes << "    p=" << p << " q1=" << t.q1() << " q2=" << t.q2() << ": quantum " << m.quantum_dim
                    << ", classical " << m.classical_count() << " (<= " << 3 * (t.q2() + 1) << "), margin "
                    << fmt(rep.min_margin) << '\n';
        }
    }
    c.require(machines == 2 + 2 + 2 + 6, "unexpected number of partitions");
    return c;
}

// -------------------------------------------------------------------------
// 8

Check state_counts() {
    Check c;
    for (int p = 2; p <= 30; ++p)
        for (Rational eps : {Rational(1, 2), Rational(1, 10)}) {
            auto m = mod_2qcfa(p, eps);
            c.require(m.quantum_dim == 2, m.name + " quantum dimension");
            c.require(m.classical_count() == 8, m.name + " classical count");
        }
    for (int m = 1; m <= 10; ++m)
        for (Rational eps : {Rational(1, 2), Rational(1, 10)}) {
            auto q = len_2qcfa(m, eps);
            c.require(q.quantum_dim == 2, q.name + " quantum dimension");
            c.require(q.classical_count() == len_2qcfa(1, Rational(1, 2)).classical_count(), q.name + " classical count");
        }
    for (int n = 1; n <= 12; ++n) c.require(eq_1qcfa(n).quantum_dim == static_cast<std::size_t>(n), "eq quantum dim");
    for (int p = 1; p <= 12; ++p) {
        auto oracle_count = oracle::nerode_classes(
            "a", [p](const std::string& w) { return w.size() % p == 0; }, p + 2, p + 2);
        c.require(dfa_minimize(dfa_mod(p)).size() == oracle_count && oracle_count == static_cast<std::size_t>(p),
                  "dfa_mod(" + std::to_string(p) + ") minimal size");
    }
    for (int m = 1; m <= 6; ++m) {
        auto oracle_count = oracle::nerode_classes(
            "ab", [m](const std::string& w) { return w.size() == static_cast<std::size_t>(m); }, m + 2, m + 1);
        c.require(dfa_minimize(dfa_len(m)).size() == oracle_count && oracle_count == static_cast<std::size_t>(m + 2),
                  "dfa_len(" + std::to_string(m) + ") minimal size");
    }
    auto l = complexity_row(Family::mod_p, 5);
    auto eq = complexity_row(Family::equality, 8);
    c.require(!l.entry("2pfa_lower_bound").constructed && !eq.entry("1dfa").constructed,
              "lower-bound columns must be formula rows");
    c.notes << "    2QCFA: 2 quantum / 8 classical (L), 2 quantum / " << len_2qcfa(1, Rational(1, 2)).classical_count()
            << " classical (C); eq_1qcfa(n): n quantum; minimal DFAs p and m+2; lower bounds reported as formulas\n";
    return c;
}

// -------------------------------------------------------------------------
// 9

template <class Gates>
double worst_gate(const Gates& gates) {
    double w = 0;
    for (const auto& g : gates) w = std::max(w, g.gate.op().unitarity_defect());
    return w;
}

double unitarity(const Machine& m) {
    return std::visit(
        [](const auto& x) -> double {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Dfa>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, Moqfa>) {
                double w = x.final_gate.op().unitarity_defect();
                for (const auto& g : x.symbol_gates) w = std::max(w, g.op().unitarity_defect());
                return w;
            } else {
                return worst_gate(x.gates);
            }
        },
        m);
}

bool measurements_complete(const Machine& m) {
    auto complete = [](const ProjectiveMeasurement& pm) {
        std::vector<int> seen(pm.dim(), 0);
        for (const auto& o : pm.outcomes())
            for (auto i : o.indices) ++seen[i];
        return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    };
    if (auto* o = std::get_if<OneWayQcfa>(&m)) return complete(o->measurement);
    if (auto* t = std::get_if<TwoWayQcfa>(&m))
        return std::all_of(t->measurements.begin(), t->measurements.end(),
                           [&](const NamedMeasurement& x) { return complete(x.measurement); });
    return true;
}

Check well_formed() {
    Check c;
    std::vector<Machine> ms;
    for (int p : {1, 2, 3, 5, 6, 7, 30}) ms.push_back(dfa_mod(p));
    for (int m : {1, 2, 4, 8}) ms.push_back(dfa_len(m));
    for (int n : {1, 2, 4, 6, 8}) ms.push_back(eq_1qcfa(n));
    for (int p : {1, 2, 3, 5, 6, 7, 30})
        for (Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) ms.push_back(mod_2qcfa(p, eps));
    for (int m : {1, 2, 4, 8})
        for (Rational eps : {Rational(1, 2), Rational(1, 4)}) ms.push_back(len_2qcfa(m, eps));
    for (int p : {2, 3, 5, 7}) ms.push_back(moqfa_mod(p, Rational(1, 4)));
    for (std::int64_t p : {6, 12, 15, 30})
        for (const auto& t : all_partitions(p)) ms.push_back(tradeoff_1qcfa(t, Rational(1, 4)));
    ms.push_back(lift(dfa_len(3)));
    ms.push_back(intersect_1qcfa(eq_1qcfa(2), eq_1qcfa(2)));

    double worst = 0;
    for (const auto& m : ms) {
        const auto& name = machine_name(m);
        try {
            validate(m);
        } catch (const std::exception& e) {
            c.require(false, name + ": " + e.what());
        }
        const double d = unitarity(m);
        worst = std::max(worst, d);
        c.require(d <= kTolUnitary, name + " unitarity defect " + fmt(d));
        c.require(measurements_complete(m), name + " measurement incomplete");
        try {
            c.require(spec_load_text(spec_dump(m)) == m, name + " spec round trip differs");
        } catch (const std::exception& e) {
            c.require(false, name + " spec round trip: " + e.what());
        }
    }
    c.notes << "    " << ms.size() << " machines; worst unitarity defect " << fmt(worst) << '\n';
    return c;
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    report(1, "exactness of promised equality", promised_equality());
    report(2, "one-sided error for L(p)", mod_one_sided());
    report(3, "one-sided error for C(m)", length_one_sided());
    report(4, "closed form vs geometric series", closed_form_series());
    report(5, "Monte Carlo cross-validation", monte_carlo());
    report(6, "runtime scaling", scaling());
    report(7, "trade-off machines", tradeoff());
    report(8, "state-count table", state_counts());
    report(9, "well-formedness", well_formed());
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << " ("
              << fmt(seconds_since(t0)) << " s)\n";
    return failures ? 1 : 0;
}
