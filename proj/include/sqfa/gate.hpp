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

// Gates are unitaries that remember how they were described, so a machine
// can be written back out as "rotation(pi/5)" instead of a bag of floats and
// so exact analysis can see rational rotation angles.

#pragma once

#include "sqfa/quantum.hpp"
#include "sqfa/rational.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace sqfa {

struct GateSpec;

struct IdentityGate {
    std::size_t dim = 1;
    bool operator==(const IdentityGate&) const = default;
};

/// 2x2 rotation by pi * angle. A Rational angle is exact; a double is not.
struct RotationGate {
    std::variant<Rational, double> angle_pi;
    bool operator==(const RotationGate&) const = default;
};

/// [[sqrt w, -sqrt(1-w)], [sqrt(1-w), sqrt w]]: sends |0> to a state that
/// reads |0> with probability exactly w.
struct SplitGate {
    Rational weight;
    bool operator==(const SplitGate&) const = default;
};

/// Direct sum of 2x2 rotations, block j acting on basis states 2j, 2j+1.
struct BlockRotationGate {
    std::vector<Rational> angles_pi;
    bool operator==(const BlockRotationGate&) const = default;
};

/// Identity except |index> -> -|index>.
struct PhaseFlipGate {
    std::size_t dim = 1;
    std::size_t index = 0;
    bool operator==(const PhaseFlipGate&) const = default;
};

/// complete_unitary_from_first_column(column), or its adjoint.
struct HouseholderGate {
    std::vector<Amplitude> column;
    bool adjoint = false;
    bool operator==(const HouseholderGate&) const = default;
};

struct MatrixGate {
    std::size_t dim = 1;
    std::vector<Amplitude> entries;
    bool operator==(const MatrixGate&) const = default;
};

/// Kronecker product of the factors, left to right.
struct TensorGate {
    std::vector<GateSpec> factors;
    bool operator==(const TensorGate&) const;
};

struct GateSpec {
    std::variant<IdentityGate, RotationGate, SplitGate, BlockRotationGate, PhaseFlipGate, HouseholderGate,
                 MatrixGate, TensorGate>
        v;
    bool operator==(const GateSpec&) const = default;
};

inline bool TensorGate::operator==(const TensorGate& o) const { return factors == o.factors; }

namespace detail {

// cos/sin of pi * a, exact on multiples of pi/2
inline std::pair<double, double> cos_sin_pi(const Rational& a) {
    Rational twice = a * 2;
    if (twice.denominator() == 1) {
        std::int64_t q = ((twice.numerator() % 4) + 4) % 4;
        static constexpr double c[4] = {1, 0, -1, 0};
        static constexpr double s[4] = {0, 1, 0, -1};
        return {c[q], s[q]};
    }
    double t = std::numbers::pi * to_double(a);
    return {std::cos(t), std::sin(t)};
}

inline UnitaryOp rotation_pi(const Rational& a) {
    auto [c, s] = cos_sin_pi(a);
    return UnitaryOp(2, {c, -s, s, c});
}

inline UnitaryOp materialize(const GateSpec& g) {
    return std::visit(
        [](const auto& x) -> UnitaryOp {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IdentityGate>) {
                return UnitaryOp::identity(x.dim);
            } else if constexpr (std::is_same_v<T, RotationGate>) {
                if (auto* r = std::get_if<Rational>(&x.angle_pi)) return rotation_pi(*r);
                return rotation(std::numbers::pi * std::get<double>(x.angle_pi));
            } else if constexpr (std::is_same_v<T, SplitGate>) {
                if (x.weight < 0 || x.weight > 1) throw std::invalid_argument("split weight must lie in [0, 1]");
                double a = std::sqrt(to_double(x.weight));
                double b = std::sqrt(to_double(1 - x.weight));
                return UnitaryOp(2, {a, -b, b, a});
            } else if constexpr (std::is_same_v<T, BlockRotationGate>) {
                std::size_t d = 2 * x.angles_pi.size();
                if (d == 0) throw std::invalid_argument("block rotation needs at least one block");
                std::vector<Amplitude> e(d * d, 0.0);
                for (std::size_t j = 0; j < x.angles_pi.size(); ++j) {
                    auto [c, s] = cos_sin_pi(x.angles_pi[j]);
                    e[(2 * j) * d + 2 * j] = c;
                    e[(2 * j) * d + 2 * j + 1] = -s;
                    e[(2 * j + 1) * d + 2 * j] = s;
                    e[(2 * j + 1) * d + 2 * j + 1] = c;
                }
                return UnitaryOp(d, std::move(e));
            } else if constexpr (std::is_same_v<T, PhaseFlipGate>) {
                if (x.index >= x.dim) throw std::invalid_argument("phase flip index out of range");
                std::vector<Amplitude> e(x.dim * x.dim, 0.0);
                for (std::size_t i = 0; i < x.dim; ++i) e[i * x.dim + i] = (i == x.index) ? -1.0 : 1.0;
                return UnitaryOp(x.dim, std::move(e));
            } else if constexpr (std::is_same_v<T, HouseholderGate>) {
                UnitaryOp u = complete_unitary_from_first_column(StateVector(x.column));
                return x.adjoint ? u.adjoint() : u;
            } else if constexpr (std::is_same_v<T, MatrixGate>) {
                return UnitaryOp(x.dim, x.entries);
            } else {
                if (x.factors.empty()) throw std::invalid_argument("tensor gate needs factors");
                UnitaryOp acc = materialize(x.factors.front());
                for (std::size_t i = 1; i < x.factors.size(); ++i) acc = acc.tensor(materialize(x.factors[i]));
                return acc;
            }
        },
        g.v);
}

}  // namespace detail

/// Rotation angle of a 2x2 real rotation gate, kept symbolically: the gate is
/// R(pi * angle_pi) followed by at most one split rotation.
struct ExactAngle {
    Rational angle_pi{0};
    std::optional<Rational> split;
};

inline std::optional<ExactAngle> exact_angle(const GateSpec& g) {
    if (auto* id = std::get_if<IdentityGate>(&g.v); id && id->dim == 2) return ExactAngle{};
    if (auto* r = std::get_if<RotationGate>(&g.v))
        if (auto* a = std::get_if<Rational>(&r->angle_pi)) return ExactAngle{*a, std::nullopt};
    if (auto* s = std::get_if<SplitGate>(&g.v)) return ExactAngle{Rational(0), s->weight};
    return std::nullopt;
}

inline std::string describe(const GateSpec& g) {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IdentityGate>) {
                os << "identity(" << x.dim << ")";
            } else if constexpr (std::is_same_v<T, RotationGate>) {
                os << "rotation(pi*";
                if (auto* r = std::get_if<Rational>(&x.angle_pi)) os << to_string(*r);
                else os << std::get<double>(x.angle_pi);
                os << ")";
            } else if constexpr (std::is_same_v<T, SplitGate>) {
                os << "split(" << to_string(x.weight) << ")";
            } else if constexpr (std::is_same_v<T, BlockRotationGate>) {
                os << "block_rotation(" << x.angles_pi.size() << " blocks)";
            } else if constexpr (std::is_same_v<T, PhaseFlipGate>) {
                os << "phase_flip(" << x.index << " of " << x.dim << ")";
            } else if constexpr (std::is_same_v<T, HouseholderGate>) {
                os << (x.adjoint ? "householder_adjoint(" : "householder(") << x.column.size() << ")";
            } else if constexpr (std::is_same_v<T, MatrixGate>) {
                os << "matrix(" << x.dim << ")";
            } else {
                os << "tensor(";
                for (std::size_t i = 0; i < x.factors.size(); ++i) os << (i ? ", " : "") << describe(x.factors[i]);
                os << ")";
            }
        },
        g.v);
    return os.str();
}

/// A described unitary. Equality compares descriptions.
class Gate {
  public:
    explicit Gate(GateSpec spec) : spec_(std::move(spec)), op_(detail::materialize(spec_)) {}

    const GateSpec& spec() const { return spec_; }
    const UnitaryOp& op() const { return op_; }
    std::size_t dim() const { return op_.dim(); }

    bool operator==(const Gate& o) const { return spec_ == o.spec_; }

  private:
    GateSpec spec_;
    UnitaryOp op_;
};

inline Gate identity_gate(std::size_t dim) { return Gate({IdentityGate{dim}}); }
inline Gate rotation_gate(Rational angle_pi) { return Gate({RotationGate{angle_pi}}); }
inline Gate rotation_gate_irrational(double angle_pi) { return Gate({RotationGate{angle_pi}}); }
inline Gate split_gate(Rational weight) { return Gate({SplitGate{weight}}); }

}  // namespace sqfa
