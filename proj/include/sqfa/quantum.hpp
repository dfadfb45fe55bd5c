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

// Pure-state quantum register of small dimension: state vectors, unitary
// matrices and projective measurements onto sets of computational basis
// states. Everything is a value type; operations never mutate their inputs.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqfa {

using Amplitude = std::complex<double>;

inline constexpr double kTolNorm = 1e-9;
inline constexpr double kTolUnitary = 1e-9;
inline constexpr double kTolPrune = 1e-12;

class UnitaryOp;

class StateVector {
  public:
    /// Checked construction: amplitudes must be finite and of norm 1.
    explicit StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
        if (amps_.empty()) throw std::invalid_argument("state vector must have positive dimension");
        for (const auto& a : amps_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw std::invalid_argument("state vector has a non-finite amplitude");
        }
        if (std::fabs(norm_squared() - 1.0) > kTolNorm)
            throw std::invalid_argument("state vector is not normalized (norm^2 = " +
                                        std::to_string(norm_squared()) + ")");
    }

    static StateVector basis(std::size_t dim, std::size_t index) {
        if (index >= dim) throw std::invalid_argument("basis index out of range");
        std::vector<Amplitude> a(dim, 0.0);
        a[index] = 1.0;
        return StateVector(std::move(a));
    }

    std::size_t dim() const { return amps_.size(); }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    double norm_squared() const {
        return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                               [](double s, const Amplitude& a) { return s + std::norm(a); });
    }

    double probability(std::size_t i) const { return std::norm(amps_[i]); }

    bool operator==(const StateVector&) const = default;

  private:
    struct Unchecked {};
    StateVector(std::vector<Amplitude> amps, Unchecked) : amps_(std::move(amps)) {}

    friend class UnitaryOp;
    friend StateVector collapse(const StateVector&, std::span<const std::size_t>, double);

    std::vector<Amplitude> amps_;
};

/// |<a|b>|^2 == 1, i.e. equal up to a global phase.
inline bool same_ray(const StateVector& a, const StateVector& b, double tol = kTolNorm) {
    if (a.dim() != b.dim()) return false;
    Amplitude overlap = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(a[i]) * b[i];
    return std::fabs(std::norm(overlap) - 1.0) <= tol;
}

/// Dense square matrix checked to be unitary on construction.
class UnitaryOp {
  public:
    /// Row-major entries; throws std::invalid_argument unless U^dagger U = I
    /// entry-wise within kTolUnitary.
    UnitaryOp(std::size_t dim, std::vector<Amplitude> entries) : dim_(dim), m_(std::move(entries)) {
        if (dim_ == 0) throw std::invalid_argument("unitary must have positive dimension");
        if (m_.size() != dim_ * dim_) throw std::invalid_argument("unitary entry count does not match dimension");
        for (const auto& a : m_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw std::invalid_argument("unitary has a non-finite entry");
        }
        if (double dev = unitarity_defect(); dev > kTolUnitary)
            throw std::invalid_argument("matrix is not unitary (max |U^dagger U - I| = " + std::to_string(dev) + ")");
    }

    static UnitaryOp identity(std::size_t dim) {
        std::vector<Amplitude> e(dim * dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
        return UnitaryOp(dim, std::move(e));
    }

    std::size_t dim() const { return dim_; }
    const Amplitude& operator()(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
    std::span<const Amplitude> entries() const { return m_; }

    StateVector apply(const StateVector& psi) const {
        if (psi.dim() != dim_) throw std::invalid_argument("dimension mismatch applying unitary");
        std::vector<Amplitude> out(dim_, 0.0);
        for (std::size_t r = 0; r < dim_; ++r) {
            Amplitude acc = 0.0;
            const Amplitude* row = &m_[r * dim_];
            for (std::size_t c = 0; c < dim_; ++c) acc += row[c] * psi.amps_[c];
            out[r] = acc;
        }
        return StateVector(std::move(out), StateVector::Unchecked{});
    }

    UnitaryOp adjoint() const {
        std::vector<Amplitude> e(dim_ * dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj(m_[r * dim_ + c]);
        return UnitaryOp(dim_, std::move(e), Unchecked{});
    }

    /// this * rhs
    UnitaryOp operator*(const UnitaryOp& rhs) const {
        if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch multiplying unitaries");
        std::vector<Amplitude> e(dim_ * dim_, 0.0);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t k = 0; k < dim_; ++k) {
                Amplitude a = m_[r * dim_ + k];
                if (a == Amplitude(0.0)) continue;
                for (std::size_t c = 0; c < dim_; ++c) e[r * dim_ + c] += a * rhs.m_[k * dim_ + c];
            }
        return UnitaryOp(dim_, std::move(e), Unchecked{});
    }

    /// Kronecker product; basis index of |i>|j> is i * rhs.dim() + j.
    UnitaryOp tensor(const UnitaryOp& rhs) const {
        std::size_t d = dim_ * rhs.dim_;
        std::vector<Amplitude> e(d * d);
        for (std::size_t r1 = 0; r1 < dim_; ++r1)
            for (std::size_t c1 = 0; c1 < dim_; ++c1)
                for (std::size_t r2 = 0; r2 < rhs.dim_; ++r2)
                    for (std::size_t c2 = 0; c2 < rhs.dim_; ++c2)
                        e[(r1 * rhs.dim_ + r2) * d + (c1 * rhs.dim_ + c2)] =
                            m_[r1 * dim_ + c1] * rhs.m_[r2 * rhs.dim_ + c2];
        return UnitaryOp(d, std::move(e), Unchecked{});
    }

    double unitarity_defect() const {
        double worst = 0.0;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) {
                Amplitude acc = 0.0;
                for (std::size_t k = 0; k < dim_; ++k) acc += std::conj(m_[k * dim_ + r]) * m_[k * dim_ + c];
                worst = std::max(worst, std::abs(acc - Amplitude(r == c ? 1.0 : 0.0)));
            }
        return worst;
    }

    /// Entry-wise comparison.
    bool approx_equal(const UnitaryOp& other, double tol = kTolUnitary) const {
        if (other.dim_ != dim_) return false;
        for (std::size_t i = 0; i < m_.size(); ++i)
            if (std::abs(m_[i] - other.m_[i]) > tol) return false;
        return true;
    }

    bool operator==(const UnitaryOp&) const = default;

  private:
    struct Unchecked {};
    UnitaryOp(std::size_t dim, std::vector<Amplitude> entries, Unchecked) : dim_(dim), m_(std::move(entries)) {}

    std::size_t dim_;
    std::vector<Amplitude> m_;
};

/// 2x2 real rotation [[cos t, -sin t], [sin t, cos t]].
inline UnitaryOp rotation(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle must be finite");
    double c = std::cos(theta), s = std::sin(theta);
    return UnitaryOp(2, {c, -s, s, c});
}

/// Deterministic unitary whose first column is `v`: a Householder reflection
/// taking e1 to v (after rotating out the phase of v[0]). v = e1 gives I.
inline UnitaryOp complete_unitary_from_first_column(const StateVector& v) {
    const std::size_t n = v.dim();
    Amplitude phase = 1.0;
    if (std::abs(v[0]) > 0.0) phase = v[0] / std::abs(v[0]);
    // u = conj(phase) v has a real, non-negative first entry
    std::vector<Amplitude> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = std::conj(phase) * v[i];
    std::vector<Amplitude> w(n);
    w[0] = 1.0 - u[0];
    for (std::size_t i = 1; i < n; ++i) w[i] = -u[i];
    double wn = 0.0;
    for (const auto& x : w) wn += std::norm(x);

    std::vector<Amplitude> e(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Amplitude h = (r == c) ? 1.0 : 0.0;
            if (wn > 1e-30) h -= 2.0 * w[r] * std::conj(w[c]) / wn;
            e[r * n + c] = phase * h;
        }
    }
    return UnitaryOp(n, std::move(e));
}

/// Projective measurement in the computational basis: each outcome owns a set
/// of basis indices; the sets partition {0, ..., dim-1}.
class ProjectiveMeasurement {
  public:
    struct Outcome {
        int label;
        std::vector<std::size_t> indices;  // sorted
        bool operator==(const Outcome&) const = default;
    };

    ProjectiveMeasurement(std::size_t dim, std::vector<Outcome> outcomes) : dim_(dim), outcomes_(std::move(outcomes)) {
        if (dim_ == 0) throw std::invalid_argument("measurement must have positive dimension");
        std::vector<int> seen(dim_, 0);
        std::set<int> labels;
        for (auto& o : outcomes_) {
            if (!labels.insert(o.label).second)
                throw std::invalid_argument("measurement outcome label " + std::to_string(o.label) + " repeated");
            std::sort(o.indices.begin(), o.indices.end());
            for (std::size_t i : o.indices) {
                if (i >= dim_) throw std::invalid_argument("measurement index out of range");
                if (seen[i]++) throw std::invalid_argument("measurement index sets overlap at basis state " + std::to_string(i));
            }
        }
        for (std::size_t i = 0; i < dim_; ++i)
            if (!seen[i]) throw std::invalid_argument("measurement is incomplete: basis state " + std::to_string(i) + " not covered");
    }

    /// One outcome per basis state, labelled 0..dim-1.
    static ProjectiveMeasurement computational(std::size_t dim) {
        std::vector<Outcome> o;
        for (std::size_t i = 0; i < dim; ++i) o.push_back({static_cast<int>(i), {i}});
        return ProjectiveMeasurement(dim, std::move(o));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Outcome>& outcomes() const { return outcomes_; }

    const Outcome* find(int label) const {
        for (const auto& o : outcomes_)
            if (o.label == label) return &o;
        return nullptr;
    }

    bool operator==(const ProjectiveMeasurement&) const = default;

  private:
    std::size_t dim_;
    std::vector<Outcome> outcomes_;
};

/// P psi / sqrt(p) for the projector onto `indices`.
inline StateVector collapse(const StateVector& psi, std::span<const std::size_t> indices, double p) {
    std::vector<Amplitude> out(psi.dim(), 0.0);
    double scale = 1.0 / std::sqrt(p);
    for (std::size_t i : indices) out[i] = psi[i] * scale;
    return StateVector(std::move(out), StateVector::Unchecked{});
}

struct MeasurementBranch {
    int label;
    double probability;
    StateVector post_state;
};

/// Outcome distribution with collapsed states. Outcomes below kTolPrune are
/// dropped; the remaining probabilities are reported unnormalized.
inline std::vector<MeasurementBranch> measure(const ProjectiveMeasurement& m, const StateVector& psi) {
    if (m.dim() != psi.dim()) throw std::invalid_argument("dimension mismatch between measurement and state");
    std::vector<MeasurementBranch> out;
    for (const auto& o : m.outcomes()) {
        double p = 0.0;
        for (std::size_t i : o.indices) p += psi.probability(i);
        if (p < kTolPrune) continue;
        out.push_back({o.label, p, collapse(psi, o.indices, p)});
    }
    return out;
}

}  // namespace sqfa
