#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zerr/errors.hpp"
#include "zerr/graph.hpp"

namespace zerr {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

constexpr double kOrthogonalityTolerance = 1e-9;
constexpr double kProbabilitySumTolerance = 1e-12;

/// Hermitian inner product ⟨u|v⟩, conjugate-linear in the first argument.
inline Complex inner_product(const CVec& u, const CVec& v) {
    if (u.size() != v.size())
        throw ValidationError("inner product of vectors with different lengths");
    Complex s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += std::conj(u[i]) * v[i];
    return s;
}

inline double norm(const CVec& v) { return std::sqrt(std::real(inner_product(v, v))); }

inline CVec normalized(const CVec& v) {
    const double n = norm(v);
    if (n == 0.0)
        throw ValidationError("cannot normalize the zero vector");
    CVec out = v;
    for (auto& c : out)
        c /= n;
    return out;
}

/// Labeled complex vectors of a fixed dimension. Vectors need not be
/// normalized as given; zero vectors and phase-duplicates are rejected.
class VectorSet {
public:
    VectorSet() = default;

    VectorSet(std::size_t dimension, std::vector<std::pair<std::string, CVec>> vectors)
        : dim_(dimension), vectors_(std::move(vectors)) {
        if (dim_ < 2)
            throw ValidationError("vector set dimension must be at least 2");
        std::set<std::string> labels;
        for (const auto& [label, v] : vectors_) {
            if (!labels.insert(label).second)
                throw ValidationError("duplicate vector label: " + label);
            if (v.size() != dim_)
                throw ValidationError("vector " + label + " has wrong dimension");
            if (norm(v) == 0.0)
                throw ValidationError("vector " + label + " is zero");
        }
        // Two vectors equal up to a global phase carry the same physical state.
        for (std::size_t a = 0; a < vectors_.size(); ++a)
            for (std::size_t b = a + 1; b < vectors_.size(); ++b) {
                const double overlap =
                    std::abs(inner_product(normalized(vectors_[a].second),
                                           normalized(vectors_[b].second)));
                if (overlap > 1.0 - kOrthogonalityTolerance)
                    throw ValidationError("vectors " + vectors_[a].first + " and " +
                                          vectors_[b].first +
                                          " coincide up to a global phase");
            }
    }

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<std::pair<std::string, CVec>>& entries() const { return vectors_; }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(vectors_.size());
        for (const auto& [label, v] : vectors_)
            out.push_back(label);
        return out;
    }

    const CVec& vector(const std::string& label) const {
        for (const auto& [l, v] : vectors_)
            if (l == label) return v;
        throw ValidationError("unknown vector label: " + label);
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::pair<std::string, CVec>> vectors_;
};

/// Vertices are the vector labels; u ~ v iff the normalized overlap
/// |⟨u|v⟩| / (‖u‖‖v‖) falls below tol.
inline Graph orthogonality_graph(const VectorSet& vs, double tol = kOrthogonalityTolerance) {
    Graph g(vs.labels());
    const auto& e = vs.entries();
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            const double overlap = std::abs(inner_product(e[a].second, e[b].second)) /
                                   (norm(e[a].second) * norm(e[b].second));
            if (overlap < tol) g.add_edge(a, b);
        }
    return g;
}

/// Dense square complex matrix, sized for small Hilbert spaces.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    /// |v⟩⟨v| for a normalized vector v.
    static ComplexMatrix outer(const CVec& v) {
        ComplexMatrix m(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                m(i, j) = v[i] * std::conj(v[j]);
        return m;
    }

    std::size_t dim() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    ComplexMatrix operator*(const ComplexMatrix& o) const {
        ComplexMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Complex aik = (*this)(i, k);
                if (aik == Complex(0.0)) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        ComplexMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] += o.a_[i];
        return r;
    }

    ComplexMatrix operator-(const ComplexMatrix& o) const {
        ComplexMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] -= o.a_[i];
        return r;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    CVec apply(const CVec& v) const {
        CVec r(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                r[i] += (*this)(i, j) * v[j];
        return r;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : a_)
            m = std::max(m, std::abs(c));
        return m;
    }

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// Projective measurement: orthogonal projectors summing to the identity.
struct Measurement {
    std::size_t dimension = 0;
    std::vector<std::pair<std::string, ComplexMatrix>> projectors;

    /// Largest entrywise residual over idempotence, self-adjointness,
    /// pairwise orthogonality, and completeness.
    double algebra_residual() const {
        double worst = 0.0;
        ComplexMatrix sum(dimension);
        for (const auto& [label, p] : projectors) {
            worst = std::max(worst, (p * p - p).max_abs());
            worst = std::max(worst, (p.adjoint() - p).max_abs());
            sum = sum + p;
        }
        for (std::size_t a = 0; a < projectors.size(); ++a)
            for (std::size_t b = a + 1; b < projectors.size(); ++b)
                worst = std::max(worst,
                                 (projectors[a].second * projectors[b].second).max_abs());
        worst = std::max(worst, (sum - ComplexMatrix::identity(dimension)).max_abs());
        return worst;
    }

    void validate(double tol = kOrthogonalityTolerance) const {
        const double r = algebra_residual();
        if (r > tol)
            throw ValidationError("measurement violates projector algebra, residual " +
                                  std::to_string(r));
    }
};

/// Label given to the residual projector completing a short hyperedge.
inline const std::string kResidualOutcome = "⊥";

/// One rank-one projector per edge member; if the edge spans less than the
/// full dimension, a single residual projector I − ΣΠ completes the
/// measurement. Projector order follows the given edge order.
inline Measurement measurement_from_hyperedge(const VectorSet& vs,
                                              const std::vector<std::string>& edge,
                                              double tol = kOrthogonalityTolerance) {
    const std::size_t d = vs.dimension();
    if (edge.size() > d)
        throw ValidationError("hyperedge has more members than the dimension allows");
    std::vector<CVec> states;
    for (const auto& label : edge)
        states.push_back(normalized(vs.vector(label)));
    for (std::size_t a = 0; a < edge.size(); ++a)
        for (std::size_t b = a + 1; b < edge.size(); ++b)
            if (std::abs(inner_product(states[a], states[b])) >= tol)
                throw ValidationError("hyperedge members " + edge[a] + " and " + edge[b] +
                                      " are not orthogonal");
    Measurement m;
    m.dimension = d;
    ComplexMatrix sum(d);
    for (std::size_t i = 0; i < edge.size(); ++i) {
        ComplexMatrix p = ComplexMatrix::outer(states[i]);
        sum = sum + p;
        m.projectors.emplace_back(edge[i], std::move(p));
    }
    if (edge.size() < d)
        m.projectors.emplace_back(kResidualOutcome, ComplexMatrix::identity(d) - sum);
    m.validate();
    return m;
}

/// Born rule: p(outcome) = ⟨state|Π|state⟩ for a normalized state.
inline std::map<std::string, double> born_probabilities(const Measurement& m,
                                                        const CVec& state) {
    if (std::abs(norm(state) - 1.0) > kOrthogonalityTolerance)
        throw ValidationError("state is not normalized");
    std::map<std::string, double> probs;
    double total = 0.0;
    for (const auto& [label, p] : m.projectors) {
        const double q = std::real(inner_product(state, p.apply(state)));
        probs[label] = q;
        total += q;
    }
    if (std::abs(total - 1.0) > kOrthogonalityTolerance)
        throw Error("internal error: Born probabilities sum to " + std::to_string(total));
    return probs;
}

struct BasisReport {
    bool ok = false;
    double max_residual = 0.0; // largest pairwise overlap after normalization
    std::vector<std::string> violations;
};

/// True iff the edge names exactly `dimension` vectors that are pairwise
/// orthogonal after normalization. Violations are reported, not thrown.
inline BasisReport verify_orthonormal_basis(const VectorSet& vs,
                                            const std::vector<std::string>& edge,
                                            double tol = kOrthogonalityTolerance) {
    BasisReport report;
    if (edge.size() != vs.dimension())
        report.violations.push_back("edge has " + std::to_string(edge.size()) +
                                    " members, dimension is " +
                                    std::to_string(vs.dimension()));
    std::vector<CVec> states;
    for (const auto& label : edge)
        states.push_back(normalized(vs.vector(label)));
    for (std::size_t a = 0; a < edge.size(); ++a)
        for (std::size_t b = a + 1; b < edge.size(); ++b) {
            const double overlap = std::abs(inner_product(states[a], states[b]));
            report.max_residual = std::max(report.max_residual, overlap);
            if (overlap >= tol)
                report.violations.push_back(edge[a] + " and " + edge[b] +
                                            " overlap by " + std::to_string(overlap));
        }
    report.ok = report.violations.empty();
    return report;
}

} // namespace zerr
