#pragma once

#include <algorithm>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerr/channel.hpp"
#include "zerr/independence.hpp"
#include "zerr/quantum.hpp"

namespace zerr {

struct Predicted {
    std::size_t vertex_count = 0;
    std::size_t alpha = 0;
    std::size_t dimension = 0;
};

/// A channel paired with the vector realization of its confusability
/// structure: hypergraph inputs and vector labels coincide.
struct NamedConstruction {
    std::string name;
    VectorSet vectors;
    ChannelHypergraph hypergraph;
    std::optional<Predicted> predicted;
};

/// The 18-vector, 9-basis construction in R^4: every hyperedge is an
/// orthonormal basis and every vector sits in exactly two hyperedges.
inline NamedConstruction cabello18() {
    static const double table[18][4] = {
        {0, 0, 0, 1},   // v1
        {0, 0, 1, 0},   // v2
        {1, 1, 0, 0},   // v3
        {1, -1, 0, 0},  // v4
        {0, 1, 0, 0},   // v5
        {1, 0, 1, 0},   // v6
        {1, 0, -1, 0},  // v7
        {1, -1, 1, -1}, // v8
        {1, -1, -1, 1}, // v9
        {0, 0, 1, 1},   // v10
        {1, 1, 1, 1},   // v11
        {0, 1, 0, -1},  // v12
        {1, 0, 0, 1},   // v13
        {1, 0, 0, -1},  // v14
        {0, 1, -1, 0},  // v15
        {1, 1, -1, 1},  // v16
        {1, 1, 1, -1},  // v17
        {-1, 1, 1, 1},  // v18
    };
    static const int bases[9][4] = {
        {1, 2, 3, 4},    {1, 5, 6, 7},    {8, 9, 3, 10},
        {8, 11, 7, 12},  {2, 5, 13, 14},  {9, 11, 14, 15},
        {16, 17, 4, 10}, {16, 18, 6, 12}, {17, 18, 13, 15},
    };
    std::vector<std::pair<std::string, CVec>> vectors;
    for (std::size_t k = 0; k < 18; ++k) {
        CVec v(4);
        for (std::size_t i = 0; i < 4; ++i)
            v[i] = table[k][i];
        vectors.emplace_back("v" + std::to_string(k + 1), std::move(v));
    }
    std::vector<std::string> inputs;
    for (std::size_t k = 1; k <= 18; ++k)
        inputs.push_back("v" + std::to_string(k));
    std::vector<Hyperedge> edges;
    for (std::size_t y = 0; y < 9; ++y) {
        Hyperedge e;
        e.label = "h" + std::to_string(y + 1);
        for (int k : bases[y])
            e.support.push_back("v" + std::to_string(k));
        edges.push_back(std::move(e));
    }
    NamedConstruction c;
    c.name = "cabello18";
    c.vectors = VectorSet(4, std::move(vectors));
    c.hypergraph = ChannelHypergraph(std::move(inputs), std::move(edges));
    c.predicted = Predicted{18, 4, 4};
    return c;
}

namespace detail {

// Bron-Kerbosch with pivoting; cliques come out in a canonical sorted order.
inline void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r,
                          std::vector<std::size_t> p, std::vector<std::size_t> x,
                          std::vector<std::vector<std::size_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (std::size_t cand : p) {
        std::size_t d = 0;
        for (std::size_t u : p)
            if (g.adjacent(cand, u)) ++d;
        if (d > best) {
            best = d;
            pivot = cand;
        }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t v : p)
        if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (std::size_t v : candidates) {
        std::vector<std::size_t> np, nx;
        for (std::size_t u : p)
            if (g.adjacent(v, u)) np.push_back(u);
        for (std::size_t u : x)
            if (g.adjacent(v, u)) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::remove(p.begin(), p.end(), v), p.end());
        x.push_back(v);
    }
}

inline std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g) {
    std::vector<std::size_t> all(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        all[v] = v;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    bron_kerbosch(g, r, all, {}, out);
    for (auto& c : out)
        std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Parametric family in C^3 built from powers of ω = e^{2πi/(3m)}:
/// the standard basis plus (1,−ω^i,0), (1,0,−ω^i), (0,1,−ω^i), (1,ω^i,ω^j)
/// for i, j in 1..3m. Hyperedges are the maximal cliques of the
/// orthogonality graph.
inline NamedConstruction xu_family(std::size_t m) {
    if (m < 1)
        throw ValidationError("family parameter m must be at least 1");
    const std::size_t order = 3 * m;
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(order));
    auto pow_omega = [&](std::size_t k) { return std::pow(omega, static_cast<double>(k)); };

    std::vector<std::pair<std::string, CVec>> vectors;
    vectors.emplace_back("e1", CVec{1, 0, 0});
    vectors.emplace_back("e2", CVec{0, 1, 0});
    vectors.emplace_back("e3", CVec{0, 0, 1});
    for (std::size_t i = 1; i <= order; ++i) {
        vectors.emplace_back("a" + std::to_string(i), CVec{1, -pow_omega(i), 0});
        vectors.emplace_back("b" + std::to_string(i), CVec{1, 0, -pow_omega(i)});
        vectors.emplace_back("c" + std::to_string(i), CVec{0, 1, -pow_omega(i)});
    }
    for (std::size_t i = 1; i <= order; ++i)
        for (std::size_t j = 1; j <= order; ++j)
            vectors.emplace_back("g" + std::to_string(i) + "_" + std::to_string(j),
                                 CVec{1, pow_omega(i), pow_omega(j)});

    NamedConstruction c;
    c.name = "xu_m" + std::to_string(m);
    c.vectors = VectorSet(3, std::move(vectors)); // throws on phase collisions
    const Graph orth = orthogonality_graph(c.vectors);

    std::vector<Hyperedge> edges;
    std::size_t next = 1;
    for (const auto& clique : detail::maximal_cliques(orth)) {
        Hyperedge e;
        e.label = "h" + std::to_string(next++);
        for (std::size_t v : clique)
            e.support.push_back(orth.label(v));
        edges.push_back(std::move(e));
    }
    c.hypergraph = ChannelHypergraph(orth.vertices(), std::move(edges));
    c.predicted = Predicted{3 + 9 * m + 9 * m * m, 3 * m * (m + 1), 3};
    return c;
}

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
};

/// Structural audit of a construction: label coincidence, hyperedge
/// orthogonality, agreement between the channel's confusability graph and
/// the vectors' orthogonality graph, and the predicted counts.
/// exact_alpha = false skips the independence-number computations.
inline VerificationReport verify_construction(const NamedConstruction& c,
                                              bool exact_alpha = true) {
    VerificationReport report;
    auto add = [&](std::string check, bool pass, std::string detail) {
        report.checks.push_back({std::move(check), pass, std::move(detail)});
    };

    std::vector<std::string> in_sorted = c.hypergraph.inputs();
    std::vector<std::string> vl_sorted = c.vectors.labels();
    std::sort(in_sorted.begin(), in_sorted.end());
    std::sort(vl_sorted.begin(), vl_sorted.end());
    add("labels_coincide", in_sorted == vl_sorted,
        std::to_string(c.hypergraph.inputs().size()) + " inputs vs " +
            std::to_string(c.vectors.size()) + " vectors");

    bool edges_orthogonal = true;
    std::string edge_detail;
    for (const auto& e : c.hypergraph.hyperedges()) {
        // Short hyperedges only need mutual orthogonality, not a full basis;
        // measurement construction enforces exactly that.
        try {
            measurement_from_hyperedge(c.vectors, e.support);
            if (e.support.size() == c.vectors.dimension() &&
                !verify_orthonormal_basis(c.vectors, e.support).ok)
                throw ValidationError("full hyperedge is not an orthonormal basis");
        } catch (const ValidationError& err) {
            edges_orthogonal = false;
            edge_detail = e.label + ": " + err.what();
            break;
        }
    }
    add("hyperedges_orthogonal", edges_orthogonal,
        edges_orthogonal ? std::to_string(c.hypergraph.hyperedges().size()) + " hyperedges"
                         : edge_detail);

    const Graph conf = confusability_graph(c.hypergraph);
    const Graph orth = orthogonality_graph(c.vectors);
    bool contained = true;
    std::string offending;
    for (const auto& [u, v] : conf.edges())
        if (!orth.adjacent(u, v)) {
            contained = false;
            offending = u + " ~ " + v;
            break;
        }
    add("confusability_within_orthogonality", contained,
        contained ? std::to_string(conf.edge_count()) + " of " +
                        std::to_string(orth.edge_count()) + " orthogonality edges used"
                  : "non-orthogonal confusable pair " + offending);

    if (c.predicted) {
        add("vertex_count", c.vectors.size() == c.predicted->vertex_count,
            "computed " + std::to_string(c.vectors.size()) + ", predicted " +
                std::to_string(c.predicted->vertex_count));
        if (exact_alpha) {
            const std::size_t alpha_conf = independence_number_exact(conf).size;
            const std::size_t alpha_orth = independence_number_exact(orth).size;
            add("alpha_graphs_agree", alpha_conf == alpha_orth,
                "confusability " + std::to_string(alpha_conf) + ", orthogonality " +
                    std::to_string(alpha_orth));
            add("alpha_predicted", alpha_conf == c.predicted->alpha,
                "computed " + std::to_string(alpha_conf) + ", predicted " +
                    std::to_string(c.predicted->alpha));
        }
    }
    return report;
}

} // namespace zerr
