#pragma once

#include <random>
#include <string>
#include <vector>

#include "zerr/channel.hpp"
#include "zerr/graph.hpp"
#include "zerr/quantum.hpp"

namespace testutil {

inline zerr::Graph random_graph(std::mt19937& rng, std::size_t n, double p = 0.5) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = "u" + std::to_string(i);
    zerr::Graph g(std::move(labels));
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline zerr::Graph random_bipartite(std::mt19937& rng, std::size_t n, double p = 0.5) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = "u" + std::to_string(i);
    zerr::Graph g(std::move(labels));
    std::uniform_int_distribution<int> side(0, 1);
    std::vector<int> part(n);
    for (auto& s : part)
        s = side(rng);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (part[u] != part[v] && coin(rng)) g.add_edge(u, v);
    return g;
}

inline zerr::Graph cycle(std::size_t n) {
    zerr::Graph g = zerr::edgeless(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

inline zerr::Graph path(std::size_t n) {
    zerr::Graph g = zerr::edgeless(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

/// Random channel: every input covered, random extra hyperedges.
inline zerr::ChannelSpec random_channel(std::mt19937& rng, std::size_t n_inputs,
                                        std::size_t n_extra_edges = 3) {
    std::vector<std::string> inputs(n_inputs);
    for (std::size_t i = 0; i < n_inputs; ++i)
        inputs[i] = "x" + std::to_string(i);
    std::vector<zerr::Hyperedge> edges;
    std::uniform_int_distribution<std::size_t> pick(0, n_inputs - 1);
    // one covering hyperedge per input, possibly shared with a random partner
    for (std::size_t i = 0; i < n_inputs; ++i) {
        zerr::Hyperedge e;
        e.label = "y" + std::to_string(i);
        e.support.push_back(inputs[i]);
        std::size_t partner = pick(rng);
        if (partner != i) e.support.push_back(inputs[partner]);
        edges.push_back(std::move(e));
    }
    for (std::size_t k = 0; k < n_extra_edges; ++k) {
        zerr::Hyperedge e;
        e.label = "z" + std::to_string(k);
        std::size_t a = pick(rng), b = pick(rng);
        e.support.push_back(inputs[a]);
        if (b != a) e.support.push_back(inputs[b]);
        edges.push_back(std::move(e));
    }
    return zerr::uniform_channel_from_hypergraph(
        zerr::ChannelHypergraph(std::move(inputs), std::move(edges)));
}

/// Random orthonormal basis of C^d via Gram-Schmidt on Gaussian vectors.
inline std::vector<zerr::CVec> random_orthonormal_basis(std::mt19937& rng, std::size_t d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<zerr::CVec> basis;
    while (basis.size() < d) {
        zerr::CVec v(d);
        for (auto& c : v)
            c = zerr::Complex(gauss(rng), gauss(rng));
        for (const auto& b : basis) {
            const zerr::Complex proj = zerr::inner_product(b, v);
            for (std::size_t i = 0; i < d; ++i)
                v[i] -= proj * b[i];
        }
        if (zerr::norm(v) < 1e-6) continue; // resample near-degenerate draws
        basis.push_back(zerr::normalized(v));
    }
    return basis;
}

} // namespace testutil
