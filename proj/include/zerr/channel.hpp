#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zerr/graph.hpp"
#include "zerr/independence.hpp"

namespace zerr {

struct Hyperedge {
    std::string label;                // output symbol y
    std::vector<std::string> support; // inputs x with P(y|x) > 0
};

/// Support structure of a discrete memoryless classical channel: each output
/// symbol is a hyperedge over the inputs that can produce it.
class ChannelHypergraph {
public:
    ChannelHypergraph() = default;

    ChannelHypergraph(std::vector<std::string> inputs, std::vector<Hyperedge> edges)
        : inputs_(std::move(inputs)), edges_(std::move(edges)) {
        std::set<std::string> in_set(inputs_.begin(), inputs_.end());
        if (in_set.size() != inputs_.size())
            throw ValidationError("duplicate channel input label");
        std::set<std::string> out_set;
        std::set<std::string> covered;
        for (auto& e : edges_) {
            if (!out_set.insert(e.label).second)
                throw ValidationError("duplicate output label: " + e.label);
            if (e.support.empty())
                throw ValidationError("empty support for output " + e.label);
            std::set<std::string> members;
            for (const auto& x : e.support) {
                if (!in_set.count(x))
                    throw ValidationError("support of " + e.label +
                                          " names unknown input " + x);
                if (!members.insert(x).second)
                    throw ValidationError("duplicate input " + x + " in support of " +
                                          e.label);
                covered.insert(x);
            }
            std::sort(e.support.begin(), e.support.end());
        }
        for (const auto& x : inputs_)
            if (!covered.count(x))
                throw ValidationError("input " + x + " appears in no hyperedge");
    }

    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<Hyperedge>& hyperedges() const { return edges_; }

    const Hyperedge& hyperedge(const std::string& label) const {
        for (const auto& e : edges_)
            if (e.label == label) return e;
        throw ValidationError("unknown output label: " + label);
    }

    bool in_support(const std::string& output, const std::string& x) const {
        const auto& s = hyperedge(output).support;
        return std::binary_search(s.begin(), s.end(), x);
    }

    /// Γ(x): outputs the receiver may observe when x is sent.
    std::vector<std::string> support_of(const std::string& x) const {
        if (std::find(inputs_.begin(), inputs_.end(), x) == inputs_.end())
            throw ValidationError("unknown input label: " + x);
        std::vector<std::string> out;
        for (const auto& e : edges_)
            if (std::binary_search(e.support.begin(), e.support.end(), x))
                out.push_back(e.label);
        return out;
    }

private:
    std::vector<std::string> inputs_;
    std::vector<Hyperedge> edges_;
};

constexpr double kRowSumTolerance = 1e-12;

/// Channel with explicit conditional probabilities, strictly positive exactly
/// on the hypergraph's incidences; every row sums to 1.
class ChannelSpec {
public:
    ChannelSpec() = default;

    /// probs[i] maps input → P(y_i | input) for hyperedge i.
    ChannelSpec(ChannelHypergraph hg, std::vector<std::map<std::string, double>> probs)
        : hg_(std::move(hg)), probs_(std::move(probs)) {
        const auto& edges = hg_.hyperedges();
        if (probs_.size() != edges.size())
            throw ValidationError("probability table / hyperedge count mismatch");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (probs_[i].size() != edges[i].support.size())
                throw ValidationError("probability entries of " + edges[i].label +
                                      " do not match its support");
            for (const auto& [x, p] : probs_[i]) {
                if (!std::binary_search(edges[i].support.begin(), edges[i].support.end(), x))
                    throw ValidationError("probability for " + x + " outside support of " +
                                          edges[i].label);
                if (!(p > 0.0) || p > 1.0)
                    throw ValidationError("P(" + edges[i].label + "|" + x +
                                          ") must lie in (0,1]");
            }
        }
        for (const auto& x : hg_.inputs()) {
            double row = 0.0;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                auto it = probs_[i].find(x);
                if (it != probs_[i].end()) row += it->second;
            }
            if (std::abs(row - 1.0) > kRowSumTolerance)
                throw ValidationError("probabilities for input " + x +
                                      " sum to " + std::to_string(row));
        }
    }

    const ChannelHypergraph& hypergraph() const { return hg_; }
    const std::vector<std::map<std::string, double>>& probability_table() const {
        return probs_;
    }

    double prob(const std::string& output, const std::string& x) const {
        const auto& edges = hg_.hyperedges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].label == output) {
                auto it = probs_[i].find(x);
                return it == probs_[i].end() ? 0.0 : it->second;
            }
        throw ValidationError("unknown output label: " + output);
    }

private:
    ChannelHypergraph hg_;
    std::vector<std::map<std::string, double>> probs_;
};

inline std::vector<std::string> support(const ChannelSpec& c, const std::string& x) {
    return c.hypergraph().support_of(x);
}

/// Confusability graph: inputs are vertices, each hyperedge induces a clique.
inline Graph confusability_graph(const ChannelHypergraph& h) {
    Graph g(h.inputs());
    for (const auto& e : h.hyperedges())
        for (std::size_t a = 0; a < e.support.size(); ++a)
            for (std::size_t b = a + 1; b < e.support.size(); ++b)
                g.add_edge(e.support[a], e.support[b]);
    return g;
}

/// P(y|x) = 1 / |Γ(x)| for every containing hyperedge. Zero-error analysis
/// depends only on supports, so this is the default numeric assignment.
inline ChannelSpec uniform_channel_from_hypergraph(const ChannelHypergraph& h) {
    std::map<std::string, std::size_t> degree;
    for (const auto& e : h.hyperedges())
        for (const auto& x : e.support)
            ++degree[x];
    std::vector<std::map<std::string, double>> probs;
    probs.reserve(h.hyperedges().size());
    for (const auto& e : h.hyperedges()) {
        std::map<std::string, double> row;
        for (const auto& x : e.support)
            row[x] = 1.0 / static_cast<double>(degree[x]);
        probs.push_back(std::move(row));
    }
    return ChannelSpec(h, std::move(probs));
}

/// Identity channel on d symbols.
inline ChannelSpec perfect_classical(std::size_t d) {
    if (d == 0)
        throw ValidationError("perfect channel needs at least one symbol");
    std::vector<std::string> inputs(d);
    std::vector<Hyperedge> edges(d);
    std::vector<std::map<std::string, double>> probs(d);
    for (std::size_t i = 0; i < d; ++i) {
        inputs[i] = std::to_string(i);
        edges[i] = Hyperedge{std::to_string(i), {std::to_string(i)}};
        probs[i][inputs[i]] = 1.0;
    }
    return ChannelSpec(ChannelHypergraph(std::move(inputs), std::move(edges)),
                       std::move(probs));
}

/// Parallel use: both outputs arrive simultaneously, probabilities multiply.
inline ChannelSpec parallel_compose(const ChannelSpec& a, const ChannelSpec& b) {
    std::vector<std::string> inputs;
    for (const auto& xa : a.hypergraph().inputs())
        for (const auto& xb : b.hypergraph().inputs())
            inputs.push_back(compose_label(xa, xb));

    const auto& ea = a.hypergraph().hyperedges();
    const auto& eb = b.hypergraph().hyperedges();
    const auto& pa = a.probability_table();
    const auto& pb = b.probability_table();
    std::vector<Hyperedge> edges;
    std::vector<std::map<std::string, double>> probs;
    for (std::size_t i = 0; i < ea.size(); ++i)
        for (std::size_t j = 0; j < eb.size(); ++j) {
            Hyperedge e;
            e.label = compose_label(ea[i].label, eb[j].label);
            std::map<std::string, double> row;
            for (const auto& xa : ea[i].support)
                for (const auto& xb : eb[j].support) {
                    e.support.push_back(compose_label(xa, xb));
                    row[e.support.back()] = pa[i].at(xa) * pb[j].at(xb);
                }
            edges.push_back(std::move(e));
            probs.push_back(std::move(row));
        }
    return ChannelSpec(ChannelHypergraph(std::move(inputs), std::move(edges)),
                       std::move(probs));
}

/// Maximum one-shot zero-error code: a maximum independent set of the
/// confusability graph, re-checked for pairwise disjoint supports.
inline IndependentSetWitness zero_error_code(const ChannelSpec& c) {
    IndependentSetWitness w = independence_number_exact(confusability_graph(c.hypergraph()));
    for (std::size_t a = 0; a < w.members.size(); ++a) {
        auto sa = c.hypergraph().support_of(w.members[a]);
        std::sort(sa.begin(), sa.end());
        for (std::size_t b = a + 1; b < w.members.size(); ++b) {
            auto sb = c.hypergraph().support_of(w.members[b]);
            std::sort(sb.begin(), sb.end());
            std::vector<std::string> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(common));
            if (!common.empty())
                throw Error("internal error: code members " + w.members[a] + ", " +
                            w.members[b] + " share output " + common.front());
        }
    }
    return w;
}

} // namespace zerr
