#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zerr/errors.hpp"

namespace zerr {

/// Undirected simple graph over labeled vertices.
/// No self-loops; adjacency is kept symmetric by construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
        const std::size_t n = labels_.size();
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, fresh] = index_.emplace(labels_[i], i);
            if (!fresh)
                throw ValidationError("duplicate vertex label: " + labels_[i]);
        }
        adj_.assign(n, std::vector<bool>(n, false));
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }

    bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw ValidationError("unknown vertex label: " + label);
        return it->second;
    }

    bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).at(v); }

    bool adjacent(const std::string& u, const std::string& v) const {
        return adjacent(index_of(u), index_of(v));
    }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= size() || v >= size())
            throw ValidationError("edge endpoint out of range");
        if (u == v)
            throw ValidationError("self-loop rejected at vertex " + labels_[u]);
        adj_[u][v] = adj_[v][u] = true;
    }

    void add_edge(const std::string& u, const std::string& v) {
        add_edge(index_of(u), index_of(v));
    }

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (std::size_t u = 0; u < size(); ++u)
            if (adj_[v][u]) ++d;
        return d;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (std::size_t u = 0; u < size(); ++u)
            for (std::size_t v = u + 1; v < size(); ++v)
                if (adj_[u][v]) ++m;
        return m;
    }

    /// Edge list with endpoints in index order, sorted; byte-stable output order.
    std::vector<std::pair<std::string, std::string>> edges() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t u = 0; u < size(); ++u)
            for (std::size_t v = u + 1; v < size(); ++v)
                if (adj_[u][v]) out.emplace_back(labels_[u], labels_[v]);
        return out;
    }

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && adj_ == other.adj_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> adj_;
};

inline Graph edgeless(std::size_t d) {
    if (d == 0)
        throw ValidationError("edgeless graph needs at least one vertex");
    std::vector<std::string> labels(d);
    for (std::size_t i = 0; i < d; ++i)
        labels[i] = std::to_string(i);
    return Graph(std::move(labels));
}

inline Graph complete(std::size_t d) {
    Graph g = edgeless(d);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = u + 1; v < d; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph complement(const Graph& g) {
    Graph c(g.vertices());
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

/// "|" separates the two halves of a product label, so occurrences inside
/// the component labels are backslash-escaped.
inline std::string escape_label_component(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '\\' || ch == '|') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

inline std::string compose_label(const std::string& left, const std::string& right) {
    return escape_label_component(left) + "|" + escape_label_component(right);
}

/// Strong product g ⊠ h. Distinct (u,i), (v,j) are adjacent iff each
/// coordinate is equal or adjacent (and not both equal).
inline Graph strong_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.size(), nh = h.size();
    std::vector<std::string> labels;
    labels.reserve(ng * nh);
    for (std::size_t u = 0; u < ng; ++u)
        for (std::size_t i = 0; i < nh; ++i)
            labels.push_back(compose_label(g.label(u), h.label(i)));
    Graph p(std::move(labels));
    for (std::size_t u = 0; u < ng; ++u)
        for (std::size_t i = 0; i < nh; ++i)
            for (std::size_t v = 0; v < ng; ++v)
                for (std::size_t j = 0; j < nh; ++j) {
                    const std::size_t a = u * nh + i, b = v * nh + j;
                    if (a >= b) continue;
                    const bool same_l = (u == v), same_r = (i == j);
                    const bool adj_l = !same_l && g.adjacent(u, v);
                    const bool adj_r = !same_r && h.adjacent(i, j);
                    if ((same_l && adj_r) || (adj_l && same_r) || (adj_l && adj_r))
                        p.add_edge(a, b);
                }
    return p;
}

/// Induced subgraph on the given vertex indices, preserving index order.
inline Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& keep) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (std::size_t v : keep)
        labels.push_back(g.label(v));
    Graph s(std::move(labels));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (g.adjacent(keep[a], keep[b])) s.add_edge(a, b);
    return s;
}

/// Maximal connected induced subgraphs, ordered by smallest contained vertex index.
inline std::vector<Graph> connected_components(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (g.adjacent(u, v) && comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<std::size_t>> members(ncomp);
    for (std::size_t v = 0; v < n; ++v)
        members[comp[v]].push_back(v);
    std::vector<Graph> out;
    out.reserve(ncomp);
    for (const auto& m : members)
        out.push_back(induced_subgraph(g, m));
    return out;
}

} // namespace zerr
