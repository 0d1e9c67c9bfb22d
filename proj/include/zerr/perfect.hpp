#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerr/graph.hpp"
#include "zerr/independence.hpp"

namespace zerr {

/// Outcome of the perfect-graph test. When the graph is imperfect the verdict
/// carries a chordless odd cycle of length ≥ 5 found in the graph itself
/// (hole) or in its complement (antihole).
struct PerfectnessVerdict {
    bool is_perfect = false;
    std::vector<std::string> witness; // empty iff perfect
    bool witness_in_complement = false;
};

constexpr std::size_t kDefaultPerfectLimit = 64;

/// True iff cycle is a chordless cycle of odd length ≥ 5 in g.
inline bool verify_odd_hole(const Graph& g, const std::vector<std::string>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 5 || k % 2 == 0) return false;
    std::vector<std::size_t> idx;
    idx.reserve(k);
    for (const auto& label : cycle) {
        if (!g.has_vertex(label)) return false;
        idx.push_back(g.index_of(label));
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            if (idx[a] == idx[b]) return false;
            const bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            if (g.adjacent(idx[a], idx[b]) != consecutive) return false;
        }
    return true;
}

namespace detail {

// DFS over chordless paths rooted at the cycle's minimum vertex.
class OddHoleSearch {
public:
    explicit OddHoleSearch(const Graph& g) : g_(g), n_(g.size()), on_path_(n_, false) {}

    std::optional<std::vector<std::size_t>> run() {
        for (std::size_t s = 0; s < n_; ++s) {
            path_.assign(1, s);
            on_path_.assign(n_, false);
            on_path_[s] = true;
            if (extend()) return path_;
        }
        return std::nullopt;
    }

private:
    bool extend() {
        const std::size_t s = path_.front();
        const std::size_t last = path_.back();
        for (std::size_t w = s + 1; w < n_; ++w) {
            if (on_path_[w] || !g_.adjacent(last, w)) continue;
            // Chordless: w may touch the path only at its last vertex
            // (and at s, which closes the cycle).
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path_.size(); ++i)
                if (g_.adjacent(w, path_[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path_.size() >= 2 && g_.adjacent(w, s)) {
                const std::size_t len = path_.size() + 1;
                if (len >= 5 && len % 2 == 1 && path_[1] < w) {
                    path_.push_back(w);
                    return true;
                }
                continue; // any extension past w would leave the chord w~s
            }
            path_.push_back(w);
            on_path_[w] = true;
            if (extend()) return true;
            path_.pop_back();
            on_path_[w] = false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<bool> on_path_;
    std::vector<std::size_t> path_;
};

} // namespace detail

/// Chordless odd cycle of length ≥ 5, if one exists.
inline std::optional<std::vector<std::string>> find_odd_hole(const Graph& g) {
    detail::OddHoleSearch search(g);
    auto cycle = search.run();
    if (!cycle) return std::nullopt;
    std::vector<std::string> labels;
    labels.reserve(cycle->size());
    for (std::size_t v : *cycle)
        labels.push_back(g.label(v));
    return labels;
}

/// Perfect-graph decision via the strong perfect graph theorem: perfect iff
/// neither the graph nor its complement contains an induced odd cycle ≥ 5.
inline PerfectnessVerdict is_perfect(const Graph& g) {
    const std::size_t limit = solver_limit(kDefaultPerfectLimit);
    if (g.size() > limit)
        throw ResourceLimitError("perfect-graph test capped at " + std::to_string(limit) +
                                 " vertices, got " + std::to_string(g.size()));
    PerfectnessVerdict verdict;
    if (auto hole = find_odd_hole(g)) {
        if (!verify_odd_hole(g, *hole))
            throw Error("internal error: odd-hole witness failed re-check");
        verdict.is_perfect = false;
        verdict.witness = std::move(*hole);
        verdict.witness_in_complement = false;
        return verdict;
    }
    const Graph co = complement(g);
    if (auto antihole = find_odd_hole(co)) {
        if (!verify_odd_hole(co, *antihole))
            throw Error("internal error: odd-antihole witness failed re-check");
        verdict.is_perfect = false;
        verdict.witness = std::move(*antihole);
        verdict.witness_in_complement = true;
        return verdict;
    }
    verdict.is_perfect = true;
    return verdict;
}

} // namespace zerr
