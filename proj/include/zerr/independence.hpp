#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "zerr/graph.hpp"

namespace zerr {

/// A maximum independent set together with its certified size.
/// Members are sorted so the witness is byte-stable across runs.
struct IndependentSetWitness {
    std::size_t size = 0;
    std::vector<std::string> members;
};

constexpr std::size_t kDefaultSolverLimit = 128;

/// Vertex cap for the exact solver; ZERR_SOLVER_LIMIT overrides the default.
inline std::size_t solver_limit(std::size_t fallback = kDefaultSolverLimit) {
    if (const char* env = std::getenv("ZERR_SOLVER_LIMIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return fallback;
}

namespace detail {

// Fixed-size-word dynamic bitset, just enough for the solvers below.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w)
            c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }

    void and_not(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k)
            w[k] &= ~o.w[k];
    }
};

class MisSolver {
public:
    explicit MisSolver(const Graph& g) : n_(g.size()), nbr_(n_, Bits(n_)) {
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = 0; v < n_; ++v)
                if (u != v && g.adjacent(u, v)) nbr_[u].set(v);
    }

    std::vector<std::size_t> solve() {
        Bits all(n_);
        for (std::size_t v = 0; v < n_; ++v)
            all.set(v);
        best_.clear();
        cur_.clear();
        expand(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy clique cover of the remaining vertices; the number of cliques
    // bounds the independence number of the remainder from above.
    std::size_t clique_cover_bound(const Bits& rem) const {
        std::vector<Bits> cliques;
        for (std::size_t v = 0; v < n_; ++v) {
            if (!rem.test(v)) continue;
            bool placed = false;
            for (auto& c : cliques) {
                // v must be adjacent to every member: members \ N(v) empty
                Bits miss = c;
                miss.and_not(nbr_[v]);
                if (!miss.any()) {
                    c.set(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(n_);
                cliques.back().set(v);
            }
        }
        return cliques.size();
    }

    void expand(const Bits& rem) {
        if (!rem.any()) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        if (cur_.size() + clique_cover_bound(rem) <= best_.size())
            return;

        // Branch on the max-degree remaining vertex, lowest index on ties.
        std::size_t pick = n_, pick_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (!rem.test(v)) continue;
            Bits nb = nbr_[v];
            for (std::size_t k = 0; k < nb.w.size(); ++k)
                nb.w[k] &= rem.w[k];
            std::size_t d = nb.count();
            if (pick == n_ || d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }

        // Include pick.
        Bits next = rem;
        next.reset(pick);
        next.and_not(nbr_[pick]);
        cur_.push_back(pick);
        expand(next);
        cur_.pop_back();

        // Exclude pick.
        Bits without = rem;
        without.reset(pick);
        expand(without);
    }

    std::size_t n_;
    std::vector<Bits> nbr_;
    std::vector<std::size_t> cur_, best_;
};

} // namespace detail

/// Exhaustive ground-truth α for small graphs (test oracle). |V| ≤ 24.
inline std::size_t independence_number_bruteforce(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 24)
        throw ResourceLimitError("brute-force oracle capped at 24 vertices, got " +
                                 std::to_string(n));
    std::vector<std::uint32_t> nbr(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) nbr[u] |= std::uint32_t(1) << v;

    // independent[S] = independent[S without lowest bit] && no neighbor of
    // that bit inside S
    std::vector<std::uint8_t> ind(std::size_t(1) << n, 1);
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(s));
        const std::uint32_t rest = s & (s - 1);
        ind[s] = ind[rest] && !(nbr[i] & rest);
        if (ind[s]) {
            std::size_t c = static_cast<std::size_t>(std::popcount(s));
            if (c > best) best = c;
        }
    }
    return best;
}

/// Exact maximum independent set via branch and bound, decomposed over
/// connected components. Deterministic: fixed branching order, sorted witness.
inline IndependentSetWitness independence_number_exact(const Graph& g) {
    const std::size_t limit = solver_limit();
    IndependentSetWitness w;
    for (const Graph& comp : connected_components(g)) {
        if (comp.size() > limit)
            throw ResourceLimitError(
                "component with " + std::to_string(comp.size()) +
                " vertices exceeds solver limit " + std::to_string(limit) +
                " (set ZERR_SOLVER_LIMIT to raise)");
        detail::MisSolver solver(comp);
        for (std::size_t v : solver.solve())
            w.members.push_back(comp.label(v));
    }
    std::sort(w.members.begin(), w.members.end());
    w.size = w.members.size();
    return w;
}

inline std::size_t clique_number(const Graph& g) {
    return independence_number_exact(complement(g)).size;
}

} // namespace zerr
