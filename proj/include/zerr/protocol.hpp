#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zerr/constructions.hpp"
#include "zerr/graph.hpp"
#include "zerr/independence.hpp"
#include "zerr/quantum.hpp"

namespace zerr {

constexpr double kDecodeTolerance = 1e-9;

/// Bijection between messages and channel inputs (one message per vertex).
struct Codebook {
    std::vector<std::string> messages;
    std::map<std::string, std::string> encoding; // message -> vertex label

    const std::string& vertex_of(const std::string& message) const {
        auto it = encoding.find(message);
        if (it == encoding.end())
            throw ValidationError("unknown message: " + message);
        return it->second;
    }
};

/// Identity-style codebook m1 ↦ first vertex, m2 ↦ second, ...
inline Codebook full_codebook(const NamedConstruction& c) {
    Codebook cb;
    const auto& inputs = c.hypergraph.inputs();
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        std::string msg = "m" + std::to_string(k + 1);
        cb.messages.push_back(msg);
        cb.encoding.emplace(std::move(msg), inputs[k]);
    }
    return cb;
}

/// Classical label for the noisy channel plus the normalized state for the
/// perfect quantum channel.
inline std::pair<std::string, CVec> encode(const std::string& message, const Codebook& cb,
                                           const NamedConstruction& c) {
    const std::string& vertex = cb.vertex_of(message);
    return {vertex, normalized(c.vectors.vector(vertex))};
}

struct DecodeResult {
    std::string outcome;
    std::map<std::string, double> distribution;
};

/// Measure the received state in the basis determined by the observed
/// hyperedge. Argmax outcome; ties broken by label order (unreachable on
/// valid runs, where one outcome carries all the probability).
inline DecodeResult decode(const std::string& output_label, const CVec& state,
                           const NamedConstruction& c) {
    if (state.size() != c.vectors.dimension())
        throw ValidationError("state dimension mismatch");
    const Hyperedge& edge = c.hypergraph.hyperedge(output_label);
    Measurement m = measurement_from_hyperedge(c.vectors, edge.support);
    DecodeResult r;
    r.distribution = born_probabilities(m, state);
    double best = -1.0;
    for (const auto& [label, p] : r.distribution) // std::map iterates in label order
        if (p > best) {
            best = p;
            r.outcome = label;
        }
    return r;
}

struct TranscriptEntry {
    std::string message;
    std::string vertex;
    std::string output;
    std::string decoded;
    double probability = 0.0;
};

struct ProtocolReport {
    bool passed = false;
    std::size_t certified_messages = 0;
    std::vector<std::string> failures; // offending (message, output) pairs
};

/// Deterministic zero-error check: every message, through every output its
/// vertex can produce, must decode back to that vertex with Born probability
/// ≥ 1 − 1e-9 while every other outcome stays ≤ 1e-9.
inline ProtocolReport verify_zero_error_exhaustive(const NamedConstruction& c,
                                                   const Codebook& cb) {
    ProtocolReport report;
    for (const auto& message : cb.messages) {
        const auto [vertex, state] = encode(message, cb, c);
        for (const auto& output : c.hypergraph.support_of(vertex)) {
            DecodeResult r = decode(output, state, c);
            bool ok = r.outcome == vertex && r.distribution.at(vertex) >= 1.0 - kDecodeTolerance;
            for (const auto& [label, p] : r.distribution)
                if (label != vertex && p > kDecodeTolerance) ok = false;
            if (!ok)
                report.failures.push_back("(" + message + ", " + output + ") decoded to " +
                                          r.outcome);
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
    report.passed = report.failures.empty();
    report.certified_messages = report.passed ? cb.messages.size() : 0;
    return report;
}

namespace detail {

// splitmix64; each trial draws from its own counter-derived stream, so
// parallel and serial runs of the same seed produce identical transcripts.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct TrialRng {
    std::uint64_t state;

    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state(splitmix64(seed ^ splitmix64(trial + 1))) {}

    double uniform() { // in [0, 1)
        state = splitmix64(state);
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }

    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }
};

} // namespace detail

struct SimulationResult {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double success_fraction = 0.0;
    std::vector<TranscriptEntry> transcript;
};

/// Monte Carlo demonstration run: uniform random message, channel output
/// sampled per the uniform ChannelSpec, deterministic decode.
inline SimulationResult simulate_monte_carlo(const NamedConstruction& c, const Codebook& cb,
                                             std::size_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw ValidationError("at least one trial required");
    const ChannelSpec channel = uniform_channel_from_hypergraph(c.hypergraph);
    SimulationResult result;
    result.trials = trials;
    result.transcript.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        detail::TrialRng rng(seed, t);
        const std::string& message = cb.messages[rng.below(cb.messages.size())];
        const auto [vertex, state] = encode(message, cb, c);
        // Sample y ~ P(·|vertex).
        const auto outputs = c.hypergraph.support_of(vertex);
        double roll = rng.uniform(), acc = 0.0;
        std::string output = outputs.back();
        for (const auto& y : outputs) {
            acc += channel.prob(y, vertex);
            if (roll < acc) {
                output = y;
                break;
            }
        }
        DecodeResult r = decode(output, state, c);
        if (r.outcome == vertex) ++result.successes;
        result.transcript.push_back(
            {message, vertex, output, r.outcome, r.distribution.at(r.outcome)});
    }
    result.success_fraction =
        static_cast<double>(result.successes) / static_cast<double>(result.trials);
    return result;
}

/// One-shot zero-error capacity of the noisy channel assisted by a perfect
/// *classical* d-level channel: α(G ⊠ K̄_d), which must equal d·α(G).
inline std::size_t classical_baseline(const NamedConstruction& c, std::size_t d) {
    if (d < 1)
        throw ValidationError("assisting channel needs at least one level");
    const Graph g = confusability_graph(c.hypergraph);
    const std::size_t alpha = independence_number_exact(g).size;
    const std::size_t product_alpha =
        independence_number_exact(strong_product(g, edgeless(d))).size;
    if (product_alpha != d * alpha)
        throw Error("internal error: α(G ⊠ K̄_d) = " + std::to_string(product_alpha) +
                    " but d·α(G) = " + std::to_string(d * alpha));
    return product_alpha;
}

} // namespace zerr
