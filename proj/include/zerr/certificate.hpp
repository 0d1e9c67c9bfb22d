#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerr/channel.hpp"
#include "zerr/constructions.hpp"
#include "zerr/perfect.hpp"
#include "zerr/protocol.hpp"

namespace zerr {

enum class Verdict {
    Superadditive,
    NoGoPerfectGraph,
    NoGoDimension,
    Inconclusive,
};

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Superadditive: return "SUPERADDITIVE";
    case Verdict::NoGoPerfectGraph: return "NO_GO_PERFECT_GRAPH";
    case Verdict::NoGoDimension: return "NO_GO_DIMENSION";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    throw Error("unreachable verdict");
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "SUPERADDITIVE") return Verdict::Superadditive;
    if (s == "NO_GO_PERFECT_GRAPH") return Verdict::NoGoPerfectGraph;
    if (s == "NO_GO_DIMENSION") return Verdict::NoGoDimension;
    if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
    throw ParseError("unknown verdict: " + s);
}

struct EvidenceItem {
    std::string check;
    bool pass = false;
    std::string detail;

    bool operator==(const EvidenceItem&) const = default;
};

/// Machine-readable verdict bundle for one channel / vector-set pair.
struct Certificate {
    int schema = 1;
    std::string name;
    std::size_t n = 0;       // |V| of the confusability graph
    std::size_t alpha = 0;   // α(G)
    std::size_t clique = 0;  // ω(G)
    std::size_t dim = 0;     // assisting quantum channel dimension
    std::size_t baseline = 0; // dim · alpha
    std::optional<std::size_t> achieved; // set iff protocol verification passed
    Verdict verdict = Verdict::Inconclusive;
    std::vector<EvidenceItem> evidence;

    bool operator==(const Certificate&) const = default;
};

/// Decide superadditivity for a channel, optionally realized by vectors, when
/// assisted by a perfect quantum channel of dimension assist_dim. Checks run
/// in order: dimension guard, perfect-graph no-go, then protocol verification.
inline Certificate certify(const ChannelHypergraph& hypergraph,
                           const std::optional<VectorSet>& vectors,
                           std::size_t assist_dim, const std::string& name) {
    if (assist_dim < 1)
        throw ValidationError("assisting dimension must be at least 1");
    Certificate cert;
    cert.name = name;
    cert.dim = assist_dim;

    const Graph g = confusability_graph(hypergraph);
    cert.n = g.size();
    cert.alpha = independence_number_exact(g).size;
    cert.clique = clique_number(g);
    cert.baseline = assist_dim * cert.alpha;

    auto add = [&](std::string check, bool pass, std::string detail) {
        cert.evidence.push_back({std::move(check), pass, std::move(detail)});
    };
    add("vertex_count", true, std::to_string(cert.n));
    add("independence_number", true, std::to_string(cert.alpha));
    add("clique_number", true, std::to_string(cert.clique));
    add("sufficiency_n_gt_alpha_dim", cert.n > cert.alpha * assist_dim,
        std::to_string(cert.n) + " vs " + std::to_string(cert.alpha * assist_dim));

    // Corollary-style guard: a lower-dimensional perfect quantum channel
    // cannot carry the states of the supplied representation intact.
    if (vectors && assist_dim < vectors->dimension()) {
        add("dimension_guard", false,
            "assist dim " + std::to_string(assist_dim) + " < representation dim " +
                std::to_string(vectors->dimension()) +
                " (no-go relative to this representation)");
        cert.verdict = Verdict::NoGoDimension;
        return cert;
    }
    if (vectors)
        add("dimension_guard", true,
            "assist dim " + std::to_string(assist_dim) + " >= representation dim " +
                std::to_string(vectors->dimension()));

    const PerfectnessVerdict perfect = is_perfect(g);
    if (perfect.is_perfect) {
        add("perfect_graph", true,
            "confusability graph perfect; alpha*omega = " +
                std::to_string(cert.alpha * cert.clique) + " >= n = " + std::to_string(cert.n));
        cert.verdict = Verdict::NoGoPerfectGraph;
        return cert;
    }
    std::string hole;
    for (const auto& v : perfect.witness)
        hole += (hole.empty() ? "" : ",") + v;
    add("perfect_graph", false,
        std::string(perfect.witness_in_complement ? "odd antihole " : "odd hole ") + hole);

    if (vectors) {
        NamedConstruction c{name, *vectors, hypergraph, std::nullopt};
        const Codebook cb = full_codebook(c);
        const ProtocolReport protocol = verify_zero_error_exhaustive(c, cb);
        if (protocol.passed) {
            cert.achieved = protocol.certified_messages;
            add("protocol_zero_error", true,
                "certified " + std::to_string(protocol.certified_messages) +
                    " messages (this protocol)");
            if (*cert.achieved > cert.baseline) {
                add("superadditive_gap", true,
                    std::to_string(*cert.achieved) + " > " + std::to_string(cert.baseline));
                cert.verdict = Verdict::Superadditive;
                return cert;
            }
            add("superadditive_gap", false,
                std::to_string(*cert.achieved) + " <= " + std::to_string(cert.baseline));
        } else {
            add("protocol_zero_error", false,
                std::to_string(protocol.failures.size()) + " failing (message, output) pairs; first: " +
                    protocol.failures.front());
        }
    }
    cert.verdict = Verdict::Inconclusive;
    return cert;
}

inline Certificate certify(const NamedConstruction& c, std::size_t assist_dim) {
    return certify(c.hypergraph, c.vectors, assist_dim, c.name);
}

inline Certificate certify(const ChannelSpec& channel, const std::optional<VectorSet>& vectors,
                           std::size_t assist_dim, const std::string& name) {
    return certify(channel.hypergraph(), vectors, assist_dim, name);
}

} // namespace zerr
