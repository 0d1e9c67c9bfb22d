#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zerr/certificate.hpp"
#include "zerr/channel.hpp"
#include "zerr/constructions.hpp"
#include "zerr/graph.hpp"
#include "zerr/protocol.hpp"
#include "zerr/quantum.hpp"

namespace zerr {

using nlohmann::json;

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << content;
}

inline json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

} // namespace detail

// ---- graphs -----------------------------------------------------------

inline json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    Graph g(j.at("vertices").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a two-element array");
        const std::string u = e[0].get<std::string>(), v = e[1].get<std::string>();
        if (g.adjacent(u, v))
            throw ParseError("duplicate edge " + u + " - " + v);
        g.add_edge(u, v);
    }
    return g;
}

/// DIMACS-like text: "p edge n m" header, "e i j" lines, 1-indexed.
inline Graph graph_from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<Graph> g;
    std::size_t declared_edges = 0, seen_edges = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            std::size_t n = 0;
            if (!(ls >> fmt >> n >> declared_edges) || fmt != "edge")
                throw ParseError("bad DIMACS problem line: " + line);
            std::vector<std::string> labels(n);
            for (std::size_t i = 0; i < n; ++i)
                labels[i] = std::to_string(i + 1);
            g = Graph(std::move(labels));
        } else if (tag == "e") {
            if (!g)
                throw ParseError("DIMACS edge before problem line");
            std::size_t u = 0, v = 0;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > g->size() || v > g->size())
                throw ParseError("bad DIMACS edge line: " + line);
            g->add_edge(u - 1, v - 1);
            ++seen_edges;
        } else {
            throw ParseError("unrecognized DIMACS line: " + line);
        }
    }
    if (!g)
        throw ParseError("DIMACS input has no problem line");
    if (seen_edges != declared_edges)
        throw ParseError("DIMACS header declares " + std::to_string(declared_edges) +
                         " edges, found " + std::to_string(seen_edges));
    return *g;
}

/// Accepts either the JSON graph format or DIMACS-like text.
inline Graph load_graph(const std::string& path) {
    const std::string text = detail::read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(detail::parse_json(text, path));
    return graph_from_dimacs(text);
}

inline void save_graph(const Graph& g, const std::string& path) {
    detail::write_file(path, graph_to_json(g).dump(2) + "\n");
}

// ---- channels ----------------------------------------------------------

inline json channel_to_json(const ChannelSpec& c) {
    json j;
    j["inputs"] = c.hypergraph().inputs();
    json outputs = json::array();
    const auto& edges = c.hypergraph().hyperedges();
    const auto& probs = c.probability_table();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        json o;
        o["label"] = edges[i].label;
        o["support"] = edges[i].support;
        json p = json::object();
        for (const auto& [x, q] : probs[i])
            p[x] = q;
        o["probs"] = std::move(p);
        outputs.push_back(std::move(o));
    }
    j["outputs"] = std::move(outputs);
    return j;
}

/// "probs" is optional per output; absent rows fall back to the uniform rule.
inline ChannelSpec channel_from_json(const json& j) {
    if (!j.contains("inputs") || !j.contains("outputs"))
        throw ParseError("channel JSON needs \"inputs\" and \"outputs\"");
    auto inputs = j.at("inputs").get<std::vector<std::string>>();
    std::vector<Hyperedge> edges;
    std::vector<std::optional<std::map<std::string, double>>> rows;
    for (const auto& o : j.at("outputs")) {
        Hyperedge e;
        e.label = o.at("label").get<std::string>();
        e.support = o.at("support").get<std::vector<std::string>>();
        edges.push_back(std::move(e));
        if (o.contains("probs"))
            rows.push_back(o.at("probs").get<std::map<std::string, double>>());
        else
            rows.push_back(std::nullopt);
    }
    ChannelHypergraph hg(std::move(inputs), std::move(edges));
    const ChannelSpec uniform = uniform_channel_from_hypergraph(hg);
    std::vector<std::map<std::string, double>> probs;
    for (std::size_t i = 0; i < rows.size(); ++i)
        probs.push_back(rows[i] ? *rows[i] : uniform.probability_table()[i]);
    return ChannelSpec(std::move(hg), std::move(probs));
}

inline ChannelSpec load_channel(const std::string& path) {
    return channel_from_json(detail::parse_json(detail::read_file(path), path));
}

inline void save_channel(const ChannelSpec& c, const std::string& path) {
    detail::write_file(path, channel_to_json(c).dump(2) + "\n");
}

// ---- vector sets --------------------------------------------------------

inline json vectorset_to_json(const VectorSet& vs) {
    json j;
    j["dimension"] = vs.dimension();
    json vecs = json::object();
    for (const auto& [label, v] : vs.entries()) {
        json comps = json::array();
        for (const auto& c : v)
            comps.push_back({c.real(), c.imag()});
        vecs[label] = std::move(comps);
    }
    j["vectors"] = std::move(vecs);
    return j;
}

inline VectorSet vectorset_from_json(const json& j) {
    if (!j.contains("dimension") || !j.contains("vectors"))
        throw ParseError("vector set JSON needs \"dimension\" and \"vectors\"");
    const std::size_t d = j.at("dimension").get<std::size_t>();
    std::vector<std::pair<std::string, CVec>> vectors;
    for (const auto& [label, comps] : j.at("vectors").items()) {
        CVec v;
        for (const auto& c : comps) {
            if (!c.is_array() || c.size() != 2)
                throw ParseError("component of " + label + " must be [re, im]");
            v.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
        vectors.emplace_back(label, std::move(v));
    }
    return VectorSet(d, std::move(vectors));
}

inline VectorSet load_vectorset(const std::string& path) {
    return vectorset_from_json(detail::parse_json(detail::read_file(path), path));
}

inline void save_vectorset(const VectorSet& vs, const std::string& path) {
    detail::write_file(path, vectorset_to_json(vs).dump(2) + "\n");
}

/// Write a construction in the channel + vector-set file formats, so built-in
/// and user-supplied constructions go through the same loaders.
inline void export_construction(const NamedConstruction& c, const std::string& channel_path,
                                const std::string& vectors_path) {
    save_channel(uniform_channel_from_hypergraph(c.hypergraph), channel_path);
    save_vectorset(c.vectors, vectors_path);
}

// ---- certificates -------------------------------------------------------

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = c.schema;
    j["name"] = c.name;
    j["n"] = c.n;
    j["alpha"] = c.alpha;
    j["clique"] = c.clique;
    j["dim"] = c.dim;
    j["baseline"] = c.dim * c.alpha; // recomputed at serialization time
    if (c.achieved)
        j["achieved"] = *c.achieved;
    j["verdict"] = to_string(c.verdict);
    json evidence = json::array();
    for (const auto& e : c.evidence)
        evidence.push_back({{"check", e.check}, {"pass", e.pass}, {"detail", e.detail}});
    j["evidence"] = std::move(evidence);
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.schema = j.at("schema").get<int>();
    c.name = j.at("name").get<std::string>();
    c.n = j.at("n").get<std::size_t>();
    c.alpha = j.at("alpha").get<std::size_t>();
    c.clique = j.at("clique").get<std::size_t>();
    c.dim = j.at("dim").get<std::size_t>();
    c.baseline = j.at("baseline").get<std::size_t>();
    if (j.contains("achieved"))
        c.achieved = j.at("achieved").get<std::size_t>();
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& e : j.at("evidence"))
        c.evidence.push_back({e.at("check").get<std::string>(), e.at("pass").get<bool>(),
                              e.at("detail").get<std::string>()});
    return c;
}

inline void save_certificate(const Certificate& c, const std::string& path) {
    detail::write_file(path, certificate_to_json(c).dump(2) + "\n");
}

inline Certificate load_certificate(const std::string& path) {
    return certificate_from_json(detail::parse_json(detail::read_file(path), path));
}

// ---- transcripts --------------------------------------------------------

/// One TranscriptEntry per line (JSON lines), then a summary object.
inline std::string transcript_to_jsonl(const SimulationResult& sim,
                                       std::optional<std::size_t> achieved = std::nullopt,
                                       std::optional<std::size_t> baseline = std::nullopt) {
    std::ostringstream out;
    for (const auto& t : sim.transcript) {
        json j{{"message", t.message},
               {"vertex", t.vertex},
               {"output", t.output},
               {"decoded", t.decoded},
               {"probability", t.probability}};
        out << j.dump() << "\n";
    }
    json summary{{"trials", sim.trials},
                 {"successes", sim.successes},
                 {"success_fraction", sim.success_fraction}};
    if (achieved)
        summary["achieved"] = *achieved;
    if (baseline)
        summary["baseline"] = *baseline;
    if (achieved && baseline)
        summary["gap"] = static_cast<long long>(*achieved) - static_cast<long long>(*baseline);
    out << json{{"summary", summary}}.dump() << "\n";
    return out.str();
}

} // namespace zerr
