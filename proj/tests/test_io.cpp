#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "test_util.hpp"
#include "zerr/io.hpp"

using namespace zerr;

namespace {

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("zerr_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("graph JSON round trip") {
    std::mt19937 rng(61);
    Graph g = testutil::random_graph(rng, 9, 0.4);
    CHECK(graph_from_json(graph_to_json(g)) == g);
}

TEST_CASE("graph JSON rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices": ["a"]})")), ParseError);
    CHECK_THROWS_AS(
        graph_from_json(json::parse(R"({"vertices": ["a","b"], "edges": [["a","z"]]})")),
        ValidationError);
    CHECK_THROWS_AS(
        graph_from_json(json::parse(
            R"({"vertices": ["a","b"], "edges": [["a","b"],["b","a"]]})")),
        ParseError); // duplicate edge
    CHECK_THROWS_AS(
        graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [["a","a"]]})")),
        ValidationError); // self-loop
}

TEST_CASE("DIMACS parsing") {
    Graph g = graph_from_dimacs("c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    CHECK(g.size() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.adjacent("1", "2"));

    CHECK_THROWS_AS(graph_from_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(graph_from_dimacs("p edge 2 1\n"), ParseError); // missing edge
    CHECK_THROWS_AS(graph_from_dimacs("p edge 2 1\ne 1 5\n"), ParseError);
}

TEST_CASE("load_graph sniffs the format") {
    TempDir tmp;
    detail::write_file(tmp.file("g.json"),
                       R"({"vertices": ["a","b"], "edges": [["a","b"]]})");
    detail::write_file(tmp.file("g.col"), "p edge 2 1\ne 1 2\n");
    CHECK(load_graph(tmp.file("g.json")).adjacent("a", "b"));
    CHECK(load_graph(tmp.file("g.col")).adjacent("1", "2"));
    CHECK_THROWS_AS(load_graph(tmp.file("missing.json")), ParseError);
}

TEST_CASE("channel JSON round trip") {
    std::mt19937 rng(62);
    ChannelSpec c = testutil::random_channel(rng, 5);
    ChannelSpec back = channel_from_json(channel_to_json(c));
    CHECK(back.hypergraph().inputs() == c.hypergraph().inputs());
    CHECK(back.probability_table() == c.probability_table());
}

TEST_CASE("channel JSON applies the uniform rule when probs are absent") {
    auto j = json::parse(R"({
        "inputs": ["a", "b"],
        "outputs": [
            {"label": "y0", "support": ["a", "b"]},
            {"label": "y1", "support": ["a"]}
        ]
    })");
    ChannelSpec c = channel_from_json(j);
    CHECK(c.prob("y0", "a") == Catch::Approx(0.5));
    CHECK(c.prob("y1", "a") == Catch::Approx(0.5));
    CHECK(c.prob("y0", "b") == 1.0);
}

TEST_CASE("vector set JSON round trip") {
    NamedConstruction c = xu_family(1);
    VectorSet back = vectorset_from_json(vectorset_to_json(c.vectors));
    CHECK(back.dimension() == 3);
    CHECK(back.size() == c.vectors.size());
    CHECK(orthogonality_graph(back).edge_count() ==
          orthogonality_graph(c.vectors).edge_count());
}

TEST_CASE("exported constructions reload and verify") {
    TempDir tmp;
    NamedConstruction c = cabello18();
    export_construction(c, tmp.file("channel.json"), tmp.file("vectors.json"));
    ChannelSpec channel = load_channel(tmp.file("channel.json"));
    VectorSet vectors = load_vectorset(tmp.file("vectors.json"));
    CHECK(channel.prob("h1", "v1") == Catch::Approx(0.5));

    NamedConstruction reloaded{"reloaded", vectors, channel.hypergraph(), std::nullopt};
    CHECK(verify_construction(reloaded).all_pass());
    CHECK(verify_zero_error_exhaustive(reloaded, full_codebook(reloaded)).passed);
}

TEST_CASE("certificate file round trip") {
    TempDir tmp;
    Certificate cert = certify(cabello18(), 4);
    save_certificate(cert, tmp.file("cert.json"));
    CHECK(load_certificate(tmp.file("cert.json")) == cert);
}

TEST_CASE("transcript JSONL shape") {
    NamedConstruction c = cabello18();
    SimulationResult sim = simulate_monte_carlo(c, full_codebook(c), 3, 1);
    const std::string text = transcript_to_jsonl(sim, 18, 16);
    std::istringstream lines(text);
    std::string line;
    std::size_t n = 0;
    json last;
    while (std::getline(lines, line)) {
        last = json::parse(line); // each line is standalone JSON
        ++n;
    }
    CHECK(n == 4); // 3 entries + summary
    REQUIRE(last.contains("summary"));
    CHECK(last["summary"]["achieved"] == 18);
    CHECK(last["summary"]["baseline"] == 16);
    CHECK(last["summary"]["gap"] == 2);
    CHECK(last["summary"]["success_fraction"] == 1.0);
}
