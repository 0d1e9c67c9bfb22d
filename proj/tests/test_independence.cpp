#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zerr/graph.hpp"
#include "zerr/independence.hpp"

using namespace zerr;

TEST_CASE("brute-force oracle on closed forms") {
    CHECK(independence_number_bruteforce(testutil::cycle(5)) == 2);
    CHECK(independence_number_bruteforce(edgeless(4)) == 4);
    CHECK(independence_number_bruteforce(testutil::path(4)) == 2);
    CHECK(independence_number_bruteforce(complete(7)) == 1);
}

TEST_CASE("brute-force oracle size cap") {
    CHECK_THROWS_AS(independence_number_bruteforce(edgeless(25)), ResourceLimitError);
}

TEST_CASE("exact solver on closed forms") {
    for (std::size_t n : {1, 2, 5, 9}) {
        CHECK(independence_number_exact(edgeless(n)).size == n);
        CHECK(independence_number_exact(complete(n)).size == 1);
    }
    auto w = independence_number_exact(testutil::cycle(5));
    CHECK(w.size == 2);
    CHECK(w.members.size() == 2);
    CHECK_FALSE(testutil::cycle(5).adjacent(w.members[0], w.members[1]));
}

TEST_CASE("exact solver agrees with the brute-force oracle") {
    std::mt19937 rng(101);
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = 1 + t % 16;
        const double p = (t % 3 + 1) * 0.25;
        Graph g = testutil::random_graph(rng, n, p);
        auto w = independence_number_exact(g);
        CHECK(w.size == independence_number_bruteforce(g));
        // witness really is independent
        for (std::size_t a = 0; a < w.members.size(); ++a)
            for (std::size_t b = a + 1; b < w.members.size(); ++b)
                CHECK_FALSE(g.adjacent(w.members[a], w.members[b]));
    }
}

TEST_CASE("witness is deterministic and canonical") {
    std::mt19937 rng(202);
    Graph g = testutil::random_graph(rng, 12, 0.4);
    auto w1 = independence_number_exact(g);
    auto w2 = independence_number_exact(g);
    CHECK(w1.members == w2.members);
    CHECK(std::is_sorted(w1.members.begin(), w1.members.end()));
}

TEST_CASE("component additivity") {
    std::mt19937 rng(303);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(rng, 12, 0.15);
        std::size_t total = 0;
        for (const Graph& comp : connected_components(g))
            total += independence_number_exact(comp).size;
        CHECK(independence_number_exact(g).size == total);
    }
}

TEST_CASE("clique number equals independence of the complement") {
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(testutil::cycle(5)) == 2);
    std::mt19937 rng(404);
    for (int t = 0; t < 15; ++t) {
        Graph g = testutil::random_graph(rng, 10, 0.5);
        CHECK(clique_number(g) == independence_number_exact(complement(g)).size);
    }
}

TEST_CASE("solver limit is enforced per connected component") {
    Graph big = complete(2); // will be replaced below
    {
        std::vector<std::string> labels(130);
        for (std::size_t i = 0; i < labels.size(); ++i)
            labels[i] = "v" + std::to_string(i);
        big = Graph(std::move(labels));
        for (std::size_t i = 0; i + 1 < big.size(); ++i)
            big.add_edge(i, i + 1); // one long path, one component
    }
    CHECK_THROWS_AS(independence_number_exact(big), ResourceLimitError);

    // 130 isolated vertices decompose into singleton components: no limit hit
    std::vector<std::string> labels(130);
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = "v" + std::to_string(i);
    CHECK(independence_number_exact(Graph(std::move(labels))).size == 130);
}
