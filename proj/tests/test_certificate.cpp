#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zerr/certificate.hpp"
#include "zerr/io.hpp"

using namespace zerr;

TEST_CASE("cabello18 with a matching quantum channel is superadditive") {
    Certificate cert = certify(cabello18(), 4);
    CHECK(cert.verdict == Verdict::Superadditive);
    CHECK(cert.n == 18);
    CHECK(cert.alpha == 4);
    CHECK(cert.clique == 4);
    CHECK(cert.baseline == 16);
    REQUIRE(cert.achieved.has_value());
    CHECK(*cert.achieved == 18);
}

TEST_CASE("undersized quantum channels trigger the dimension no-go") {
    for (std::size_t dim : {2, 3}) {
        Certificate cert = certify(cabello18(), dim);
        CHECK(cert.verdict == Verdict::NoGoDimension);
        CHECK_FALSE(cert.achieved.has_value());
    }
}

TEST_CASE("perfect confusability graphs trigger the perfect-graph no-go") {
    // bipartite supports: inputs pair up only along singleton or 2-element edges
    ChannelHypergraph hg({"x0", "x1", "x2", "x3"},
                         {{"y0", {"x0", "x1"}}, {"y1", {"x1", "x2"}}, {"y2", {"x2", "x3"}},
                          {"y3", {"x3"}}});
    for (std::size_t dim : {1, 2, 4, 7}) {
        Certificate cert = certify(hg, std::nullopt, dim, "pathlike");
        CHECK(cert.verdict == Verdict::NoGoPerfectGraph);
    }
}

TEST_CASE("m=1 family is inconclusive: protocol passes but no gap exists") {
    Certificate cert = certify(xu_family(1), 3);
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK(cert.alpha == 9);
    CHECK(cert.baseline == 27);
    REQUIRE(cert.achieved.has_value());
    CHECK(*cert.achieved == 21); // all messages decode, short of the baseline
}

TEST_CASE("m=2 family is superadditive") {
    Certificate cert = certify(xu_family(2), 3);
    CHECK(cert.verdict == Verdict::Superadditive);
    CHECK(cert.alpha == 18);
    CHECK(cert.baseline == 54);
    REQUIRE(cert.achieved.has_value());
    CHECK(*cert.achieved == 57);
}

TEST_CASE("imperfect graph without a vector realization stays inconclusive") {
    // C5 supports: each edge of the pentagon is one output
    std::vector<std::string> inputs{"x0", "x1", "x2", "x3", "x4"};
    std::vector<Hyperedge> edges;
    for (std::size_t i = 0; i < 5; ++i)
        edges.push_back({"y" + std::to_string(i),
                         {"x" + std::to_string(i), "x" + std::to_string((i + 1) % 5)}});
    Certificate cert = certify(ChannelHypergraph(inputs, edges), std::nullopt, 3, "pentagon");
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK_FALSE(cert.achieved.has_value());
}

TEST_CASE("verdicts are mutually exclusive and sound on random channels") {
    std::mt19937 rng(31);
    for (int t = 0; t < 30; ++t) {
        ChannelSpec channel = testutil::random_channel(rng, 3 + t % 8);
        const std::size_t dim = 1 + t % 4;
        Certificate cert = certify(channel, std::nullopt, dim, "random");
        CHECK(cert.baseline == cert.dim * cert.alpha);
        // evidence sufficiency line consistent with the recorded numbers
        for (const auto& e : cert.evidence)
            if (e.check == "sufficiency_n_gt_alpha_dim")
                CHECK(e.pass == (cert.n > cert.alpha * cert.dim));
        if (cert.verdict == Verdict::NoGoPerfectGraph) {
            CHECK(is_perfect(confusability_graph(channel.hypergraph())).is_perfect);
            CHECK(cert.alpha * cert.clique >= cert.n);
        }
        // no-go verdicts never coexist with a certified gap
        if (cert.achieved && *cert.achieved > cert.baseline)
            CHECK(cert.verdict == Verdict::Superadditive);
    }
}

TEST_CASE("superadditive certificates replay from their own inputs") {
    NamedConstruction c = cabello18();
    Certificate cert = certify(c, 4);
    REQUIRE(cert.verdict == Verdict::Superadditive);
    // re-run the two legs independently of certify()
    ProtocolReport protocol = verify_zero_error_exhaustive(c, full_codebook(c));
    CHECK(protocol.certified_messages == *cert.achieved);
    CHECK(classical_baseline(c, cert.dim) == cert.baseline);
}

TEST_CASE("certificate JSON round trip") {
    Certificate cert = certify(cabello18(), 4);
    Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back == cert);

    Certificate nogo = certify(cabello18(), 2);
    CHECK(certificate_from_json(certificate_to_json(nogo)) == nogo);

    CHECK(certificate_to_json(cert)["schema"] == 1);
    CHECK_THROWS_AS(verdict_from_string("BOGUS"), ParseError);
}
