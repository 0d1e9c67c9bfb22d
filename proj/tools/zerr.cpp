// Command-line front end: construction generators, exact graph queries,
// protocol verification, Monte Carlo runs, and certificate emission.
//
// Exit codes: 0 success / positive verdict, 1 verification failure,
// 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zerr/zerr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

zerr::NamedConstruction make_construction(const std::string& which, std::size_t m) {
    if (which == "cabello18") return zerr::cabello18();
    if (which == "xu") return zerr::xu_family(m);
    throw zerr::ValidationError("unknown construction: " + which +
                                " (expected cabello18 or xu)");
}

// A file holding either a graph (JSON or DIMACS) or a channel; channels are
// reduced to their confusability graph.
zerr::Graph load_graph_or_channel(const std::string& path) {
    const std::string text = zerr::detail::read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = zerr::detail::parse_json(text, path);
        if (j.contains("inputs"))
            return zerr::confusability_graph(zerr::channel_from_json(j).hypergraph());
        return zerr::graph_from_json(j);
    }
    return zerr::graph_from_dimacs(text);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        zerr::detail::write_file(out_path, text);
}

int run(int argc, char** argv) {
    CLI::App app{"zero-error superadditivity toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "emit a built-in construction");
    std::string gen_name;
    std::size_t gen_m = 1;
    std::string out_channel, out_vectors;
    generate->add_option("construction", gen_name, "cabello18 or xu")->required();
    generate->add_option("--m", gen_m, "family parameter for xu");
    generate->add_option("--out-channel", out_channel)->required();
    generate->add_option("--out-vectors", out_vectors)->required();

    // alpha
    auto* alpha = app.add_subcommand("alpha", "exact independence number");
    std::string alpha_file;
    alpha->add_option("file", alpha_file, "graph or channel file")->required();

    // product
    auto* product = app.add_subcommand("product", "strong product of two graphs");
    std::string prod_a, prod_b, prod_out;
    product->add_option("left", prod_a)->required();
    product->add_option("right", prod_b)->required();
    product->add_option("--out", prod_out, "output file (default stdout)");

    // perfect
    auto* perfect = app.add_subcommand("perfect", "perfect-graph test");
    std::string perfect_file;
    perfect->add_option("file", perfect_file)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "construction + zero-error verification");
    std::string ver_channel, ver_vectors;
    verify->add_option("channel", ver_channel)->required();
    verify->add_option("vectors", ver_vectors)->required();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo protocol run");
    std::string sim_channel, sim_vectors, sim_out;
    std::size_t sim_trials = 10000;
    std::uint64_t sim_seed = 0;
    simulate->add_option("channel", sim_channel)->required();
    simulate->add_option("vectors", sim_vectors)->required();
    simulate->add_option("--trials", sim_trials);
    simulate->add_option("--seed", sim_seed);
    simulate->add_option("--out", sim_out, "transcript file (default stdout)");

    // certify
    auto* certify = app.add_subcommand("certify", "superadditivity certificate");
    std::string cert_channel, cert_vectors, cert_out, cert_name = "channel";
    std::size_t assist_dim = 0;
    certify->add_option("channel", cert_channel)->required();
    certify->add_option("--vectors", cert_vectors);
    certify->add_option("--assist-dim", assist_dim)->required();
    certify->add_option("--name", cert_name);
    certify->add_option("--out", cert_out, "certificate file (default stdout)");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "classically assisted capacity d*alpha");
    std::string base_channel;
    std::size_t base_d = 0;
    baseline->add_option("channel", base_channel)->required();
    baseline->add_option("--d", base_d, "perfect classical channel levels")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*generate) {
        auto c = make_construction(gen_name, gen_m);
        zerr::export_construction(c, out_channel, out_vectors);
        std::cout << c.name << ": " << c.vectors.size() << " vectors, "
                  << c.hypergraph.hyperedges().size() << " hyperedges\n";
        return kExitOk;
    }
    if (*alpha) {
        auto w = zerr::independence_number_exact(load_graph_or_channel(alpha_file));
        std::cout << w.size << "\n";
        for (std::size_t i = 0; i < w.members.size(); ++i)
            std::cerr << w.members[i] << (i + 1 < w.members.size() ? " " : "\n");
        return kExitOk;
    }
    if (*product) {
        auto p = zerr::strong_product(zerr::load_graph(prod_a), zerr::load_graph(prod_b));
        emit(zerr::graph_to_json(p).dump(2) + "\n", prod_out);
        return kExitOk;
    }
    if (*perfect) {
        auto verdict = zerr::is_perfect(load_graph_or_channel(perfect_file));
        if (verdict.is_perfect) {
            std::cout << "perfect\n";
        } else {
            std::cout << (verdict.witness_in_complement ? "imperfect (odd antihole:"
                                                        : "imperfect (odd hole:");
            for (const auto& v : verdict.witness)
                std::cout << " " << v;
            std::cout << ")\n";
        }
        return kExitOk;
    }
    if (*verify) {
        zerr::NamedConstruction c{"user", zerr::load_vectorset(ver_vectors),
                                  zerr::load_channel(ver_channel).hypergraph(), std::nullopt};
        auto report = zerr::verify_construction(c);
        bool ok = report.all_pass();
        for (const auto& check : report.checks)
            std::cout << (check.pass ? "pass " : "FAIL ") << check.check << ": "
                      << check.detail << "\n";
        auto protocol = zerr::verify_zero_error_exhaustive(c, zerr::full_codebook(c));
        if (protocol.passed) {
            std::cout << "pass protocol_zero_error: certified "
                      << protocol.certified_messages << " messages\n";
        } else {
            ok = false;
            std::cout << "FAIL protocol_zero_error:\n";
            for (const auto& f : protocol.failures)
                std::cout << "  " << f << "\n";
        }
        return ok ? kExitOk : kExitVerificationFailed;
    }
    if (*simulate) {
        zerr::NamedConstruction c{"user", zerr::load_vectorset(sim_vectors),
                                  zerr::load_channel(sim_channel).hypergraph(), std::nullopt};
        auto cb = zerr::full_codebook(c);
        auto sim = zerr::simulate_monte_carlo(c, cb, sim_trials, sim_seed);
        // summary context: exhaustively certified count vs the classical
        // baseline at the construction's own dimension
        auto protocol = zerr::verify_zero_error_exhaustive(c, cb);
        const std::size_t baseline_value =
            zerr::classical_baseline(c, c.vectors.dimension());
        emit(zerr::transcript_to_jsonl(sim, protocol.certified_messages, baseline_value),
             sim_out);
        return kExitOk;
    }
    if (*certify) {
        std::optional<zerr::VectorSet> vectors;
        if (!cert_vectors.empty())
            vectors = zerr::load_vectorset(cert_vectors);
        auto cert = zerr::certify(zerr::load_channel(cert_channel).hypergraph(), vectors,
                                  assist_dim, cert_name);
        const std::string text = zerr::certificate_to_json(cert).dump(2) + "\n";
        emit(text, cert_out);
        if (!cert_out.empty())
            std::cout << zerr::to_string(cert.verdict) << "\n";
        for (const auto& e : cert.evidence)
            if (e.check == "protocol_zero_error" && !e.pass)
                return kExitVerificationFailed;
        return kExitOk;
    }
    if (*baseline) {
        zerr::NamedConstruction c{"user", zerr::VectorSet(),
                                  zerr::load_channel(base_channel).hypergraph(), std::nullopt};
        std::cout << zerr::classical_baseline(c, base_d) << "\n";
        return kExitOk;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const zerr::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zerr::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zerr::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}
