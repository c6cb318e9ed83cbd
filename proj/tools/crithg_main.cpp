// Command-line entry point: generate, transform, construct, verify, bound,
// search, and convert. Thin adapters over the library; no combinatorial
// logic lives here. Exit codes: 0 success, 1 domain/infeasibility errors,
// 2 I/O, parse, or usage errors.

#include "crithg/errors.hpp"
#include "crithg/io.hpp"
#include "crithg/transforms.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace crithg;

namespace {

struct GenArgs {
    std::string family;
    int m = 0, r = 0;
    long long q = 0;
    std::string out;
    bool json = false;
};

struct FileArgs {
    std::string in_a, in_b, out, log;
    bool paranoid = false, json = false;
};

struct ParamArgs {
    int n = 0, r = 0;
    std::string quantity = "f";
    std::string out, log;
    bool verify = false, json = false;
};

void emit_hypergraph(const Hypergraph& h, const std::string& out) {
    if (out.empty())
        std::cout << to_json_text(h) << "\n";
    else
        save_hypergraph(h, out);
}

std::string human_bounds(const BoundsReport& b) {
    std::string s;
    s += "bounds for n=" + std::to_string(b.n) + ", r=" + std::to_string(b.r) + "\n";
    s += "  de_caen_lower          = " + to_string(b.de_caen) + " (ceil " + b.de_caen_ceil.str() +
         ")\n";
    s += "  prop_lower             = " +
         (b.prop_lower ? to_string(*b.prop_lower) : "out of range (needs 2r-1 <= n < r^2)") + "\n";
    s += "  greedy_upper_U         = " + b.greedy_upper_U.str() + "\n";
    s += "  sidorenko_U            = " + (b.sidorenko_U ? b.sidorenko_U->str() : "out of range") +
         "\n";
    s += "  trivial_upper_complete = " +
         (b.trivial_upper_complete ? b.trivial_upper_complete->str() : "over cap") + "\n";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical intersecting hypergraph toolkit"};
    app.require_subcommand(1);
    Limits limits = Limits::from_env();

    GenArgs gen;
    ParamArgs construct_args, greedy_args, oracle_args, bounds_args;
    FileArgs product_args, augment_args, verify_args, convert_args;
    std::string convert_to;
    std::uint64_t edge_cap = limits.edge_cap;
    std::uint64_t subset_cap = limits.subset_cap;
    std::uint64_t budget = limits.solver_node_budget;
    std::uint64_t oracle_budget = limits.oracle_node_budget;

    auto add_caps = [&](CLI::App* cmd) {
        cmd->add_option("--edge-cap", edge_cap, "materialization cap on edge counts");
        cmd->add_option("--subset-cap", subset_cap, "cap on enumerated vertex subsets");
        cmd->add_option("--budget", budget, "solver node budget");
    };

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a base hypergraph family");
    gen_cmd->add_option("family", gen.family, "complete | complete-critical | plane | base")
        ->required()
        ->check(CLI::IsMember({"complete", "complete-critical", "plane", "base"}));
    gen_cmd->add_option("--m", gen.m, "vertex count (complete)");
    gen_cmd->add_option("--r", gen.r, "uniformity");
    gen_cmd->add_option("--q", gen.q, "plane order (1 or a prime)");
    gen_cmd->add_option("--out", gen.out, "output file (.json or text)");
    gen_cmd->add_flag("--json", gen.json, "print machine-readable metadata");
    add_caps(gen_cmd);

    CLI::App* product_cmd = app.add_subcommand("product", "wreath product of two hypergraph files");
    product_cmd->add_option("first", product_args.in_a)->required();
    product_cmd->add_option("second", product_args.in_b)->required();
    product_cmd->add_option("--out", product_args.out, "output file");
    add_caps(product_cmd);

    CLI::App* augment_cmd = app.add_subcommand("augment", "raise uniformity by one");
    augment_cmd->add_option("input", augment_args.in_a)->required();
    augment_cmd->add_option("--out", augment_args.out, "output file");
    augment_cmd->add_flag("--paranoid", augment_args.paranoid,
                          "verify criticality of the input first");
    add_caps(augment_cmd);

    CLI::App* construct_cmd =
        app.add_subcommand("construct", "build an n-vertex r-uniform critical hypergraph");
    construct_cmd->add_option("--n", construct_args.n)->required();
    construct_cmd->add_option("--r", construct_args.r)->required();
    construct_cmd->add_option("--out", construct_args.out, "output file (+ .plan.json sidecar)");
    construct_cmd->add_flag("--verify", construct_args.verify, "attach a solver certificate");
    add_caps(construct_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check structure / criticality of a file");
    verify_cmd->add_option("input", verify_args.in_a)->required();
    verify_cmd->add_flag("--json", verify_args.json);
    add_caps(verify_cmd);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the exact bound battery");
    bounds_cmd->add_option("--n", bounds_args.n)->required();
    bounds_cmd->add_option("--r", bounds_args.r)->required();
    bounds_cmd->add_flag("--json", bounds_args.json);
    add_caps(bounds_cmd);

    CLI::App* greedy_cmd = app.add_subcommand("greedy", "greedy covering construction");
    greedy_cmd->add_option("--n", greedy_args.n)->required();
    greedy_cmd->add_option("--r", greedy_args.r)->required();
    greedy_cmd->add_option("--out", greedy_args.out, "output hypergraph file");
    greedy_cmd->add_option("--log", greedy_args.log, "per-round log file (JSON)");
    add_caps(greedy_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact extremal value by brute force");
    oracle_cmd->add_option("--quantity", oracle_args.quantity)->check(CLI::IsMember({"f", "U"}));
    oracle_cmd->add_option("--n", oracle_args.n)->required();
    oracle_cmd->add_option("--r", oracle_args.r)->required();
    oracle_cmd->add_option("--out", oracle_args.out, "result file (JSON)");
    oracle_cmd->add_option("--budget", oracle_budget, "search node budget");
    oracle_cmd->add_option("--candidates", limits.oracle_candidate_cap, "candidate edge gate");

    CLI::App* convert_cmd = app.add_subcommand("convert", "convert between JSON and plain text");
    convert_cmd->add_option("input", convert_args.in_a)->required();
    convert_cmd->add_option("--out", convert_args.out)->required();
    convert_cmd->add_option("--to", convert_to, "json | text (default: by output extension)")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints usage to the diagnostic stream
        return 2;
    }

    try {
        if (gen_cmd->parsed()) {
            Hypergraph h = [&] {
                if (gen.family == "complete") {
                    if (gen.m < 1 || gen.r < 1) throw DomainError("gen complete needs --m and --r");
                    return complete_uniform(gen.m, gen.r, edge_cap);
                }
                if (gen.family == "complete-critical") {
                    if (gen.r < 2) throw DomainError("gen complete-critical needs --r >= 2");
                    return complete_critical(gen.r, edge_cap);
                }
                if (gen.family == "plane") return projective_plane(gen.q);
                auto [base, choice] = base_critical(gen.r, edge_cap);
                if (gen.json) std::cout << to_json_text(choice) << "\n";
                return base;
            }();
            emit_hypergraph(h, gen.out);
            if (!gen.out.empty() && !gen.json)
                std::cout << "wrote " << h.edge_count() << " edges on " << h.n() << " vertices to "
                          << gen.out << "\n";
        } else if (product_cmd->parsed()) {
            const Hypergraph a = load_hypergraph(product_args.in_a);
            const Hypergraph b = load_hypergraph(product_args.in_b);
            emit_hypergraph(wreath_product(a, b, edge_cap), product_args.out);
        } else if (augment_cmd->parsed()) {
            const Hypergraph h = load_hypergraph(augment_args.in_a);
            emit_hypergraph(add_one(h, edge_cap, augment_args.paranoid, budget), augment_args.out);
        } else if (construct_cmd->parsed()) {
            const BuildResult b = build_critical(construct_args.n, construct_args.r, edge_cap,
                                                 construct_args.verify, budget);
            emit_hypergraph(b.hypergraph, construct_args.out);
            if (!construct_args.out.empty()) {
                write_text_file(construct_args.out + ".plan.json", to_json_text(b.plan) + "\n");
                std::cout << "constructed n=" << b.hypergraph.n() << " r=" << construct_args.r
                          << " edges=" << b.hypergraph.edge_count()
                          << " case=" << to_string(b.plan.plan_case);
                if (b.verified)
                    std::cout << " verified="
                              << (b.verified->critical ? "critical" : "NOT-CRITICAL");
                else if (construct_args.verify)
                    std::cout << " verified=budget-exhausted";
                std::cout << "\n";
            }
        } else if (verify_cmd->parsed()) {
            const Hypergraph h = load_hypergraph(verify_args.in_a);
            HypergraphStats stats = compute_stats(h);
            if (h.uniformity()) {
                const CriticalityReport rep = is_critical(h, budget);
                stats.tau = rep.cover.tau;
                if (verify_args.json)
                    std::cout << R"({"stats":)" << to_json_text(stats) << R"(,"criticality":)"
                              << to_json_text(rep) << "}\n";
                else
                    std::cout << "n=" << stats.n << " r=" << *stats.r
                              << " edges=" << stats.edge_count
                              << " intersecting=" << (stats.intersecting ? "yes" : "no")
                              << " tau=" << rep.cover.tau << (rep.cover.optimal ? "" : " (unproven)")
                              << "\n"
                              << rep.detail << "\n";
            } else {
                if (verify_args.json)
                    std::cout << R"({"stats":)" << to_json_text(stats) << R"(,"criticality":null})"
                              << "\n";
                else
                    std::cout << "n=" << stats.n << " r=none edges=" << stats.edge_count
                              << " intersecting=" << (stats.intersecting ? "yes" : "no")
                              << "\nno uniformity tag; criticality undefined\n";
            }
        } else if (bounds_cmd->parsed()) {
            const BoundsReport rep = bounds_report(bounds_args.n, bounds_args.r, edge_cap);
            if (bounds_args.json)
                std::cout << to_json_text(rep) << "\n";
            else
                std::cout << human_bounds(rep);
        } else if (greedy_cmd->parsed()) {
            const GreedyCoverResult g = greedy_covering(greedy_args.n, greedy_args.r, subset_cap);
            emit_hypergraph(g.hypergraph, greedy_args.out);
            if (!greedy_args.log.empty())
                write_text_file(greedy_args.log, greedy_log_json(g) + "\n");
            if (!greedy_args.out.empty())
                std::cout << "greedy covering: " << g.hypergraph.edge_count() << " edges in "
                          << g.rounds.size() << " rounds\n";
        } else if (oracle_cmd->parsed()) {
            OracleOptions opts;
            opts.node_budget = oracle_budget;
            opts.candidate_cap = limits.oracle_candidate_cap;
            const OracleResult res = oracle_args.quantity == "f"
                                         ? brute_force_f(oracle_args.n, oracle_args.r, opts)
                                         : brute_force_U(oracle_args.n, oracle_args.r, opts);
            const std::string text = to_json_text(res) + "\n";
            if (oracle_args.out.empty())
                std::cout << text;
            else
                write_text_file(oracle_args.out, text);
        } else if (convert_cmd->parsed()) {
            const Hypergraph h = load_hypergraph(convert_args.in_a);
            const std::filesystem::path out = convert_args.out;
            const bool as_json =
                convert_to.empty() ? out.extension() == ".json" : convert_to == "json";
            write_text_file(out, as_json ? to_json_text(h) + "\n" : to_plain_text(h));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
