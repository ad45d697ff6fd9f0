// Command-line front end: closed-form values, witness construction and
// verification, Gallai partitions, classical Ramsey reproduction, and format
// export. Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 budget exhausted / inconclusive.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gallai/construct.hpp"
#include "gallai/detect.hpp"
#include "gallai/formula.hpp"
#include "gallai/graph.hpp"
#include "gallai/partition.hpp"
#include "gallai/patterns.hpp"
#include "gallai/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using nlohmann::json;

gallai::Pattern parse_pattern(const std::string& name) {
    if (auto p = gallai::pattern_from_name(name)) return *p;
    throw CLI::ValidationError("unknown pattern '" + name +
                               "' (expected K3, S3, S3plus, B3, B3plus or K4)");
}

const char* kDotPens[] = {"red",     "blue",    "green3",  "orange",
                          "purple",  "brown",   "deepskyblue", "magenta",
                          "gold3",   "gray40",  "darkgreen",   "cyan3"};

void write_dot(const gallai::EdgeColoredCompleteGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "graph gallai {\n  node [shape=point];\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            out << "  " << u << " -- " << v << " [color=\""
                << kDotPens[(g.color(u, v) - 1) % std::size(kDotPens)] << "\"];\n";
    out << "}\n";
}

struct Options {
    bool json = false;
    int threads = 1;
    std::string cache_dir;
};

gallai::QCache make_cache(const Options& opt) {
    if (!opt.cache_dir.empty()) return gallai::QCache(opt.cache_dir);
    return gallai::QCache(gallai::default_cache_dir());
}

// File arguments come from the user; anything wrong with them is a usage
// error rather than a verification failure.
gallai::EdgeColoredCompleteGraph load_input(const std::string& path) {
    try {
        return gallai::EdgeColoredCompleteGraph::load_gcol_file(path);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(e.what());
    }
}

int cmd_value(const Options& opt, int r, int s, int t) {
    const gallai::Parameters p{r, s, t};
    const auto value = gallai::gallai_ramsey_value(p);
    const auto cond = gallai::condition_label(p);
    if (opt.json) {
        json j{{"r", r},       {"s", s},
               {"t", t},       {"gr", value},
               {"f", value - 1}, {"condition", gallai::condition_name(cond)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "gr=" << value << " condition=" << gallai::condition_name(cond) << "\n";
    }
    return kExitOk;
}

int cmd_inequalities(const Options& opt, int max) {
    const auto report = gallai::check_inequalities(max, max, max);
    if (opt.json) {
        json items = json::array();
        for (const auto& inst : report.instances)
            items.push_back({{"ineq", inst.index},
                             {"r", inst.at.r},
                             {"s", inst.at.s},
                             {"t", inst.at.t},
                             {"ratio", std::to_string(inst.num) + "/" + std::to_string(inst.den)},
                             {"pass", inst.pass},
                             {"equality", inst.equality}});
        json j{{"max", max}, {"violations", report.violations}, {"instances", items}};
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& inst : report.instances)
            std::cout << "ineq=" << inst.index << " triple=(" << inst.at.r << "," << inst.at.s
                      << "," << inst.at.t << ") ratio=" << inst.num << "/" << inst.den
                      << " status=" << (inst.pass ? "pass" : "fail") << "\n";
        std::cout << "violations=" << report.violations << "\n";
    }
    return report.violations == 0 ? kExitOk : kExitFail;
}

int cmd_construct(const Options& opt, int r, int s, int t, const std::string& out_path) {
    const gallai::Parameters p{r, s, t};
    const auto cache = make_cache(opt);
    const auto g = gallai::construct_lower_bound(p, cache);
    if (!out_path.empty()) g.save_gcol_file(out_path);
    const auto cond = gallai::condition_label(p);
    if (opt.json) {
        json j{{"order", g.order()},
               {"k", g.palette()},
               {"condition", gallai::condition_name(cond)},
               {"out", out_path}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "order=" << g.order() << " k=" << g.palette()
                  << " condition=" << gallai::condition_name(cond);
        if (!out_path.empty()) std::cout << " out=" << out_path;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& path, int r, int s, int t) {
    const auto g = load_input(path);
    const gallai::Parameters p{r, s, t};
    const auto cert = gallai::verify_construction(g, p, opt.threads);
    if (opt.json) {
        json j{{"order_ok", cert.order_ok}, {"gallai_ok", cert.gallai_ok},
               {"avoid_ok", cert.avoid_ok}, {"order", cert.actual_order},
               {"expected", cert.expected_order}, {"detail", cert.detail}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << std::boolalpha << "order_ok=" << cert.order_ok
                  << " gallai_ok=" << cert.gallai_ok << " avoid_ok=" << cert.avoid_ok << "\n";
        if (!cert.detail.empty()) std::cout << "detail: " << cert.detail << "\n";
    }
    return cert.all_ok() ? kExitOk : kExitFail;
}

int cmd_partition(const Options& opt, const std::string& path, bool minimize) {
    const auto g = load_input(path);
    auto part = gallai::find_gallai_partition(g);
    if (minimize) part = gallai::coarsen_to_minimal(g, part);
    if (opt.json) {
        json j{{"q", part.parts.size()},
               {"parts", part.parts},
               {"cross_colors", part.cross_colors}};
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& pt : part.parts) {
            std::cout << "part:";
            for (int v : pt) std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << "cross_colors=";
        for (std::size_t i = 0; i < part.cross_colors.size(); ++i)
            std::cout << (i ? "," : "") << part.cross_colors[i];
        std::cout << "\nq=" << part.parts.size() << "\n";
    }
    return kExitOk;
}

int cmd_ramsey(const Options& opt, const std::string& a, const std::string& b, int nmax,
               double time_s, std::uint64_t nodes) {
    gallai::SearchBudget budget;
    budget.time_limit_s = time_s;
    budget.max_nodes = nodes;
    const auto result =
        gallai::compute_ramsey(parse_pattern(a), parse_pattern(b), nmax, budget);
    if (opt.json) {
        json j{{"nodes", result.nodes}};
        if (result.value)
            j["R"] = *result.value;
        else
            j["status"] = "inconclusive";
        std::cout << j.dump() << "\n";
    } else if (result.value) {
        std::cout << "R=" << *result.value << " nodes=" << result.nodes << "\n";
    } else {
        std::cout << "status=inconclusive nodes=" << result.nodes << "\n";
    }
    return result.value ? kExitOk : kExitBudget;
}

int cmd_witness(const Options& opt, const std::string& a, const std::string& b, int n,
                double time_s, std::uint64_t seed, const std::string& out_path,
                const std::string& method) {
    gallai::SearchBudget budget;
    budget.time_limit_s = time_s;
    budget.seed = seed;
    const gallai::Pattern pa = parse_pattern(a), pb = parse_pattern(b);
    gallai::SearchResult result{gallai::SearchStatus::BudgetExhausted, std::nullopt, 0};
    if (method == "dfs" || (method == "auto" && n <= 8))
        result = gallai::witness_search(pa, pb, n, budget);
    else
        result = gallai::local_search_witness(pa, pb, n, budget);

    std::string status;
    int code = kExitBudget;
    switch (result.status) {
        case gallai::SearchStatus::Found:
            status = "found";
            code = kExitOk;
            if (!out_path.empty()) result.witness->save_gcol_file(out_path);
            break;
        case gallai::SearchStatus::ExhaustiveNone:
            status = "exhaustive-none";
            code = kExitFail;
            break;
        case gallai::SearchStatus::BudgetExhausted:
            status = "budget-exhausted";
            code = kExitBudget;
            break;
    }
    if (opt.json) {
        json j{{"status", status}, {"nodes", result.nodes}};
        if (result.witness && !out_path.empty()) j["out"] = out_path;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "status=" << status << " nodes=" << result.nodes;
        if (result.witness && !out_path.empty()) std::cout << " out=" << out_path;
        std::cout << "\n";
    }
    return code;
}

int cmd_export(const Options& opt, const std::string& in_path, const std::string& dot_path) {
    const auto g = load_input(in_path);
    write_dot(g, dot_path);
    if (opt.json)
        std::cout << json{{"out", dot_path}}.dump() << "\n";
    else
        std::cout << "wrote " << dot_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gallai-Ramsey numbers for B3+/S3+/K3 targets: closed-form values, "
                 "verified lower-bound colorings, Gallai partitions, Ramsey search"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit one JSON object instead of text");
    app.add_option("--threads", opt.threads, "worker cap for verification scans")
        ->check(CLI::PositiveNumber);

    int r = 0, s = 0, t = 0, max = 8, n = 0, nmax = 10;
    double time_s = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0x6a09e667f3bcc908ull;
    std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max();
    std::string path, out_path, dot_path, pat_a, pat_b, method = "auto";
    bool minimize = false;

    auto* value = app.add_subcommand("value", "closed-form gr_k value and condition label");
    value->add_option("r", r)->required();
    value->add_option("s", s)->required();
    value->add_option("t", t)->required();

    auto* ineq = app.add_subcommand("inequalities", "exact-rational ratio-bound report");
    ineq->add_option("--max", max, "bound on r, s, t (default 8)")->check(CLI::Range(2, 12));

    auto* cons = app.add_subcommand("construct", "build the verified lower-bound coloring");
    cons->add_option("r", r)->required();
    cons->add_option("s", s)->required();
    cons->add_option("t", t)->required();
    cons->add_option("--out", out_path, "write the coloring as .gcol");
    cons->add_option("--cache", opt.cache_dir, "witness cache directory");

    auto* verify = app.add_subcommand("verify", "check a .gcol coloring against (r,s,t)");
    verify->add_option("file", path)->required();
    verify->add_option("--params", "r s t")->expected(3)->required();

    auto* part = app.add_subcommand("partition", "Gallai partition of a .gcol coloring");
    part->add_option("file", path)->required();
    part->add_flag("--minimize", minimize, "coarsen to a merge-minimal partition");

    auto* ramsey = app.add_subcommand("ramsey", "two-color Ramsey number by exhaustive DFS");
    ramsey->add_option("a", pat_a)->required();
    ramsey->add_option("b", pat_b)->required();
    ramsey->add_option("--nmax", nmax, "largest order to try");
    ramsey->add_option("--time", time_s, "wall-clock budget in seconds");
    ramsey->add_option("--nodes", nodes, "DFS node budget per order");

    auto* witness = app.add_subcommand("witness", "mine one avoidance coloring at order n");
    witness->add_option("a", pat_a)->required();
    witness->add_option("b", pat_b)->required();
    witness->add_option("n", n)->required()->check(CLI::Range(1, 64));
    witness->add_option("--time", time_s, "wall-clock budget in seconds");
    witness->add_option("--seed", seed, "PRNG seed (local search)");
    witness->add_option("--out", out_path, "write the witness as .gcol");
    witness->add_option("--method", method)->check(CLI::IsMember({"auto", "dfs", "local"}));

    auto* exp = app.add_subcommand("export", "emit DOT with one pen color per palette color");
    exp->add_option("file", path)->required();
    exp->add_option("--dot", dot_path, "output DOT path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*value) return cmd_value(opt, r, s, t);
        if (*ineq) return cmd_inequalities(opt, max);
        if (*cons) return cmd_construct(opt, r, s, t, out_path);
        if (*verify) {
            const auto params = verify->get_option("--params")->results();
            return cmd_verify(opt, path, std::stoi(params[0]), std::stoi(params[1]),
                              std::stoi(params[2]));
        }
        if (*part) return cmd_partition(opt, path, minimize);
        if (*ramsey) return cmd_ramsey(opt, pat_a, pat_b, nmax, time_s, nodes);
        if (*witness) return cmd_witness(opt, pat_a, pat_b, n, time_s, seed, out_path, method);
        if (*exp) return cmd_export(opt, path, dot_path);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gallai::TimeoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
