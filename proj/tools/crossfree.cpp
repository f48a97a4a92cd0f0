// crossfree: count, enumerate and map partitions avoiding right crossings,
// the matching and sequence families equinumerous with them, and their
// generating function.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "crossfree/bijections.hpp"
#include "crossfree/enumeration.hpp"
#include "crossfree/patterns.hpp"
#include "crossfree/series.hpp"
#include "crossfree/verify.hpp"
#include "json.hpp"

namespace {

using namespace crossfree;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CellArgs {
    std::string class_name;
    int n = 0;
    std::optional<int> k;
    std::string mode = "pruned";
    std::string format = "text";
};

std::vector<int> k_range(const CellArgs& a) {
    if (a.k) return {*a.k};
    std::vector<int> ks;
    for (int k = 0; k < a.n; ++k) ks.push_back(k);
    return ks;
}

int run_count(const CellArgs& a) {
    const ClassKind kind = parse_class_kind(a.class_name);
    const EnumMode mode = parse_mode(a.mode);
    std::vector<Count> counts;
    for (int k : k_range(a)) counts.push_back(count_class({kind, a.n, k}, mode));

    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["class"] = a.class_name;
        j["n"] = a.n;
        if (a.k) {
            j["k"] = *a.k;
            j["count"] = counts.front();
        } else {
            j["counts"] = counts;
        }
        std::cout << j.dump() << '\n';
    } else if (a.format == "csv") {
        std::cout << "class,n,k,count\n";
        auto ks = k_range(a);
        for (std::size_t t = 0; t < ks.size(); ++t) {
            std::cout << a.class_name << ',' << a.n << ',' << ks[t] << ',' << counts[t] << '\n';
        }
    } else {
        Count total = 0;
        for (std::size_t t = 0; t < counts.size(); ++t) {
            std::cout << (t ? " " : "") << counts[t];
            total = checked_add(total, counts[t]);
        }
        if (counts.size() > 1) std::cout << " | total " << total;
        std::cout << '\n';
    }
    return 0;
}

int run_enumerate(const CellArgs& a) {
    const ClassKind kind = parse_class_kind(a.class_name);
    const EnumMode mode = parse_mode(a.mode);
    for (int k : k_range(a)) {
        for (const ClassObject& obj : enumerate_class({kind, a.n, k}, mode)) {
            if (a.format == "json") {
                nlohmann::ordered_json j;
                j["n"] = a.n;
                j["k"] = k;
                j["object"] = format_object(obj);
                std::cout << j.dump() << '\n';
            } else {
                std::cout << format_object(obj) << '\n';
            }
        }
    }
    return 0;
}

void map_one(const std::string& direction, const std::string& text) {
    if (direction == "alpha") {
        std::cout << format_sequence(alpha(parse_diagram(text))) << '\n';
    } else if (direction == "alpha-inv") {
        std::cout << format_diagram(alpha_inv(parse_sequence(text))) << '\n';
    } else if (direction == "reduce") {
        const ArcDiagram m = parse_diagram(text);
        const ArcDiagram p = reduce(m);
        std::cout << format_diagram(p) << '\n'
                  << "# alignments=" << count_statistic(m, Statistic::NeighborAlignments)
                  << " transients=" << count_statistic(p, Statistic::Transients) << '\n';
    } else {
        const ArcDiagram p = parse_diagram(text);
        const ArcDiagram m = expand(p);
        std::cout << format_diagram(m) << '\n'
                  << "# transients=" << count_statistic(p, Statistic::Transients)
                  << " alignments=" << count_statistic(m, Statistic::NeighborAlignments) << '\n';
    }
}

int run_map(const std::string& direction, const std::optional<std::string>& input) {
    if (input) {
        map_one(direction, *input);
        return 0;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        map_one(direction, line);
    }
    return 0;
}

int run_gf(int order, const std::string& format) {
    const BiSeries f = rhs_series(order);
    if (format == "csv") {
        std::cout << "n,k,coeff\n";
        for (int n = 1; n <= order; ++n)
            for (int k = 0; k < n; ++k) std::cout << n << ',' << k << ',' << f.coeff(n, k) << '\n';
    } else {
        for (int n = 1; n <= order; ++n) {
            std::cout << n << ':';
            for (int k = 0; k < n; ++k) std::cout << ' ' << f.coeff(n, k);
            std::cout << " | total " << f.row_sum(n) << '\n';
        }
    }
    return 0;
}

int run_verify(const VerifyOptions& options, const std::string& format) {
    const VerifyReport report = verify(options);
    if (format == "text") {
        std::cout << "n k P S CT gf ok\n";
        for (const auto& c : report.cells) {
            std::cout << c.n << ' ' << c.k << ' ' << c.p << ' ' << c.s << ' ' << c.ct << ' ' << c.gf
                      << ' ' << (c.agree() ? "yes" : "NO") << '\n';
        }
        std::cout << report.cells.size() << " cells, " << report.mismatches << " mismatches\n";
    } else {
        for (const auto& c : report.cells) std::cout << cell_json(c) << '\n';
        nlohmann::ordered_json summary;
        summary["cells"] = report.cells.size();
        summary["mismatches"] = report.mismatches;
        summary["first_mismatch"] =
            report.first_mismatch ? nlohmann::json::parse(cell_json(*report.first_mismatch)) : nlohmann::json();
        std::cout << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
    }
    std::cerr << "verify: " << report.cells.size() << " cells in " << report.wall_seconds << " s\n";
    return report.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partitions avoiding right crossings: counts, bijections and generating function"};
    app.require_subcommand(1);

    const std::vector<std::string> classes = {"P", "CT", "S"};
    const std::vector<std::string> modes = {"filter", "pruned"};

    CellArgs count_args;
    auto* count = app.add_subcommand("count", "Count the objects of one class for a given n");
    count->add_option("--class", count_args.class_name, "P, CT or S")->required()->check(CLI::IsMember(classes));
    count->add_option("--n", count_args.n, "Size parameter n >= 1")->required();
    count->add_option("--k", count_args.k, "Only this k (default: the whole row)");
    count->add_option("--mode", count_args.mode, "filter or pruned")->check(CLI::IsMember(modes));
    count->add_option("--format", count_args.format)->check(CLI::IsMember({"text", "json", "csv"}));

    CellArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "List the objects of one class, one per line");
    enumerate->add_option("--class", enum_args.class_name, "P, CT or S")->required()->check(CLI::IsMember(classes));
    enumerate->add_option("--n", enum_args.n, "Size parameter n >= 1")->required();
    enumerate->add_option("--k", enum_args.k, "Only this k (default: every k)");
    enumerate->add_option("--mode", enum_args.mode, "filter or pruned")->check(CLI::IsMember(modes));
    enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember({"text", "json"}));

    std::string direction;
    std::optional<std::string> map_input;
    auto* map = app.add_subcommand("map", "Apply a bijection to an object (argument or stdin lines)");
    map->add_option("--direction", direction)->required()->check(
        CLI::IsMember({"alpha", "alpha-inv", "reduce", "expand"}));
    map->add_option("input", map_input, "Diagram like \"3;{1,2},{3}\" or sequence like \"0,1,0\"");

    int order = 8;
    std::string gf_format = "text";
    auto* gf = app.add_subcommand("gf", "Print the generating-function coefficient table");
    gf->add_option("--order", order, "Truncation order in x")->check(CLI::Range(1, 200));
    gf->add_option("--format", gf_format)->check(CLI::IsMember({"text", "csv"}));

    VerifyOptions vopts;
    vopts.workers = std::max(1U, std::thread::hardware_concurrency());
    std::optional<int> max_k;
    std::string verify_mode = "pruned";
    std::string verify_format = "json";
    auto* ver = app.add_subcommand("verify", "Check P = S = CT = series coefficient cell by cell");
    ver->add_option("--max-n", vopts.max_n, "Largest n (default 7)")->check(CLI::PositiveNumber);
    ver->add_option("--max-k", max_k, "Largest k per row")->check(CLI::NonNegativeNumber);
    ver->add_option("--workers", vopts.workers, "Worker threads")->envname("CROSSFREE_WORKERS")->check(
        CLI::PositiveNumber);
    ver->add_option("--mode", verify_mode, "How P and S are enumerated")->check(CLI::IsMember(modes));
    ver->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*count) return run_count(count_args);
        if (*enumerate) return run_enumerate(enum_args);
        if (*map) return run_map(direction, map_input);
        if (*gf) return run_gf(order, gf_format);
        vopts.max_k = max_k;
        vopts.mode = parse_mode(verify_mode);
        return run_verify(vopts, verify_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
