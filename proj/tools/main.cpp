#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polyvenn/io.hpp"
#include "polyvenn/layout.hpp"
#include "polyvenn/polyomino.hpp"
#include "polyvenn/scd.hpp"
#include "polyvenn/search.hpp"
#include "polyvenn/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInvalid;
    }
    out << text;
    return kExitOk;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_gen(int n, const std::string& method, const std::string& out_path) {
    using namespace polyvenn;
    if (n > 20) return fail_usage("gen: n must be at most 20");
    if (method == "naive" && n < 3) return fail_usage("gen: the naive method needs n >= 3");
    if (method != "naive" && n < 2) return fail_usage("gen: the scd methods need n >= 2");
    GridDiagram diagram =
        method == "naive"
            ? layout_naive(n)
            : layout_scd(make_scd(n, method == "scd-aigner" ? ScdMethod::aigner
                                                            : ScdMethod::christmas_tree));
    return emit(serialize_pvn(diagram), out_path);
}

int run_validate(const std::string& path) {
    using namespace polyvenn;
    GridDiagram diagram = parse_pvn(read_file(path));
    ValidationReport report = validate_venn(diagram);
    std::cout << format_report(report);
    return report.overall ? kExitOk : kExitInvalid;
}

int run_render(const std::string& path, const std::string& format,
               const std::string& out_path) {
    using namespace polyvenn;
    GridDiagram diagram = parse_pvn(read_file(path));
    std::string text;
    if (format == "ascii") {
        text = render_ascii(diagram);
    } else {
        try {
            text = render_svg(diagram);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInvalid;
        }
    }
    return emit(text, out_path);
}

int run_scd(int n, const std::string& method) {
    using namespace polyvenn;
    ChainDecomposition dec =
        make_scd(n, method == "aigner" ? ScdMethod::aigner : ScdMethod::christmas_tree);
    for (const Chain& chain : dec.chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << mask_letters(chain[i]);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_count(int k, const std::string& cls, bool oracle) {
    using namespace polyvenn;
    if (oracle && cls != "column-convex")
        return fail_usage("count: --oracle applies only to --class column-convex");
    if (cls == "fixed") {
        std::cout << count_fixed_polyominoes(k) << "\n";
    } else if (cls == "free") {
        std::cout << count_free_polyominoes(k) << "\n";
    } else if (oracle) {
        std::cout << count_column_convex_bruteforce(k) << "\n";
    } else {
        std::cout << count_column_convex(k) << "\n";
    }
    return kExitOk;
}

int run_search(int n, const std::string& target, const std::string& box,
               std::uint64_t nodes, double seconds) {
    using namespace polyvenn;
    SearchLimits limits{nodes, seconds};
    SearchResult result;
    if (target == "min-area") {
        if (!box.empty()) return fail_usage("search: --box applies only to fill-box");
        result = search_min_area(n, limits);
    } else {
        int w = 0, h = 0;
        if (std::sscanf(box.c_str(), "%dx%d", &w, &h) != 2 || w < 1 || h < 1)
            return fail_usage("search: --box must look like WxH, e.g. 3x5");
        result = search_fill_box(n, w, h, limits);
    }
    switch (result.status) {
        case SearchStatus::found: std::cout << "outcome: found\n"; break;
        case SearchStatus::exhausted: std::cout << "outcome: exhausted\n"; break;
        case SearchStatus::budget_hit: std::cout << "outcome: budget_hit\n"; break;
    }
    std::cout << "nodes: " << result.nodes << "\n";
    if (result.diagram) std::cout << serialize_pvn(*result.diagram);
    return result.status == SearchStatus::found ? kExitOk : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Venn diagrams whose curves are polyomino perimeters"};
    app.require_subcommand(1);

    int gen_n = 0;
    std::string gen_method, gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a diagram and emit PVN text");
    gen->add_option("--n", gen_n, "curve count")->required();
    gen->add_option("--method", gen_method, "construction")
        ->required()
        ->check(CLI::IsMember({"naive", "scd-aigner", "scd-christmas"}));
    gen->add_option("--out", gen_out, "output file (default stdout)");

    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "Check a PVN file for Venn validity");
    validate->add_option("file", validate_file, "PVN file")
        ->required()
        ->check(CLI::ExistingFile);

    std::string render_file, render_format, render_out;
    auto* render = app.add_subcommand("render", "Render a PVN file");
    render->add_option("file", render_file, "PVN file")->required()->check(CLI::ExistingFile);
    render->add_option("--format", render_format, "output format")
        ->required()
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", render_out, "output file (default stdout)");

    int scd_n = 0;
    std::string scd_method;
    auto* scd = app.add_subcommand("scd", "Print a symmetric chain decomposition");
    scd->add_option("--n", scd_n, "ground set size")->required()->check(CLI::Range(1, 20));
    scd->add_option("--method", scd_method, "construction")
        ->required()
        ->check(CLI::IsMember({"aigner", "christmas"}));

    int count_k = 0;
    std::string count_class;
    bool count_oracle = false;
    auto* count = app.add_subcommand("count", "Count polyominoes");
    count->add_option("--polyominoes", count_k, "cell count k")->required();
    count->add_option("--class", count_class, "polyomino class")
        ->required()
        ->check(CLI::IsMember({"fixed", "free", "column-convex"}));
    count->add_flag("--oracle", count_oracle, "brute-force cross-check for column-convex");

    int search_n = 0;
    std::string search_target, search_box;
    std::uint64_t search_nodes = 0;
    double search_seconds = 0.0;
    auto* search = app.add_subcommand("search", "Exhaustive search for optimal diagrams");
    search->add_option("--n", search_n, "curve count")->required();
    search->add_option("--target", search_target, "what to search for")
        ->required()
        ->check(CLI::IsMember({"min-area", "fill-box"}));
    search->add_option("--box", search_box, "box size WxH for fill-box");
    search->add_option("--nodes", search_nodes, "node budget (0 = unlimited)");
    search->add_option("--seconds", search_seconds, "time budget (0 = unlimited)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_n, gen_method, gen_out);
        if (validate->parsed()) return run_validate(validate_file);
        if (render->parsed()) return run_render(render_file, render_format, render_out);
        if (scd->parsed()) return run_scd(scd_n, scd_method);
        if (count->parsed()) return run_count(count_k, count_class, count_oracle);
        if (search->parsed())
            return run_search(search_n, search_target, search_box, search_nodes,
                              search_seconds);
    } catch (const polyvenn::PvnParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
    } catch (const std::out_of_range& e) {
        return fail_usage(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
