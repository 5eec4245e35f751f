// symref: symplectic reflection analysis for finite matrix groups.

#include "symref/cli_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int emit(const symref::CommandResult& result, const std::string& out_path = {}) {
    std::cerr << result.err;
    if (!out_path.empty() && result.exit_code == symref::kExitOk) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return symref::kExitInputError;
        }
        out << result.out;
    } else {
        std::cout << result.out;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic reflection analysis for finite matrix groups"};
    app.require_subcommand(1);

    std::string spec_path, fibers_path, out_path, input_path, entry_name;
    symref::AnalyzeOptions analyze_opts;
    std::size_t semismall_max_order = symref::kDefaultMaxOrder;

    auto* analyze = app.add_subcommand("analyze", "Closure, reflection census, G0 and the resolution verdict");
    analyze->add_option("spec", spec_path, "Group spec JSON")->required();
    auto* json_flag = analyze->add_flag("--json", analyze_opts.json, "JSON report");
    analyze->add_flag("--text", "Text report (default)")->excludes(json_flag);
    analyze->add_flag("--strata", analyze_opts.strata, "Include the stratification summary");
    analyze->add_option("--max-order", analyze_opts.max_order, "Closure bound")->check(CLI::PositiveNumber);

    auto* semismall = app.add_subcommand("semismall", "Check resolution fiber data against the stratification");
    semismall->add_option("spec", spec_path, "Group spec JSON")->required();
    semismall->add_option("fibers", fibers_path, "Fiber dimensions JSON")->required();
    semismall->add_option("--max-order", semismall_max_order, "Closure bound")->check(CLI::PositiveNumber);

    auto* dbl = app.add_subcommand("double", "Emit the W + W* doubling of an action on W");
    dbl->add_option("spec", spec_path, "Group spec JSON without a symplectic form")->required();
    dbl->add_option("-o,--output", out_path, "Write the doubled spec here instead of stdout");

    auto* catalog = app.add_subcommand("catalog", "Built-in group families");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List catalog entries");
    auto* emit_cmd = catalog->add_subcommand("emit", "Write the group spec JSON of a catalog entry");
    emit_cmd->add_option("name", entry_name, "Entry name")->required();
    emit_cmd->add_option("-o,--output", out_path, "Write here instead of stdout");

    auto* spectrum = app.add_subcommand("spectrum", "Symplectic eigenvalues of a 2-form");
    spectrum->add_option("input", input_path, "JSON with theta and optional metric")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : symref::kExitInputError;
    }

    auto load = [](const std::string& path, std::string& text) {
        if (read_file(path, text)) return true;
        std::cerr << "error: cannot read " << path << "\n";
        return false;
    };

    std::string text, fibers;
    if (*analyze) {
        if (!load(spec_path, text)) return symref::kExitInputError;
        return emit(symref::run_analyze(text, analyze_opts));
    }
    if (*semismall) {
        if (!load(spec_path, text) || !load(fibers_path, fibers)) return symref::kExitInputError;
        return emit(symref::run_semismall(text, fibers, semismall_max_order));
    }
    if (*dbl) {
        if (!load(spec_path, text)) return symref::kExitInputError;
        return emit(symref::run_double(text), out_path);
    }
    if (*list) return emit(symref::run_catalog_list());
    if (*emit_cmd) return emit(symref::run_catalog_emit(entry_name), out_path);
    if (*spectrum) {
        if (!load(input_path, text)) return symref::kExitInputError;
        return emit(symref::run_spectrum(text));
    }
    return symref::kExitInputError;
}
