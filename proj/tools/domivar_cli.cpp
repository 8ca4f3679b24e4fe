#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "domivar/report.hpp"

namespace {

using domivar::ordered_json;

// Exit codes: 0 success, 1 validation failure, 2 solver assumption failure,
// 3 internal error.
constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kAssumptionError = 2;
constexpr int kInternalError = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

domivar::Vec parse_point(const std::string& text) {
    domivar::Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    if (v.empty()) throw std::invalid_argument("--point expects comma-separated coordinates");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domivar: vector optimization under variable domination structures"};
    app.require_subcommand(1);

    std::string instance_path, out_path, variant = "efficient", kind = "ex-ante";
    std::string point_text, format = "json", report_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("instance", instance_path, "instance JSON file")->required();
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "axiom and assumption reports");
    add_common(validate);
    CLI::App* classify = app.add_subcommand("classify", "solution classification rows");
    add_common(classify);
    CLI::App* solve = app.add_subcommand("solve", "run the Picard solver");
    add_common(solve);
    solve->add_option("--variant", variant, "efficient | nondominated")
        ->check(CLI::IsMember({"efficient", "nondominated"}));
    CLI::App* trap = app.add_subcommand("find-trap", "find and certify a variational trap");
    add_common(trap);
    trap->add_option("--kind", kind, "ex-ante | ex-post")
        ->check(CLI::IsMember({"ex-ante", "ex-post"}));
    CLI::App* scalarize = app.add_subcommand("scalarize", "Gerstewitz value with oracle cross-check");
    add_common(scalarize);
    scalarize->add_option("--point", point_text, "payoff point, comma separated")->required();
    CLI::App* report = app.add_subcommand("report", "convert a prior report");
    report->add_option("report", report_path, "prior report JSON file")->required();
    report->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", out_path, "write the converted report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help/usage
        return rc == 0 ? kOk : kInternalError;
    }

    try {
        if (report->parsed()) {
            std::ifstream in(report_path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open report file: " + report_path);
            ordered_json prior = ordered_json::parse(in);
            if (format == "csv") emit(domivar::report_to_csv(prior), out_path);
            else emit(domivar::dump_report(prior), out_path);
            return kOk;
        }

        domivar::LoadedInstance loaded = domivar::load_instance_file(instance_path);
        if (validate->parsed()) {
            emit(domivar::dump_report(domivar::validate_report(loaded)), out_path);
        } else if (classify->parsed()) {
            emit(domivar::dump_report(domivar::classify_report(loaded)), out_path);
        } else if (solve->parsed()) {
            domivar::SolverConfig config;
            config.max_iter = loaded.instance.tol.max_iter;
            domivar::Variant v = variant == "efficient" ? domivar::Variant::EfficientFixedTheta
                                                        : domivar::Variant::NondominatedVariable;
            domivar::SolverResult res = domivar::solve(loaded.instance, v, config);
            emit(domivar::dump_report(domivar::solve_report(loaded, res)), out_path);
        } else if (trap->parsed()) {
            domivar::TrapKind tk =
                kind == "ex-ante" ? domivar::TrapKind::ExAnte : domivar::TrapKind::ExPost;
            domivar::TrapCertificate cert = domivar::find_trap(loaded.instance, tk);
            emit(domivar::dump_report(domivar::trap_report(loaded, cert)), out_path);
        } else if (scalarize->parsed()) {
            emit(domivar::dump_report(domivar::scalarize_report(loaded, parse_point(point_text))),
                 out_path);
        }
        return kOk;
    } catch (const domivar::InstanceError& e) {
        std::cerr << e.what() << "\n";
        return kValidationError;
    } catch (const domivar::SolverAssumptionError& e) {
        std::cerr << "solver assumption failure: " << e.what() << "\n";
        return kAssumptionError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternalError;
    }
}
