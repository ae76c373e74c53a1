// mhcq: exact verifier for function-algebra multiplier Hopf coquasigroups
// and their skew-polynomial extensions.
//
// Exit codes: 0 all selected suites pass; 1 some law failed (or a suite was
// refused); 2 input or configuration errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <mhcq/engine.hpp>
#include <mhcq/fixtures.hpp>

namespace {

int emit(const mhcq::EngineReport& report, const std::string& format) {
    if (format == "json")
        std::cout << mhcq::render_json(report);
    else
        std::cout << mhcq::render_text(report);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact axiom checker for multiplier Hopf coquasigroups of "
                 "function-algebra type and their Ore extensions"};
    app.require_subcommand(1);

    std::string file;
    std::string suites_csv;
    std::string format = "text";
    long long radius = -1;
    int maxdeg = -1;
    bool timings = false;

    CLI::App* verify = app.add_subcommand("verify", "run suites from a JSON input file");
    verify->add_option("file", file, "input JSON document")->required();
    verify->add_option("--suites", suites_csv, "comma-separated suite list");
    verify->add_option("--radius", radius, "window grade radius (default: file, then 2)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--maxdeg", maxdeg, "monomial degree bound (default: file, then 3)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--format", format, "report format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timings", timings,
                     "include wall-clock timings in the JSON report (breaks byte determinism)");

    std::string demo_name;
    CLI::App* demo = app.add_subcommand("demo", "run a bundled fixture");
    demo->add_option("name", demo_name, "fixture name")->required();
    demo->add_option("--format", format, "report format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    demo->add_flag("--timings", timings, "include wall-clock timings in the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // configuration errors exit 2
    }

    try {
        if (verify->parsed()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open '" << file << "'\n";
                return 2;
            }
            mhcq::Json doc;
            try {
                in >> doc;
            } catch (const std::exception& e) {
                std::cerr << "error: invalid JSON: " << e.what() << "\n";
                return 2;
            }
            mhcq::Problem pr = mhcq::parse_problem(doc);
            mhcq::RunConfig rc;
            rc.input_name = file;
            rc.radius = radius >= 0 ? radius : pr.default_radius.value_or(2);
            rc.maxdeg = maxdeg >= 0 ? maxdeg : pr.default_maxdeg.value_or(3);
            rc.timings = timings;
            std::vector<std::string> requested;
            if (!suites_csv.empty()) {
                std::stringstream ss(suites_csv);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) requested.push_back(item);
            }
            rc.suites = mhcq::resolve_suites(pr, requested);
            return emit(mhcq::run_suites(pr, rc), format);
        }
        mhcq::EngineReport report = mhcq::run_demo(demo_name);
        report.config.timings = timings;
        return emit(report, format);
    } catch (const mhcq::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const mhcq::DemoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mhcq::RunError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
