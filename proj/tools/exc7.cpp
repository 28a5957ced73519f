// exc7 <suite> [flags]: run verification suites and write a report.
#include "exc7/report.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

int main(int argc, char** argv) {
    using namespace exc7::report;
    RunConfig cfg;
    bool no_mod49 = false, no_timing = false;
    std::string output;

    CLI::App app{"Verification engine for 7-exceptional elliptic curves"};
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    app.add_option("suite", cfg.suite, "families | local | descent | count | chabauty | all")
        ->required()
        ->check(CLI::IsMember(choices));
    app.add_option("--precision", cfg.precision, "pi-adic working precision in digits")->capture_default_str();
    app.add_option("--height-bound", cfg.height_bound, "height bound for the exceptional scan")->capture_default_str();
    app.add_option("--jobs,-j", cfg.jobs, "parallel workers")->capture_default_str();
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
    app.add_option("--data-dir", cfg.data_dir, "directory holding the data files");
    app.add_option("--output,-o", output, "write the report here instead of stdout");
    app.add_flag("--no-mod49", no_mod49, "sweep residues mod 7 only in the ord_7 table");
    app.add_flag("--no-timing", no_timing, "omit runtime fields from JSON (byte-stable output)");
    CLI11_PARSE(app, argc, argv);
    cfg.mod49 = !no_mod49;

    VerificationReport r;
    try {
        r = run_suite(cfg);
    } catch (const std::exception& e) {
        std::cerr << "exc7: " << cfg.suite << ": " << e.what() << "\n";
        return 2;
    }
    std::string doc = cfg.format == "json" ? emit_json(r, !no_timing) : emit_markdown(r);
    if (output.empty()) {
        std::cout << doc;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "exc7: cannot write " << output << "\n";
            return 2;
        }
        f << doc;
    }
    std::cerr << r.count(Status::Pass) << "/" << r.checks.size() << " checks passed\n";
    return exit_code(r);
}
