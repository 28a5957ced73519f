#include "doctest.h"

#include "exc7/report.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

using namespace exc7::report;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

CheckRecord check(const std::string& name, Status s) {
    CheckRecord c;
    c.suite = "families";
    c.name = name;
    c.criterion = 2;
    c.reference = "resultant of Delta and c4";
    c.status = s;
    c.expected = "7^98";
    c.computed = s == Status::Pass ? "7^98" : "7^97";
    c.runtime_ms = 1.5;
    return c;
}

fs::path scratch_copy(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("exc7_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& n : data_file_names()) fs::copy_file(fs::path(default_data_dir()) / n, dir / n);
    return dir;
}

}  // namespace

TEST_CASE("empty report is a valid document") {
    VerificationReport r;
    auto j = json::parse(emit_json(r));
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].empty());
    CHECK(j["summary"]["total"] == 0);
    CHECK(j.contains("environment"));
    CHECK(exit_code(r) == 0);
    CHECK(emit_markdown(r).find("checks: 0") != std::string::npos);
}

TEST_CASE("single passing check") {
    VerificationReport r;
    r.checks.push_back(check("res", Status::Pass));
    auto j = json::parse(emit_json(r));
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0]["reference"] == "resultant of Delta and c4");
    CHECK(j["checks"][0]["runtime_ms"] == 1.5);
    CHECK(j["summary"]["ok"] == true);
    CHECK(exit_code(r) == 0);
    auto k = json::parse(emit_json(r, false));
    CHECK_FALSE(k["checks"][0].contains("runtime_ms"));
}

TEST_CASE("failing or inconclusive check gives nonzero exit") {
    VerificationReport r;
    r.checks.push_back(check("res", Status::Pass));
    r.checks.push_back(check("res bad", Status::Fail));
    auto j = json::parse(emit_json(r));
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(j["checks"][1]["expected"] == "7^98");
    CHECK(j["checks"][1]["computed"] == "7^97");
    CHECK(j["summary"]["failed"] == 1);
    CHECK(exit_code(r) != 0);
    auto md = emit_markdown(r);
    CHECK(md.find("| res bad | 2 | fail | 7^98 | 7^97 |") != std::string::npos);

    VerificationReport q;
    q.checks.push_back(check("maybe", Status::Inconclusive));
    CHECK(exit_code(q) != 0);
}

TEST_CASE("markdown escapes table separators") {
    VerificationReport r;
    auto c = check("a|b", Status::Pass);
    c.computed = "x\ny";
    r.checks.push_back(c);
    auto md = emit_markdown(r);
    CHECK(md.find("a\\|b") != std::string::npos);
    CHECK(md.find("x<br>y") != std::string::npos);
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(validate(c));
    c.precision = 19;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.height_bound = 1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.suite = "nope";
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.format = "xml";
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.jobs = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    CHECK(suites_for("all") == std::vector<std::string>{"families", "local", "count", "descent", "chabauty"});
    CHECK_THROWS(run_one("bogus", RunConfig{}));
}

TEST_CASE("sha256 and data checksums") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    auto files = checksum_data(default_data_dir());
    CHECK(files.size() == data_file_names().size());
    for (const auto& f : files) CHECK(f.sha256.size() == 64);
    CHECK_THROWS(checksum_data("/nonexistent/exc7"));
}

TEST_CASE("local suite is deterministic") {
    RunConfig c;
    c.suite = "local";
    auto a = run_suite(c), b = run_suite(c);
    CHECK(emit_json(a, false) == emit_json(b, false));
    CHECK(emit_markdown(a) == emit_markdown(b));
    CHECK(a.ok());
    CHECK(exit_code(a) == 0);
    auto j = json::parse(emit_json(a));
    for (const auto& e : j["checks"]) {
        CHECK(e["criterion"] == 6);
        CHECK_FALSE(e["reference"].get<std::string>().empty());
        CHECK(e["runtime_ms"].get<double>() >= 0);
    }
    CHECK(j["environment"].contains("sha256:local_points.txt"));
    CHECK(j["environment"].contains("assumptions"));
}

TEST_CASE("chabauty suite catches a tampered differential") {
    auto dir = scratch_copy("tamper");
    {
        std::ofstream f(dir / "omega_f5.txt");
        f << "3 2 0 3 2 0 0 0 1 2 0 0\n";
    }
    RunConfig c;
    c.suite = "chabauty";
    c.data_dir = dir.string();
    auto r = run_suite(c);
    CHECK(exit_code(r) != 0);
    bool conclusion_failed = false;
    for (const auto& k : r.checks)
        if (k.name == "conclusion") conclusion_failed = k.status == Status::Fail;
    CHECK(conclusion_failed);
    // the algebraic points are unaffected
    for (const auto& k : r.checks)
        if (k.criterion == 9) CHECK(k.status == Status::Pass);
    fs::remove_all(dir);
}

TEST_CASE("missing data files abort with context") {
    auto dir = scratch_copy("missing");
    fs::remove(dir / "local_points.txt");
    RunConfig c;
    c.suite = "descent";
    c.data_dir = dir.string();
    CHECK_THROWS_WITH_AS(run_suite(c), doctest::Contains("local_points.txt"), std::exception);
    fs::remove_all(dir);
}
