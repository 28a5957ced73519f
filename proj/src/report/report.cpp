#include "exc7/report.hpp"

#include "exc7/finite_field.hpp"

#include <gmp.h>
#include <openssl/crypto.h>

#include <algorithm>
#include <filesystem>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace exc7::report {

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "";
}

const std::vector<std::string>& suite_names() {
    // dependency order for "all"
    static const std::vector<std::string> n{"families", "local", "count", "descent", "chabauty"};
    return n;
}

void validate(const RunConfig& c) {
    if (c.suite != "all" && std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + c.suite + "'");
    if (c.precision < 20) throw std::invalid_argument("precision must be at least 20 pi-digits");
    if (c.height_bound < 2) throw std::invalid_argument("height bound must be at least 2");
    if (c.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (c.format != "json" && c.format != "markdown") throw std::invalid_argument("format must be json or markdown");
}

std::vector<std::string> suites_for(const std::string& selector) {
    if (selector == "all") return suite_names();
    return {selector};
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.status == s; }));
}

VerificationReport run_suite(const RunConfig& c) {
    validate(c);
    VerificationReport r;
    r.config = c;
    auto names = suites_for(c.suite);
    std::vector<std::vector<CheckRecord>> parts(names.size());
    if (c.jobs > 1 && names.size() > 1) {
        std::vector<std::future<std::vector<CheckRecord>>> fut;
        for (const auto& n : names) fut.push_back(std::async(std::launch::async, [n, &c] { return run_one(n, c); }));
        for (std::size_t i = 0; i < fut.size(); ++i) parts[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) parts[i] = run_one(names[i], c);
    }
    for (auto& p : parts) r.checks.insert(r.checks.end(), p.begin(), p.end());

    auto& env = r.environment;
    env.emplace_back("compiler", __VERSION__);
    env.emplace_back("gmp", gmp_version);
    env.emplace_back("openssl", OpenSSL_version(OPENSSL_VERSION));
    env.emplace_back("suite", c.suite);
    env.emplace_back("precision", std::to_string(c.precision));
    env.emplace_back("height_bound", std::to_string(c.height_bound));
    env.emplace_back("mod49", c.mod49 ? "exhaustive" : "residues mod 7 only");
    std::string dir = c.data_dir.empty() ? default_data_dir() : c.data_dir;
    for (const auto& n : data_file_names()) {
        std::string p = dir + "/" + n;
        env.emplace_back("sha256:" + n, std::filesystem::exists(p) ? sha256_file(p) : "missing");
    }
    for (const auto& [pk, coeffs] : FiniteField::registry_snapshot()) {
        std::string s;
        for (auto x : coeffs) s += (s.empty() ? "" : " ") + std::to_string(x);
        env.emplace_back("modulus:F_" + std::to_string(pk.first) + "^" + std::to_string(pk.second), s);
    }
    env.emplace_back("assumptions",
                     "J(C) is isogenous to Jac(D)^2, so counts over F_13^k for k <= 6 fix |J(F_13)|; "
                     "dim J(k)[pi] = 4 and dim J(k_pi)/pi J(k_pi) = 16 are taken as inputs; "
                     "the mod 5 relation matrix is taken as data, so the Chabauty conclusion holds modulo it");
    return r;
}

std::string emit_json(const VerificationReport& r, bool with_timing) {
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json summary;
    summary["suite"] = r.config.suite;
    summary["total"] = r.checks.size();
    summary["passed"] = r.count(Status::Pass);
    summary["failed"] = r.count(Status::Fail);
    summary["inconclusive"] = r.count(Status::Inconclusive);
    summary["ok"] = r.ok();
    if (with_timing) {
        double t = 0;
        for (const auto& c : r.checks) t += c.runtime_ms;
        summary["runtime_ms"] = t;
    }
    j["summary"] = summary;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["criterion"] = c.criterion;
        e["reference"] = c.reference;
        e["status"] = status_str(c.status);
        e["expected"] = c.expected;
        e["computed"] = c.computed;
        if (with_timing) e["runtime_ms"] = c.runtime_ms;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    ordered_json env = ordered_json::object();
    for (const auto& [k, v] : r.environment) env[k] = v;
    j["environment"] = env;
    return j.dump(2) + "\n";
}

namespace {
std::string cell(std::string s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else if (ch == '\n') out += "<br>";
        else out += ch;
    }
    return out;
}
}  // namespace

std::string emit_markdown(const VerificationReport& r) {
    std::ostringstream os;
    os << "# Verification report\n\n";
    os << "suite: " << r.config.suite << ", checks: " << r.checks.size() << ", passed: " << r.count(Status::Pass)
       << ", failed: " << r.count(Status::Fail) << ", inconclusive: " << r.count(Status::Inconclusive) << "\n";
    std::vector<std::string> order;
    for (const auto& c : r.checks)
        if (std::find(order.begin(), order.end(), c.suite) == order.end()) order.push_back(c.suite);
    for (const auto& s : order) {
        os << "\n## " << s << "\n\n| check | item | status | expected | computed | reference |\n|---|---|---|---|---|---|\n";
        for (const auto& c : r.checks) {
            if (c.suite != s) continue;
            os << "| " << cell(c.name) << " | " << (c.criterion ? std::to_string(c.criterion) : "-") << " | " << status_str(c.status)
               << " | " << cell(c.expected) << " | " << cell(c.computed) << " | " << cell(c.reference) << " |\n";
        }
    }
    os << "\n## environment\n\n";
    for (const auto& [k, v] : r.environment) os << "- " << k << ": " << v << "\n";
    return os.str();
}

std::string emit_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") return emit_json(r);
    if (format == "markdown") return emit_markdown(r);
    throw std::invalid_argument("unknown format " + format);
}

int exit_code(const VerificationReport& r) { return r.ok() ? 0 : 1; }

}  // namespace exc7::report
