#pragma once
// Verification suites and their machine-readable reports.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exc7::report {

enum class Status { Pass, Fail, Inconclusive };
std::string status_str(Status s);

struct CheckRecord {
    std::string suite, name;
    int criterion = 0;      // acceptance item this check feeds, 0 for none
    std::string reference;  // where the expected value comes from
    Status status = Status::Fail;
    std::string expected, computed;
    double runtime_ms = 0;
    std::string detail;  // filled on failure with whatever helps (matrices, offending inputs)
};

struct RunConfig {
    std::string suite = "all";  // families | local | descent | count | chabauty | all
    long precision = 120;       // pi-digits
    bool mod49 = true;          // exhaustive residue sweep for the ord_7 table
    long height_bound = 30;
    unsigned jobs = 1;
    std::string format = "json";  // json | markdown
    std::string data_dir;         // empty: the compiled-in default
};

const std::vector<std::string>& suite_names();
std::string default_data_dir();
// throws std::invalid_argument
void validate(const RunConfig& c);
std::vector<std::string> suites_for(const std::string& selector);

struct VerificationReport {
    RunConfig config;
    std::vector<CheckRecord> checks;
    std::vector<std::pair<std::string, std::string>> environment;

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0 && count(Status::Inconclusive) == 0; }
};

// ------------------------------------------------------------------ data files

struct DataFile {
    std::string name, path, sha256;
};
const std::vector<std::string>& data_file_names();
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);
// every known data file in dir, with checksums; throws if one is missing
std::vector<DataFile> checksum_data(const std::string& dir);
std::string data_path(const RunConfig& c, const std::string& name);

// ------------------------------------------------------------------ running

VerificationReport run_suite(const RunConfig& c);
// one suite only, without environment; used by run_suite
std::vector<CheckRecord> run_one(const std::string& suite, const RunConfig& c);

std::string emit_json(const VerificationReport& r, bool with_timing = true);
std::string emit_markdown(const VerificationReport& r);
std::string emit_report(const VerificationReport& r, const std::string& format);
int exit_code(const VerificationReport& r);

}  // namespace exc7::report
