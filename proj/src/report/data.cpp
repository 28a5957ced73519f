#include "exc7/report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

#ifndef EXC7_DEFAULT_DATA_DIR
#define EXC7_DEFAULT_DATA_DIR "data"
#endif

namespace exc7::report {

std::string default_data_dir() { return EXC7_DEFAULT_DATA_DIR; }

const std::vector<std::string>& data_file_names() {
    static const std::vector<std::string> names{"local_points.txt", "relations_f5.txt", "omega_f5.txt", "algebraic_points.txt",
                                                "divisors.txt"};
    return names;
}

std::string sha256_hex(const std::string& bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::string sha256_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("missing data file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return sha256_hex(ss.str());
}

std::vector<DataFile> checksum_data(const std::string& dir) {
    std::vector<DataFile> out;
    for (const auto& n : data_file_names()) {
        std::string p = dir + "/" + n;
        out.push_back({n, p, sha256_file(p)});
    }
    return out;
}

std::string data_path(const RunConfig& c, const std::string& name) {
    return (c.data_dir.empty() ? default_data_dir() : c.data_dir) + "/" + name;
}

}  // namespace exc7::report
