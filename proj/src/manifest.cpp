#include "manifest.hpp"

#include <openssl/evp.h>

#include <json.hpp>

namespace hc {

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["argv"] = argv;
    for (auto& [k, v] : config) j["config"][k] = v;
    for (auto& [name, digest] : inputs) j["inputs"][name] = digest;
    for (auto& [name, digest] : outputs) j["outputs"][name] = digest;
    j["elapsed_seconds"] = elapsed_seconds;
    j["workers"] = workers;
    return j.dump();
}

}  // namespace hc
