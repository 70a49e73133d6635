#pragma once

#include <string>
#include <vector>

namespace hc {

std::string sha256_hex(const std::string& bytes);

// Reproducibility record emitted by every CLI command: identical invocations
// must produce identical output digests.
struct RunManifest {
    std::vector<std::string> argv;
    std::vector<std::pair<std::string, std::string>> config;   // key, value
    std::vector<std::pair<std::string, std::string>> inputs;   // name, sha256
    std::vector<std::pair<std::string, std::string>> outputs;  // name, sha256
    double elapsed_seconds = 0;
    int workers = 1;

    std::string to_json() const;
};

}  // namespace hc
