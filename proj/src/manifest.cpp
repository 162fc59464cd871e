#include "sqdisc/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace sqdisc {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[std::size_t(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

void RunManifest::record_input(const std::string& path, const std::string& bytes) {
    input_digests[path] = std::string("fnv1a64:") + hex64(fnv1a64(bytes));
}

std::string RunManifest::to_json() const {
    nlohmann::json j;  // nlohmann::json objects keep keys sorted
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    j["inputs"] = input_digests;
    return j.dump();
}

std::string RunManifest::header_line() const { return "# manifest: " + to_json() + "\n"; }

void write_with_manifest(const std::string& path, const std::string& bytes, const RunManifest& manifest) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << bytes;
        if (!out) throw std::runtime_error("failed writing '" + path + "'");
    }
    std::ofstream side(path + ".manifest.json", std::ios::binary);
    if (!side) throw std::runtime_error("cannot write manifest for '" + path + "'");
    side << manifest.to_json() << "\n";
}

}  // namespace sqdisc
