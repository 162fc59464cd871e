#pragma once

// Run manifests: every file a run writes gets a sidecar {path}.manifest.json
// recording the subcommand, parameters, seed, tool version, and digests of
// the inputs, so identical manifests imply byte-identical outputs.  Default
// textual reports additionally embed the same JSON as a '#' header line;
// compat outputs never do (their bytes are fixed externally).

#include <cstdint>
#include <map>
#include <string>

namespace sqdisc {

inline constexpr const char* kToolName = "sqdisc";
inline constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a64(const std::string& bytes);

struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;  // flag -> rendered value
    std::map<std::string, std::string> input_digests;  // path -> "fnv1a64:<hex>"

    void record_input(const std::string& path, const std::string& bytes);

    std::string to_json() const;      // single line, sorted keys
    std::string header_line() const;  // "# manifest: {...}\n"
};

// Writes bytes to path and the manifest sidecar next to it.
void write_with_manifest(const std::string& path, const std::string& bytes, const RunManifest& manifest);

}  // namespace sqdisc
