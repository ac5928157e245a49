#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ips {

// Reproducibility sidecar written next to every CLI output file. Note that
// the timestamps and durations vary run to run; byte-identity guarantees
// apply to the output files themselves, not to manifests.
struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    std::string dataset_hash; // FNV-1a over the input file bytes, hex
    std::string version;
    std::string started_utc;
    std::string finished_utc;
    std::vector<std::pair<std::string, double>> phase_seconds;
    std::vector<std::string> outputs;
};

std::string to_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::string& path);

std::string utc_timestamp_now();
std::string file_hash_hex(const std::string& path);

} // namespace ips
