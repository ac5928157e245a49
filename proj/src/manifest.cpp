#include "ips/manifest.hpp"

#include "ips/common.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace ips {

std::string to_json(const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["command_line"] = manifest.command_line;
    j["seed"] = manifest.seed;
    j["dataset_hash"] = manifest.dataset_hash;
    j["version"] = manifest.version;
    j["started_utc"] = manifest.started_utc;
    j["finished_utc"] = manifest.finished_utc;
    nlohmann::ordered_json phases = nlohmann::ordered_json::object();
    for (const auto& [name, seconds] : manifest.phase_seconds) {
        phases[name] = seconds;
    }
    j["phase_seconds"] = std::move(phases);
    j["outputs"] = manifest.outputs;
    return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::data, "cannot write manifest: " + path);
    }
    out << to_json(manifest);
}

std::string utc_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string file_hash_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::data, "cannot open input file: " + path);
    }
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        h = fnv1a(buf, static_cast<std::size_t>(in.gcount()), h);
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

} // namespace ips
