#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

namespace hwl {

using json = nlohmann::ordered_json;

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

/// Machine-readable run report. Everything except the "timing" subtree is a
/// deterministic function of the invocation, so reports from identical
/// invocations are byte-identical once "timing" is dropped.
inline json make_report(const std::string& command, const json& config, const json& results,
                        const json& checks, bool pass, double wall_ms) {
    json report;
    report["command"] = command;
    report["config_hash"] = hex64(fnv1a64(config.dump()));
    report["results"] = results;
    report["checks"] = checks;
    report["verdict"] = pass ? "PASS" : "FAIL";
    report["timing"] = json{{"wall_ms", wall_ms}};
    return report;
}

inline json strip_timing(json report) {
    report.erase("timing");
    return report;
}

}  // namespace hwl
