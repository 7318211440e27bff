#pragma once

// Persisted record of a verified inequality or scan: statement id, range,
// bound values as decimal strings, verdict, precision used.

#include <string>
#include <utility>
#include <vector>

#include "unimodal/util.hpp"

namespace unimodal {

enum class Verdict { Verified, Failed, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "Verified";
        case Verdict::Failed: return "Failed";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct Certificate {
    std::string statement;
    std::string range;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::string, std::string>> data;  // key -> decimal string
    long precision_bits = 0;

    void put(std::string key, std::string value) {
        data.emplace_back(std::move(key), std::move(value));
    }
    const std::string* find(const std::string& key) const {
        for (const auto& kv : data)
            if (kv.first == key) return &kv.second;
        return nullptr;
    }
};

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string certificate_json(const Certificate& c, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string in2 = pad + "  ";
    std::string out = pad + "{\n";
    out += in2 + "\"schema\": \"unimodal-certificate/1\",\n";
    out += in2 + "\"statement\": \"" + json_escape(c.statement) + "\",\n";
    out += in2 + "\"range\": \"" + json_escape(c.range) + "\",\n";
    out += in2 + "\"verdict\": \"" + verdict_name(c.verdict) + "\",\n";
    out += in2 + "\"precision_bits\": " + std::to_string(c.precision_bits) + ",\n";
    out += in2 + "\"tool_version\": \"" + std::string(kToolVersion) + "\",\n";
    out += in2 + "\"data\": {";
    bool first = true;
    for (const auto& kv : c.data) {
        if (!first) out += ",";
        first = false;
        out += "\n" + in2 + "  \"" + json_escape(kv.first) + "\": \"" + json_escape(kv.second) + "\"";
    }
    out += first ? "}\n" : "\n" + in2 + "}\n";
    out += pad + "}";
    return out;
}

}  // namespace unimodal
