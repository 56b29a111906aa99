#include "singedge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace singedge {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string csv_cell(const Json& leaf) {
    if (leaf.is_string()) return csv_escape(leaf.get<std::string>());
    return leaf.dump();
}

void csv_flatten(const Json& node, const std::string& prefix, std::string& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            csv_flatten(it.value(), prefix + "." + it.key(), out);
        return;
    }
    if (node.is_array()) {
        const bool tabular =
            !node.empty() && std::all_of(node.begin(), node.end(),
                                         [](const Json& e) { return e.is_object(); });
        if (tabular) {
            // One row per element, preceded by a header row of column paths.
            std::string header;
            for (auto it = node.front().begin(); it != node.front().end(); ++it) {
                if (!header.empty()) header += ",";
                header += prefix + "." + it.key();
            }
            out += header + "\n";
            for (const Json& row : node) {
                std::string line;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    if (!line.empty()) line += ",";
                    line += csv_cell(it.value());
                }
                out += line + "\n";
            }
            return;
        }
        std::string line = prefix;
        for (const Json& e : node) line += "," + csv_cell(e);
        out += line + "\n";
        return;
    }
    out += prefix + "," + csv_cell(node) + "\n";
}

}  // namespace

Json json_number(double v) {
    if (!std::isfinite(v)) return Json();
    const std::string s = format_double(v);
    if (s.find_first_of(".eE") == std::string::npos)
        return Json(std::strtoll(s.c_str(), nullptr, 10));
    return Json(std::strtod(s.c_str(), nullptr));
}

Json json_scalar(const Scalar& s) {
    if (s.exact() && s.rat().is_integer()) return Json(s.rat().num());
    return json_number(s.value());
}

Json input_value(const Scalar& s) {
    if (s.exact()) return Json(s.rat().str());
    return json_number(s.value());
}

Json Report::to_json() const {
    Json j;
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["warnings"] = warnings;
    j["status"] = status;
    if (!message.empty()) j["message"] = message;
    return j;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

std::string Report::csv_text() const {
    std::string out;
    out += "tool_version," + csv_escape(tool_version) + "\n";
    out += "command," + csv_escape(command) + "\n";
    out += "status," + csv_escape(status) + "\n";
    if (!message.empty()) out += "message," + csv_escape(message) + "\n";
    csv_flatten(inputs, "inputs", out);
    for (std::size_t i = 0; i < warnings.size(); ++i)
        out += "warnings." + std::to_string(i) + "," + csv_escape(warnings[i]) + "\n";
    csv_flatten(results, "results", out);
    return out;
}

}  // namespace singedge
