#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "singedge/rational.hpp"

namespace singedge {

using Json = nlohmann::json;

// Machine-readable result of one CLI invocation. Serialization is
// deterministic: object keys are sorted, every float is rounded to 12
// significant digits before it is stored.
struct Report {
    std::string tool_version = "0.1.0";
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> warnings;
    std::string status = "ok";  // ok | uncertified | error
    std::string message;        // set only when status is error

    Json to_json() const;
    std::string json_text() const;
    std::string csv_text() const;
};

// The only path a float takes into a report. Values that round to integers
// are stored as JSON integers.
Json json_number(double v);

// Exact integers stay integral; everything else goes through json_number.
Json json_scalar(const Scalar& s);

// Echo form for parsed inputs: exact values as "p/q" strings (so the exact
// path is visible), inexact values as plain numbers.
Json input_value(const Scalar& s);

}  // namespace singedge
