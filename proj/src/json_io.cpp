#include "qtoric/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "qtoric/error.hpp"

namespace qtoric {

namespace {

using nlohmann::ordered_json;

long long require_int(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ParseError(what + " must be an exact integer");
    return j.get<long long>();
}

long long to_int64(const Integer& x, const std::string& what) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw ArgumentError(what + " does not fit a JSON integer");
    return x.convert_to<long long>();
}

}  // namespace

QuasitoricData parse_input_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("input must be a JSON object");
    for (const char* field : {"name", "m", "vertices", "facets", "lambda"})
        if (!j.contains(field))
            throw ParseError(std::string("missing field '") + field + "'");

    QuasitoricData d;
    if (!j["name"].is_string())
        throw ParseError("'name' must be a string");
    d.name = j["name"].get<std::string>();
    d.m = static_cast<int>(require_int(j["m"], "'m'"));

    if (!j["vertices"].is_array())
        throw ParseError("'vertices' must be an array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw ParseError("'vertices' entries must be strings");
        d.vertices.push_back(v.get<std::string>());
    }

    if (!j["facets"].is_array())
        throw ParseError("'facets' must be an array");
    for (const auto& f : j["facets"]) {
        if (!f.is_array())
            throw ParseError("'facets' entries must be arrays");
        std::vector<int> facet;
        for (const auto& v : f) {
            const long long idx = require_int(v, "facet vertex index");
            if (idx < 0 || idx >= d.vertex_count())
                throw ParseError("facet vertex index out of range");
            facet.push_back(static_cast<int>(idx));
        }
        d.facets.push_back(std::move(facet));
    }

    if (!j["lambda"].is_array())
        throw ParseError("'lambda' must be an array");
    if (static_cast<int>(j["lambda"].size()) != d.vertex_count())
        throw ParseError("'lambda' must list one vector per vertex");
    for (const auto& row : j["lambda"]) {
        if (!row.is_array())
            throw ParseError("'lambda' entries must be arrays");
        if (static_cast<int>(row.size()) != d.m)
            throw ParseError("ragged lambda row: expected length m");
        std::vector<Integer> lam;
        for (const auto& x : row)
            lam.emplace_back(require_int(x, "lambda entry"));
        d.lambda.push_back(std::move(lam));
    }

    if (j.contains("base_facet")) {
        const long long b = require_int(j["base_facet"], "'base_facet'");
        if (b < 0 || b >= d.facet_count())
            throw ParseError("'base_facet' index out of range");
        d.base_facet = static_cast<int>(b);
    }
    return d;
}

QuasitoricData parse_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_json(buf.str());
}

std::string serialize_input(const QuasitoricData& d) {
    ordered_json j;
    j["name"] = d.name;
    j["m"] = d.m;
    j["vertices"] = d.vertices;
    j["facets"] = d.facets;
    ordered_json lam = ordered_json::array();
    for (const auto& row : d.lambda) {
        ordered_json r = ordered_json::array();
        for (const Integer& x : row)
            r.push_back(to_int64(x, "lambda entry"));
        lam.push_back(std::move(r));
    }
    j["lambda"] = std::move(lam);
    if (d.base_facet)
        j["base_facet"] = *d.base_facet;
    return j.dump(2) + "\n";
}

void write_input_file(const QuasitoricData& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ArgumentError("cannot write file: " + path);
    out << serialize_input(d);
}

}  // namespace qtoric
