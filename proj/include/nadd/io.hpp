#pragma once

// JSON encoding of capacities, values and reports.
//
// Capacity format:
//   {"n": 2, "values": {"": "0", "0": "1/2", "1": "1/3", "0,1": "1"}}
// Keys are comma-separated element lists (the empty set is ""); values are
// rational strings, integers, or "inf".  Every subset must be present.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "nadd/properties.hpp"

namespace nadd {

using Json = nlohmann::ordered_json;

/// Element list "0,2" for a subset mask ("" for the empty set).
inline std::string subset_key(Mask m) {
    std::string s;
    for (int e : elements_of(m)) {
        if (!s.empty()) s += ",";
        s += std::to_string(e);
    }
    return s;
}

inline Mask parse_subset_key(std::string_view key, int n) {
    Mask m = 0;
    std::string_view s = detail::trim(key);
    if (s.empty()) return 0;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string_view::npos) comma = s.size();
        std::string_view tok = detail::trim(s.substr(start, comma - start));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
            throw ParseError("malformed subset key '" + std::string(key) + "'");
        if (tok.size() > 3) throw ValidationError("element " + std::string(tok) + " outside ground set");
        int e = std::stoi(std::string(tok));
        if (e >= n) throw ValidationError("element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
        Mask bit = Mask{1} << e;
        if (m & bit) throw ParseError("duplicate element in subset key '" + std::string(key) + "'");
        m |= bit;
        start = comma + 1;
    }
    return m;
}

/// Subsets in canonical order: by cardinality, then by mask value.
inline std::vector<Mask> canonical_subset_order(int n) {
    std::vector<Mask> order(std::size_t{1} << n);
    for (Mask a = 0; a < order.size(); ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return order;
}

inline Json capacity_to_json(const Capacity& mu) {
    if (!mu.is_exact()) throw ValidationError("only exact capacities can be serialized");
    Json values = Json::object();
    for (Mask a : canonical_subset_order(mu.n())) values[subset_key(a)] = mu(a).to_string();
    return Json{{"n", mu.n()}, {"values", std::move(values)}};
}

inline Value parse_json_value(const Json& v) {
    if (v.is_string()) return Value::parse(v.get<std::string>());
    if (v.is_number_integer()) return Value(Rational(v.get<long long>()));
    if (v.is_number_unsigned()) return Value(Rational(Integer(v.get<unsigned long long>())));
    throw ParseError("capacity values must be rational strings, integers or \"inf\"; got " + v.dump());
}

inline Capacity capacity_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("values"))
        throw ParseError("capacity JSON needs the fields \"n\" and \"values\"");
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    FiniteSpace space(j["n"].get<int>());
    const Json& values = j["values"];
    if (!values.is_object()) throw ParseError("\"values\" must be an object");
    std::map<Mask, Value> table;
    for (const auto& [key, v] : values.items()) {
        Mask m = parse_subset_key(key, space.n());
        if (table.count(m)) throw ParseError("subset " + format_subset(m) + " listed twice");
        Value val = parse_json_value(v);
        if (val.sign() < 0) throw ValidationError("capacity value for " + format_subset(m) + " is negative");
        table.emplace(m, std::move(val));
    }
    return build_capacity(space, table);
}

inline Capacity parse_capacity(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return capacity_from_json(j);
}

inline Capacity load_capacity(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read capacity file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_capacity(buf.str());
}

inline std::string emit_capacity(const Capacity& mu) { return capacity_to_json(mu).dump(); }

/// {"value": "3/2", "exact": true}; floats carry 17 significant digits.
inline Json value_to_json(const Value& v) { return Json{{"value", v.to_string()}, {"exact", v.is_exact()}}; }

inline Json certificate_to_json(const PropertyCertificate& c) {
    Json w = Json::array();
    for (Mask m : c.witness) w.push_back(subset_key(m));
    return Json{{"property", c.property.to_string()},
                {"verdict", c.holds() ? "HOLDS" : "FAILS"},
                {"witness", std::move(w)},
                {"detail", c.detail}};
}

inline Json scan_report_to_json(const ScanReport& r) {
    Json claims = Json::array();
    for (const auto& c : r.claims) {
        Json violations = Json::array();
        for (const auto& mu : c.violations) violations.push_back(capacity_to_json(mu));
        Json converse = Json::array();
        for (const auto& mu : c.converse_counterexamples) converse.push_back(capacity_to_json(mu));
        claims.push_back(Json{{"premise", c.claim.premise_text()},
                              {"conclusion", c.claim.conclusion.to_string()},
                              {"premise_count", c.premise_count},
                              {"violation_count", c.violation_count},
                              {"converse_count", c.converse_count},
                              {"violations", std::move(violations)},
                              {"converse_counterexamples", std::move(converse)}});
    }
    return Json{{"claims", std::move(claims)}, {"seed", r.seed}, {"n", r.n}, {"samples", r.samples}};
}

/// Claims file: [{"premise": "A&B", "conclusion": "C"}, ...] or {"claims": [...]}.
inline std::vector<Claim> claims_from_json(const Json& j) {
    const Json& list = j.is_object() && j.contains("claims") ? j["claims"] : j;
    if (!list.is_array()) throw ParseError("claims file must hold an array of claims");
    std::vector<Claim> out;
    for (const auto& c : list) {
        if (!c.is_object() || !c.contains("premise") || !c.contains("conclusion") || !c["premise"].is_string() ||
            !c["conclusion"].is_string())
            throw ParseError("each claim needs string fields \"premise\" and \"conclusion\"");
        out.push_back(parse_claim(c["premise"].get<std::string>(), c["conclusion"].get<std::string>()));
    }
    return out;
}

inline Json claims_to_json(const std::vector<Claim>& claims) {
    Json list = Json::array();
    for (const auto& c : claims) list.push_back(Json{{"premise", c.premise_text()}, {"conclusion", c.conclusion.to_string()}});
    return list;
}

}  // namespace nadd
