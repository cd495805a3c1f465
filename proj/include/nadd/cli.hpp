#pragma once

// Command-line front end.  Every command is a thin shell over library calls:
// it parses its inputs, calls the library, and renders a report as JSON,
// CSV or bare text.
//
// Exit codes: 0 success, 1 other library error, 2 parse error,
// 3 validation error, 4 hypothesis violated.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nadd/catalog.hpp"
#include "nadd/integrals.hpp"
#include "nadd/io.hpp"
#include "nadd/prenorms.hpp"
#include "nadd/properties.hpp"
#include "nadd/sequences.hpp"

namespace nadd::cli {

enum ExitCode : int { kOk = 0, kOtherError = 1, kParseError = 2, kValidationError = 3, kHypothesisViolated = 4 };

/// A rendered command result: the JSON report plus a CSV table and a one-line text form.
struct Report {
    Json json;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::string text;
};

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& out, const Report& r) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
        out << "\n";
    };
    line(r.csv_header);
    for (const auto& row : r.csv_rows) line(row);
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

/// "k_max=8,l=2" → {k_max: 8, l: 2}
inline std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(start, comma - start);
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("malformed parameter '" + item + "', expected key=value");
        out[item.substr(0, eq)] = item.substr(eq + 1);
        start = comma + 1;
    }
    return out;
}

inline std::uint64_t param_uint(const std::map<std::string, std::string>& p, const std::string& key,
                                std::uint64_t fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    Rational v = parse_rational(it->second);
    if (v < 0 || mp::denominator(v) != 1) throw ValidationError("parameter " + key + " must be a nonnegative integer");
    return mp::numerator(v).convert_to<std::uint64_t>();
}

inline Rational param_rational(const std::map<std::string, std::string>& p, const std::string& key,
                               const Rational& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : parse_rational(it->second);
}

inline std::optional<Rational> parse_exponent(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::nullopt;
    return parse_rational(s);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands (library calls only)

inline Report cmd_integrate(const Capacity& mu, const std::string& function, const std::string& integral) {
    Function f = Function::parse(function);
    Value v;
    if (integral == "choquet")
        v = choquet(mu, f);
    else if (integral == "shilkret")
        v = shilkret(mu, f);
    else
        throw ParseError("unknown integral '" + integral + "'");
    Report r;
    r.json = Json{{"command", "integrate"},
                  {"inputs", {{"measure", capacity_to_json(mu)}, {"function", f.to_string()}, {"integral", integral}}},
                  {"outputs", value_to_json(v)}};
    r.csv_header = {"integral", "value", "exact"};
    r.csv_rows = {{integral, v.to_string(), detail::flag(v.is_exact())}};
    r.text = v.to_string();
    return r;
}

inline Report cmd_prenorm(const Capacity& mu, const std::string& function, const std::string& space,
                          const std::string& p_text, const std::string& q_text, const std::string& phi_name) {
    Function f = Function::parse(function);
    Value v;
    Json inputs{{"measure", capacity_to_json(mu)}, {"function", f.to_string()}, {"space", space}};
    if (space == "l0") {
        PhiFunction phi = phi_name == "arctan"   ? PhiFunction::arctan()
                          : phi_name == "rational" ? PhiFunction::rational()
                                                   : throw ParseError("unknown phi '" + phi_name + "'");
        v = l0_prenorm(mu, f, phi);
        inputs["phi"] = phi.name();
    } else if (space == "pq") {
        LorentzParams params(parse_rational(p_text), detail::parse_exponent(q_text));
        v = lorentz_pq_prenorm(mu, f, params);
        inputs["p"] = p_text;
        inputs["q"] = q_text;
    } else if (space == "weak") {
        v = lorentz_weak_prenorm(mu, f, parse_rational(p_text));
        inputs["p"] = p_text;
    } else if (space == "inf") {
        v = ess_sup_prenorm(mu, f);
    } else {
        throw ParseError("unknown space '" + space + "'");
    }
    Json out = value_to_json(v);
    if (!v.is_exact()) out["tolerance"] = kFloatTolerance;
    Report r;
    r.json = Json{{"command", "prenorm"}, {"inputs", std::move(inputs)}, {"outputs", std::move(out)}};
    r.csv_header = {"space", "value", "exact"};
    r.csv_rows = {{space, v.to_string(), detail::flag(v.is_exact())}};
    r.text = v.to_string();
    return r;
}

inline std::vector<PropertyQuery> parse_property_list(const std::string& list) {
    std::vector<PropertyQuery> out;
    if (list == "all") {
        for (PropertyId id : kAllProperties) out.emplace_back(id);
        return out;
    }
    std::size_t start = 0;
    while (start <= list.size()) {
        // Commas inside a parameter, e.g. RELAXED_SUBADDITIVE(3/2), never occur: rationals use '/'.
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos) comma = list.size();
        std::string item = list.substr(start, comma - start);
        std::string upper = item;
        for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (upper == "RELAXED") upper = "RELAXED_SUBADDITIVE";
        out.push_back(parse_property(upper));
        start = comma + 1;
    }
    return out;
}

inline Report cmd_check(const Capacity& mu, const std::string& properties) {
    auto queries = parse_property_list(properties);
    Value k_star = minimal_relaxed_constant(mu);
    Json certs = Json::array();
    Report r;
    r.csv_header = {"property", "verdict", "witness", "detail"};
    bool all_hold = true;
    for (const auto& q : queries) {
        auto c = check(mu, q);
        all_hold = all_hold && c.holds();
        certs.push_back(certificate_to_json(c));
        std::string w;
        for (Mask m : c.witness) w += (w.empty() ? "" : " ") + format_subset(m);
        r.csv_rows.push_back({c.property.to_string(), c.holds() ? "HOLDS" : "FAILS", w, c.detail});
        r.text += c.property.to_string() + ": " + (c.holds() ? "HOLDS" : "FAILS") + (w.empty() ? "" : " " + w) + "\n";
    }
    r.text += "K* = " + k_star.to_string();
    r.json = Json{{"command", "check"},
                  {"inputs", {{"measure", capacity_to_json(mu)}, {"properties", properties}}},
                  {"outputs", {{"certificates", std::move(certs)}, {"minimal_relaxed_constant", value_to_json(k_star)}}}};
    return r;
}

inline Report cmd_scan(int n, std::size_t samples, std::uint64_t seed, const std::vector<Claim>& claims,
                       std::size_t keep) {
    ScanReport s = implication_scan(n, samples, seed, claims, keep);
    Report r;
    r.json = scan_report_to_json(s);
    r.csv_header = {"premise", "conclusion", "premise_count", "violations", "converse_counterexamples"};
    for (const auto& c : s.claims)
        r.csv_rows.push_back({c.claim.premise_text(), c.claim.conclusion.to_string(), std::to_string(c.premise_count),
                              std::to_string(c.violation_count), std::to_string(c.converse_count)});
    r.text = "violations: " + std::to_string(s.total_violations()) +
             ", stored converse counterexamples: " + std::to_string(s.total_converse_counterexamples());
    return r;
}

inline Report cmd_reproduce(const std::string& fixture, const std::map<std::string, std::string>& params) {
    using detail::param_rational;
    using detail::param_uint;
    Report r;
    Json rows = Json::array();
    Json summary = Json::object();
    auto add = [&](std::vector<std::pair<std::string, std::string>> cells) {
        Json row = Json::object();
        std::vector<std::string> csv;
        if (r.csv_header.empty())
            for (const auto& [k, v] : cells) r.csv_header.push_back(k);
        for (const auto& [k, v] : cells) {
            row[k] = v;
            csv.push_back(v);
        }
        rows.push_back(std::move(row));
        r.csv_rows.push_back(std::move(csv));
    };
    const auto c1 = CountableFamily::counter1();

    if (fixture == "counter1-propC") {
        for (const auto& row : property_c_witness(param_uint(params, "k_max", 8), param_uint(params, "l_max", 8)))
            add({{"k", std::to_string(row.k)},
                 {"finite_union_sup", row.finite_union_sup.to_string()},
                 {"tail_union", row.tail_union.to_string()},
                 {"largest_finite_union", row.finite_unions.back().to_string()}});
        summary = {{"sup_limit", "0"}, {"tail_limit", "1"}};
    } else if (fixture == "counter1-cauchy") {
        std::uint64_t l = param_uint(params, "l", 2);
        Rational eps = param_rational(params, "eps", Rational(1, 2));
        for (std::uint64_t n = 1; n <= param_uint(params, "n_max", 8); ++n) {
            auto w = cauchy_not_convergent_witness(n, l, eps);
            add({{"n", std::to_string(n)},
                 {"cauchy_term", w.cauchy_term.to_string()},
                 {"nonconvergence", w.nonconvergence.to_string()}});
        }
        IndicatorSequence seq{IndicatorShape::PREFIX};
        auto cauchy = cauchy_in_measure(c1, seq, param_rational(params, "delta", Rational(1, 100)));
        auto conv = converges_in_measure(c1, seq, NatSet::all());
        summary = {{"cauchy", verdict_name(cauchy.verdict)},
                   {"n0", cauchy.n0 ? Json(*cauchy.n0) : Json(nullptr)},
                   {"converges_to_1", verdict_name(conv.verdict)},
                   {"nonconvergence_limit", conv.limit.to_string()}};
    } else if (fixture == "counter1-au") {
        IndicatorSequence seq{IndicatorShape::COSINGLETON};
        std::size_t horizon = param_uint(params, "horizon", 16);
        auto conv = converges_in_measure(c1, seq, NatSet::all(), {Rational(1, 2)}, horizon);
        auto au = converges_au(c1, seq, NatSet::all(), horizon);
        for (std::size_t n = 1; n <= horizon; ++n)
            add({{"n", std::to_string(n)},
                 {"in_measure_term", conv.table.rows[n - 1][0].to_string()},
                 {"tail_union", au.tail_unions[n - 1].to_string()}});
        summary = {{"in_measure", verdict_name(conv.verdict)},
                   {"almost_everywhere_exceptional_measure", au.exceptional_measure.to_string()},
                   {"almost_uniform", verdict_name(au.verdict)},
                   {"tail_union_limit", au.tail_union_limit.to_string()}};
    } else if (fixture == "weakL1-density") {
        std::vector<Rational> r0s;
        if (auto it = params.find("r0"); it != params.end())
            r0s = {parse_rational(it->second)};
        else
            r0s = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
        for (const auto& r0 : r0s) {
            auto w = weak_l1_nondensity_witness(r0);
            add({{"r0", format_rational(r0)}, {"value", w.value.to_string()}, {"attained", detail::flag(w.attained)}});
        }
        if (r0s.size() == 1) r.text = weak_l1_nondensity_witness(r0s.front()).value.to_string();
    } else if (fixture == "counter2") {
        Rational scale = param_rational(params, "scale", Rational(1));
        auto fam = CountableFamily::counter2(scale);
        for (std::uint64_t n = 1; n <= param_uint(params, "n_max", 8); ++n)
            add({{"n", std::to_string(n)}, {"chain_value", eval_family(fam, NatSet::range(1, n)).to_string()}});
        auto ss = star_star_refutation(param_rational(params, "delta", Rational(1, 2)));
        summary = {{"limit_set_value", eval_family(fam, NatSet::all()).to_string()},
                   {"chain_limit", shape_limit(fam, SetShape::FIRST).to_string()},
                   {"star_star_delta0", format_rational(ss.delta0)},
                   {"star_star_sup_piece", ss.sup_piece.to_string()},
                   {"star_star_union", ss.union_value.to_string()}};
    } else if (fixture == "counter3") {
        auto fam = CountableFamily::counter3();
        std::uint64_t n_max = param_uint(params, "n_max", 8);
        std::vector<std::pair<std::string, std::vector<NatSet>>> cases;
        std::vector<NatSet> singletons;
        for (std::uint64_t i = 1; i <= n_max; ++i) singletons.push_back(NatSet::finite({i}));
        singletons.push_back(NatSet::tail(n_max + 1));
        cases.emplace_back("singletons then tail", singletons);
        cases.emplace_back("odds, evens", std::vector<NatSet>{NatSet::progression(1, 2), NatSet::progression(2, 2)});
        cases.emplace_back("whole space", std::vector<NatSet>{NatSet::all()});
        cases.emplace_back("finite prefix", std::vector<NatSet>{NatSet::range(1, n_max)});
        for (const auto& [name, sets] : cases) {
            NatSet u;
            Value sup(0);
            for (const auto& s : sets) {
                u = u | s;
                sup = max(sup, eval_family(fam, s));
            }
            add({{"sequence", name},
                 {"union_value", eval_family(fam, u).to_string()},
                 {"sup_value", sup.to_string()},
                 {"bound", (Value(2) * sup).to_string()},
                 {"holds", detail::flag(counter3_union_bound(sets))}});
        }
        summary = {{"bound_factor", "2"}};
    } else {
        throw ParseError("unknown fixture '" + fixture + "'");
    }
    Json p = Json::object();
    for (const auto& [k, v] : params) p[k] = v;
    r.json = Json{{"command", "reproduce"},
                  {"inputs", {{"fixture", fixture}, {"params", std::move(p)}}},
                  {"outputs", {{"rows", std::move(rows)}, {"summary", std::move(summary)}}}};
    if (r.text.empty()) r.text = r.json["outputs"].dump();
    return r;
}

inline Report cmd_catalog() {
    Report r;
    r.csv_header = {"family", "property", "verdict", "witness"};
    Json families = Json::array();
    for (const auto& fam : {CountableFamily::counter1(), CountableFamily::counter2(), CountableFamily::counter3(),
                            CountableFamily::weak_l1(), CountableFamily::counter2_lebesgue()}) {
        Json entries = Json::array();
        for (const auto& e : family_metadata(fam).entries) {
            std::string verdict = e.verdict == Verdict::HOLDS ? "HOLDS" : "FAILS";
            entries.push_back(Json{{"property", property_name(e.property)}, {"verdict", verdict}, {"witness", e.witness}});
            r.csv_rows.push_back({family_name(fam.id), std::string(property_name(e.property)), verdict, e.witness});
        }
        families.push_back(Json{{"family", family_name(fam.id)}, {"properties", std::move(entries)}});
    }
    r.json = Json{{"command", "catalog"}, {"outputs", std::move(families)}};
    r.text = r.json["outputs"].dump();
    return r;
}

// ---------------------------------------------------------------------------

/// Parses argv, runs one command and writes its report to `out`.  Errors go to
/// `err` and select the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonadditive measure toolkit: integrals, prenorms, property checks and catalog witnesses", "nadd"};
    app.require_subcommand(1);
    std::string format = "json";
    bool timing = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--timing", timing, "Include wall-clock time in the JSON report");

    std::string measure_file, function, integral = "choquet", space = "pq", p = "1", q = "1", phi = "rational";
    auto* integrate = app.add_subcommand("integrate", "Choquet or Shilkret integral of a function");
    integrate->add_option("--measure", measure_file, "Capacity JSON file")->required();
    integrate->add_option("--function", function, "Comma-separated values, e.g. 2,1")->required();
    integrate->add_option("--integral", integral)->check(CLI::IsMember({"choquet", "shilkret"}));

    auto* prenorm = app.add_subcommand("prenorm", "Evaluate one of the four prenorms");
    prenorm->add_option("--measure", measure_file)->required();
    prenorm->add_option("--function", function)->required();
    prenorm->add_option("--space", space)->check(CLI::IsMember({"l0", "pq", "weak", "inf"}));
    prenorm->add_option("--p", p);
    prenorm->add_option("--q", q, "Rational or inf");
    prenorm->add_option("--phi", phi)->check(CLI::IsMember({"rational", "arctan"}));

    std::string properties = "all";
    auto* checkcmd = app.add_subcommand("check", "Decide measure characteristics with certificates");
    checkcmd->add_option("--measure", measure_file)->required();
    checkcmd->add_option("--properties", properties, "Comma-separated names or 'all'");

    int n = 3;
    std::size_t samples = 10000, keep = 3;
    std::uint64_t seed = 42;
    std::string claims_file;
    auto* scan = app.add_subcommand("scan", "Random implication scan over capacity tables");
    scan->add_option("--n", n);
    scan->add_option("--samples", samples);
    scan->add_option("--seed", seed);
    scan->add_option("--claims-file", claims_file, "JSON list of {premise, conclusion}; default: built-in claims");
    scan->add_option("--keep", keep, "Stored counterexamples per claim");

    std::string fixture, params;
    auto* reproduce = app.add_subcommand("reproduce", "Tabulate a catalog counterexample");
    reproduce->add_option("--fixture", fixture)
        ->required()
        ->check(CLI::IsMember(
            {"counter1-propC", "counter1-cauchy", "counter1-au", "weakL1-density", "counter2", "counter3"}));
    reproduce->add_option("--params", params, "key=value,...");

    auto* catalog = app.add_subcommand("catalog", "List catalog families with their stated verdicts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        Report r;
        if (integrate->parsed()) {
            r = cmd_integrate(load_capacity(measure_file), function, integral);
        } else if (prenorm->parsed()) {
            r = cmd_prenorm(load_capacity(measure_file), function, space, p, q, phi);
        } else if (checkcmd->parsed()) {
            r = cmd_check(load_capacity(measure_file), properties);
        } else if (scan->parsed()) {
            std::vector<Claim> claims = default_claims();
            if (!claims_file.empty()) {
                std::ifstream in(claims_file);
                if (!in) throw ParseError("cannot read claims file '" + claims_file + "'");
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const nlohmann::json::parse_error& e) {
                    throw ParseError(std::string("invalid JSON: ") + e.what());
                }
                claims = claims_from_json(j);
            }
            r = cmd_scan(n, samples, seed, claims, keep);
        } else if (reproduce->parsed()) {
            r = cmd_reproduce(fixture, detail::parse_params(params));
        } else if (catalog->parsed()) {
            r = cmd_catalog();
        }
        if (timing) {
            auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            r.json["timing_seconds"] = elapsed;
        }
        if (format == "csv")
            detail::write_csv(out, r);
        else if (format == "text")
            out << r.text << "\n";
        else
            out << r.json.dump(2) << "\n";
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidationError;
    } catch (const HypothesisViolated& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kHypothesisViolated;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kOtherError;
    } catch (const std::domain_error& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidationError;
    }
}

}  // namespace nadd::cli
