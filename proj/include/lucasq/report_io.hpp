// Serialization of verification reports and solution sets.
//
// Two formats, carrying identical information:
//   text        one human-readable line per record, e.g.
//               "EQ3 [0,100000] PASS 0 counterexamples"
//   json-lines  one self-describing JSON object per line with stable field
//               names; arbitrary-precision values are decimal strings.
//
// The json_record/..._from_json pairs round-trip exactly.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include <lucasq/solve.hpp>
#include <lucasq/verify.hpp>

namespace lucasq {

enum class OutputFormat { text, json_lines };

inline std::optional<OutputFormat> format_from_string(std::string_view s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json-lines") return OutputFormat::json_lines;
    return std::nullopt;
}

namespace detail {

inline std::string tuple_text(const IndexTuple& t) {
    if (t.size() == 1) return std::to_string(t[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(t[i]);
    }
    s += ')';
    return s;
}

}  // namespace detail

// --- Verification reports ---------------------------------------------------

inline std::string to_text(const VerificationReport& r) {
    std::string s{to_string(r.claim_id)};
    s += " [" + std::to_string(r.range_lo) + "," + std::to_string(r.range_hi) + "] ";
    s += r.status == Status::pass ? "PASS" : "FAIL";
    s += ' ' + std::to_string(r.counterexample_count) + " counterexamples";
    if (!r.counterexamples.empty()) {
        if (r.counterexample_count > r.counterexamples.size())
            s += " (" + std::to_string(r.counterexamples.size()) + " shown)";
        s += ':';
        for (const auto& t : r.counterexamples) s += ' ' + detail::tuple_text(t);
    }
    return s;
}

inline nlohmann::json json_record(const VerificationReport& r) {
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& t : r.counterexamples) ces.push_back(t);
    return {{"type", "report"},
            {"claim_id", std::string(to_string(r.claim_id))},
            {"range_lo", r.range_lo},
            {"range_hi", r.range_hi},
            {"status", r.status == Status::pass ? "PASS" : "FAIL"},
            {"counterexample_count", r.counterexample_count},
            {"counterexamples", ces}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    const auto id = claim_from_string(j.at("claim_id").get<std::string>());
    if (!id) throw std::invalid_argument("report_from_json: unknown claim_id");
    VerificationReport r;
    r.claim_id = *id;
    r.range_lo = j.at("range_lo").get<Index>();
    r.range_hi = j.at("range_hi").get<Index>();
    r.status = j.at("status").get<std::string>() == "PASS" ? Status::pass : Status::fail;
    r.counterexample_count = j.at("counterexample_count").get<std::uint64_t>();
    for (const auto& t : j.at("counterexamples")) r.counterexamples.push_back(t.get<IndexTuple>());
    return r;
}

// --- Solution records -------------------------------------------------------

inline std::string to_text(const SolutionTriple& s) {
    return "(" + std::to_string(s.n) + "," + std::to_string(s.alpha) + "," + s.x.str() + ")";
}

inline std::string to_text(const IndexSolution& s) {
    return "(" + std::to_string(s.n) + "," + s.x.str() + ")";
}

inline std::string to_text(const CatalanSolution& s) {
    return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.x) +
           "," + std::to_string(s.y) + ")";
}

inline std::string to_text(const PoonenSolution& s) {
    return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + s.x.str() + "," +
           std::to_string(s.n) + ")";
}

inline nlohmann::json json_record(const SolutionTriple& s) {
    return {{"type", "solution"}, {"equation", "main"}, {"n", s.n}, {"alpha", s.alpha},
            {"x", s.x.str()}};
}

inline SolutionTriple triple_from_json(const nlohmann::json& j) {
    return {j.at("n").get<Index>(), j.at("alpha").get<std::uint32_t>(),
            Integer(j.at("x").get<std::string>())};
}

// equation is "lucas_form", "fib_form", or "pyth"; the k field is omitted for
// the Pythagorean case, whose form factor is fixed at 1.
inline nlohmann::json json_record(const IndexSolution& s, std::string_view equation) {
    nlohmann::json j{{"type", "solution"}, {"equation", std::string(equation)}, {"n", s.n},
                     {"x", s.x.str()}};
    if (equation != "pyth") j["k"] = s.form_k.str();
    return j;
}

inline IndexSolution index_solution_from_json(const nlohmann::json& j) {
    return {j.at("n").get<Index>(), Integer(j.at("x").get<std::string>()),
            j.contains("k") ? Integer(j.at("k").get<std::string>()) : Integer(1)};
}

inline nlohmann::json json_record(const CatalanSolution& s) {
    return {{"type", "solution"}, {"equation", "catalan"}, {"a", s.a}, {"b", s.b}, {"x", s.x},
            {"y", s.y}};
}

inline CatalanSolution catalan_from_json(const nlohmann::json& j) {
    return {j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>(),
            j.at("x").get<std::uint64_t>(), j.at("y").get<std::uint64_t>()};
}

inline nlohmann::json json_record(const PoonenSolution& s) {
    return {{"type", "solution"}, {"equation", "poonen"}, {"a", s.a}, {"b", s.b},
            {"x", s.x.str()}, {"n", s.n}};
}

inline PoonenSolution poonen_from_json(const nlohmann::json& j) {
    return {j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>(),
            Integer(j.at("x").get<std::string>()), j.at("n").get<std::uint32_t>()};
}

}  // namespace lucasq
