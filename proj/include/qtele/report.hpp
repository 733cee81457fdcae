/*
   Copyright 2026 The qtele Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <json.hpp>

#include "telescope.hpp"

namespace qtele {

using json = nlohmann::ordered_json;

// Stable report schema:
// {verdict, qnr:{r,s,u,v,unit}, decomp:{U1,F,V}, v2,
//  properness:{is_proper, witness, directions:[{a,b,invariant_part}]},
//  certificate:{C1,C2}, warnings:[...], timing_ms}
inline json report_to_json(const DecisionReport& rep) {
    json j;
    j["verdict"] = verdict_name(rep.verdict);
    if (rep.verdict == Verdict::Rejected) {
        j["qnr"] = nullptr;
        j["decomp"] = nullptr;
        j["v2"] = nullptr;
        j["properness"] = nullptr;
        j["certificate"] = nullptr;
    } else {
        j["qnr"] = {{"r", to_text(rep.qnr.r)},
                    {"s", to_text(rep.qnr.s)},
                    {"u", to_text(rep.qnr.u)},
                    {"v", to_text(rep.qnr.v)},
                    {"unit", to_text(rep.qnr.unit)}};
        j["decomp"] = {{"U1", to_text(rep.U1)}, {"F", to_text(rep.F)}, {"V", to_text(rep.V)}};
        j["v2"] = to_text(rep.v2);
        json dirs = json::array();
        for (const auto& [a, b, part] : rep.properness.directions)
            dirs.push_back({{"a", a}, {"b", b}, {"invariant_part", to_text(part)}});
        j["properness"] = {
            {"is_proper", rep.properness.is_proper},
            {"witness",
             rep.properness.witness ? json(to_text(*rep.properness.witness)) : json(nullptr)},
            {"directions", dirs}};
        j["certificate"] = {{"C1", to_text(rep.C1)}, {"C2", to_text(rep.C2)}};
    }
    json warnings = json::array();
    for (const auto& w : rep.warnings)
        warnings.push_back((w.fatal ? "fatal: " : "") + w.message);
    j["warnings"] = warnings;
    j["timing_ms"] = rep.timing_ms;
    return j;
}

inline json pair_to_json(const QZPair& pair) {
    json j;
    json coeffs = json::array();
    for (const auto& a : pair.coeffs) coeffs.push_back(to_text(a));
    j["coeffs"] = coeffs;
    j["cert"] = to_text(pair.cert);
    return j;
}

inline QZPair pair_from_json(const json& j) {
    QZPair p;
    for (const auto& c : j.at("coeffs")) p.coeffs.push_back(parse_xpoly(c.get<std::string>()));
    p.cert = parse_yrat(j.at("cert").get<std::string>());
    return p;
}

// Corpus entry: a named term with an expected verdict and optional expected
// certificate pieces (compared up to units).
struct CorpusEntry {
    std::string name;
    std::string term;
    Verdict expected_verdict = Verdict::HasQZPair;
    std::optional<std::array<std::string, 4>> expected_qnr;  // r, s, u, v
    std::optional<std::string> expected_V;
    std::optional<QZPair> known_pair;
};

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "HasQZPair") return Verdict::HasQZPair;
    if (s == "NoQZPair") return Verdict::NoQZPair;
    if (s == "Rejected") return Verdict::Rejected;
    throw Error("unknown verdict '" + s + "'");
}

inline CorpusEntry corpus_entry_from_json(const json& j) {
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    e.term = j.at("term").get<std::string>();
    e.expected_verdict = verdict_from_string(j.at("expected_verdict").get<std::string>());
    if (j.contains("expected_qnr") && !j["expected_qnr"].is_null()) {
        const auto& q = j["expected_qnr"];
        e.expected_qnr = {q.at("r").get<std::string>(), q.at("s").get<std::string>(),
                          q.at("u").get<std::string>(), q.at("v").get<std::string>()};
    }
    if (j.contains("expected_V") && !j["expected_V"].is_null())
        e.expected_V = j["expected_V"].get<std::string>();
    if (j.contains("known_pair") && !j["known_pair"].is_null())
        e.known_pair = pair_from_json(j["known_pair"]);
    return e;
}

// ---------------------------------------------------------------------------
// Comparisons up to units (nonzero elements of Q(q)).
// ---------------------------------------------------------------------------

inline bool equal_up_to_unit(const BiPoly& a, const BiPoly& b) {
    return canonical_bipoly(a) == canonical_bipoly(b);
}

// a = unit * b for a nonzero unit in Q(q)?
inline bool equal_up_to_unit(const YRat& a, const YRat& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    BiRat ra = yrat_to_birat(a);
    BiRat rb = yrat_to_birat(b);
    return canonical_bipoly(ra.num()) == canonical_bipoly(rb.num()) &&
           canonical_bipoly(ra.den()) == canonical_bipoly(rb.den());
}

}  // namespace qtele
