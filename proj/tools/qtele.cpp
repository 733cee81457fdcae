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

#include <CLI11.hpp>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <qtele/qtele.hpp>

namespace fs = std::filesystem;
using namespace qtele;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRejected = 2;
constexpr int kExitNo = 3;

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw Error("cannot open file: " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inputs are either files or inline DSL expressions.
std::string term_text_from_arg(const std::string& arg) {
    if (fs::exists(arg) && fs::is_regular_file(arg)) return read_file(arg);
    return arg;
}

Rational parse_rational_arg(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

void print_text_report(const DecisionReport& rep) {
    std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
    for (const auto& w : rep.warnings)
        std::cout << "warning" << (w.fatal ? " (fatal)" : "") << ": " << w.message << "\n";
    if (rep.verdict == Verdict::Rejected) return;
    std::cout << "q-NR (w.r.t. K):\n";
    std::cout << "  r = " << to_text(rep.qnr.r) << "\n";
    std::cout << "  s = " << to_text(rep.qnr.s) << "\n";
    std::cout << "  u = " << to_text(rep.qnr.u) << "\n";
    std::cout << "  v = " << to_text(rep.qnr.v) << "\n";
    std::cout << "  unit = " << to_text(rep.qnr.unit) << "\n";
    std::cout << "decomposition:\n";
    std::cout << "  U1 = " << to_text(rep.U1) << "\n";
    std::cout << "  F  = " << to_text(rep.F) << "\n";
    std::cout << "  V  = " << to_text(rep.V) << "\n";
    std::cout << "v2 = " << to_text(rep.v2) << "\n";
    if (rep.properness.is_proper) {
        std::cout << "v2 is q-proper";
        if (!rep.properness.directions.empty()) {
            std::cout << "; invariant parts:";
            for (const auto& [a, b, part] : rep.properness.directions)
                std::cout << " [(" << a << "," << b << ") " << to_text(part) << "]";
        }
        std::cout << "\n";
    } else {
        std::cout << "v2 is not q-proper; witness = " << to_text(*rep.properness.witness)
                  << "\n";
    }
    std::cout << "certificate:\n";
    std::cout << "  C1 = " << to_text(rep.C1) << "\n";
    std::cout << "  C2 = " << to_text(rep.C2) << "\n";
    std::cout << "timing_ms = " << rep.timing_ms << "\n";
}

// Pointwise sanity: T(n,k) = T1(n,k+1) - T1(n,k) + T2(n,k) with Ti = Ci * T,
// evaluated exactly on a grid; points where anything poles are skipped.
void pointwise_sanity(const TermParts& parts, const DecisionReport& rep, long grid,
                      const Rational& qv) {
    if (rep.verdict == Verdict::Rejected) return;
    for (long n = 0; n < grid; ++n) {
        for (long k = 0; k < grid; ++k) {
            try {
                Rational xv = rational_pow(qv, n);
                Rational yv = rational_pow(qv, k);
                Rational t = eval_term(parts, n, k, qv);
                Rational t_up = eval_term(parts, n, k + 1, qv);
                Rational c1 = eval_yrat(rep.C1, qv, xv, yv);
                Rational c1_up = eval_yrat(rep.C1, qv, xv, yv * qv);
                Rational c2 = eval_yrat(rep.C2, qv, xv, yv);
                Rational lhs = t;
                Rational rhs = c1_up * t_up - c1 * t + c2 * t;
                if (lhs != rhs)
                    throw InternalCheckFailure("pointwise decomposition failed at (n, k) = (" +
                                               std::to_string(n) + ", " + std::to_string(k) +
                                               ")");
            } catch (const PoleAtPoint&) {
                continue;
            }
        }
    }
}

int cmd_decide(const std::string& input, const std::string& format, long check_points,
               const Rational& q_check) {
    TermPtr t = parse_term(term_text_from_arg(input));
    DecisionReport rep = decide_qzpair(*t);
    pointwise_sanity(to_parts(*t), rep, check_points, q_check);
    if (format == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_text_report(rep);
    switch (rep.verdict) {
        case Verdict::HasQZPair:
            return kExitOk;
        case Verdict::NoQZPair:
            return kExitNo;
        case Verdict::Rejected:
            return kExitRejected;
    }
    return kExitError;
}

int cmd_verify(const std::string& term_arg, const std::string& pair_file) {
    TermPtr t = parse_term(term_text_from_arg(term_arg));
    json j = json::parse(read_file(pair_file));
    QZPair pair = pair_from_json(j);
    bool ok = verify_qzpair(*t, pair);
    std::cout << (ok ? "verified" : "identity does not hold") << "\n";
    return ok ? kExitOk : kExitNo;
}

int cmd_search(const std::string& input, long max_order, long degree_cap,
               const std::string& format) {
    TermPtr t = parse_term(term_text_from_arg(input));
    SearchOptions opt;
    opt.max_order = max_order;
    opt.degree_cap = degree_cap;
    auto found = search_qzpair(*t, opt);
    if (!found) {
        std::cout << (format == "json" ? "null" : "no qZ-pair found within caps") << "\n";
        return kExitNo;
    }
    if (format == "json")
        std::cout << pair_to_json(*found).dump(2) << "\n";
    else {
        std::cout << "order " << found->coeffs.size() - 1 << "\n";
        for (std::size_t i = 0; i < found->coeffs.size(); ++i)
            std::cout << "a_" << i << " = " << to_text(found->coeffs[i]) << "\n";
        std::cout << "C = " << to_text(found->cert) << "\n";
    }
    return kExitOk;
}

struct CorpusOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

CorpusOutcome run_corpus_entry(const CorpusEntry& e, const std::optional<SearchOptions>& so) {
    CorpusOutcome out;
    out.name = e.name;
    auto start = std::chrono::steady_clock::now();
    try {
        TermPtr t = parse_term(e.term);
        DecisionReport rep = decide_qzpair(*t);
        std::vector<std::string> problems;
        if (rep.verdict != e.expected_verdict)
            problems.push_back(std::string("verdict ") + verdict_name(rep.verdict) +
                               " != expected " + verdict_name(e.expected_verdict));
        if (e.expected_qnr && rep.verdict != Verdict::Rejected) {
            const auto& q = *e.expected_qnr;
            if (!equal_up_to_unit(rep.qnr.r, parse_bipoly(q[0])) ||
                !equal_up_to_unit(rep.qnr.s, parse_bipoly(q[1])) ||
                !equal_up_to_unit(rep.qnr.u, parse_bipoly(q[2])) ||
                !equal_up_to_unit(rep.qnr.v, parse_bipoly(q[3])))
                problems.push_back("q-NR mismatch");
        }
        if (e.expected_V && rep.verdict != Verdict::Rejected) {
            if (!equal_up_to_unit(rep.V, parse_yrat(*e.expected_V)))
                problems.push_back("V mismatch");
        }
        if (e.known_pair) {
            if (!verify_qzpair(*t, *e.known_pair)) problems.push_back("known pair fails verify");
        }
        if (so && rep.verdict != Verdict::Rejected) {
            auto found = search_qzpair(*t, *so);
            if (found && rep.verdict == Verdict::NoQZPair)
                throw InternalCheckFailure(
                    "verified pair found for a NoQZPair input (criterion contradiction)");
            if (!found && rep.verdict == Verdict::HasQZPair)
                problems.push_back("search found nothing within caps (not a failure of decide)");
        }
        out.pass = problems.empty();
        if (!problems.empty()) {
            for (const auto& p : problems) out.detail += (out.detail.empty() ? "" : "; ") + p;
        }
    } catch (const std::exception& ex) {
        out.pass = false;
        out.detail = std::string("error: ") + ex.what();
    }
    auto end = std::chrono::steady_clock::now();
    out.ms = std::chrono::duration<double, std::milli>(end - start).count();
    return out;
}

int cmd_corpus(const std::string& dir, long jobs, const std::string& search_caps) {
    std::vector<fs::path> files;
    if (fs::exists(dir))
        for (const auto& de : fs::directory_iterator(dir))
            if (de.path().extension() == ".corpus") files.push_back(de.path());
    std::sort(files.begin(), files.end());

    std::optional<SearchOptions> so;
    if (!search_caps.empty()) {
        SearchOptions s;
        auto comma = search_caps.find(',');
        if (comma == std::string::npos) throw Error("--search-caps expects ORDER,DEGREE");
        s.max_order = std::stol(search_caps.substr(0, comma));
        s.degree_cap = std::stol(search_caps.substr(comma + 1));
        so = s;
    }

    std::vector<CorpusEntry> entries;
    entries.reserve(files.size());
    for (const auto& f : files)
        entries.push_back(corpus_entry_from_json(json::parse(read_file(f))));

    std::vector<CorpusOutcome> outcomes(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) return;
            outcomes[i] = run_corpus_entry(entries[i], so);
        }
    };
    long nthreads = std::max<long>(1, std::min<long>(jobs, static_cast<long>(entries.size())));
    std::vector<std::thread> pool;
    for (long i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << o.name;
        if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
        std::cout << "  (" << o.ms << " ms)\n";
        if (o.pass) ++passed;
    }
    std::cout << passed << "/" << outcomes.size() << " corpus entries passed\n";
    return passed == outcomes.size() ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qtele: decide whether a bivariate q-hypergeometric term has a qZ-pair"};
    app.require_subcommand(1);

    std::string input, format = "text", pair_file, dir, search_caps, q_check_str = "2";
    long max_order = 2, degree_cap = 8, jobs = 1, check_points = 6;

    auto* dec = app.add_subcommand("decide", "run the decision procedure");
    dec->add_option("input", input, "term file (.qt) or inline expression")->required();
    dec->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    dec->add_option("--check-points", check_points, "grid size for pointwise sanity checks");
    dec->add_option("--q-check", q_check_str, "rational q used for evaluation checks");

    auto* ver = app.add_subcommand("verify", "verify a qZ-pair against its term");
    ver->add_option("term", input, "term file (.qt) or inline expression")->required();
    ver->add_option("pair", pair_file, "pair file (.qz, JSON)")->required();

    auto* sea = app.add_subcommand("search", "bounded-order qZ-pair search");
    sea->add_option("input", input, "term file (.qt) or inline expression")->required();
    sea->add_option("--max-order", max_order, "maximal telescoper order");
    sea->add_option("--degree-cap", degree_cap, "ansatz degree cap");
    sea->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cor = app.add_subcommand("corpus", "run a directory of .corpus entries");
    cor->add_option("dir", dir, "directory of .corpus files")->required();
    cor->add_option("--jobs", jobs, "parallel workers");
    cor->add_option("--search-caps", search_caps, "ORDER,DEGREE to cross-check with search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dec) return cmd_decide(input, format, check_points, parse_rational_arg(q_check_str));
        if (*ver) return cmd_verify(input, pair_file);
        if (*sea) return cmd_search(input, max_order, degree_cap, format);
        if (*cor) return cmd_corpus(dir, jobs, search_caps);
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
