// Command dispatch for the altperm tool. Kept in a header so the tests can
// drive it with in-memory streams.
#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "altperm/formulas.hpp"
#include "altperm/verify.hpp"

namespace altperm::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Record {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    long index = 0;
    std::string value;
    std::string route;
};

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

class Writer {
public:
    Writer(std::ostream& out, bool json) : out_(out), json_(json) {}

    void write(const Record& r)
    {
        if (json_) {
            nlohmann::ordered_json j;
            j["command"] = r.command;
            j["parameters"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
            j["index"] = r.index;
            j["value"] = r.value;
            j["route"] = r.route;
            out_ << j.dump() << '\n';
            return;
        }
        if (!header_written_) {
            out_ << "command,parameters,index,value,route\n";
            header_written_ = true;
        }
        std::string params;
        for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : ";") + k + "=" + v;
        out_ << csv_field(r.command) << ',' << csv_field(params) << ',' << r.index << ',' << csv_field(r.value) << ','
             << csv_field(r.route) << '\n';
    }

private:
    std::ostream& out_;
    bool json_;
    bool header_written_ = false;
};

inline std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
        out.push_back(v);
    }
    return out;
}

inline Partition parse_partition(const std::string& text, const char* what)
{
    auto parts = parse_int_list(text, what);
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed ") + what + " '" + text + "': " + e.what());
    }
}

inline Composition parse_composition(const std::string& text, const char* what)
{
    auto parts = parse_int_list(text, what);
    try {
        return Composition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed ") + what + " '" + text + "': " + e.what());
    }
}

inline void emit_report(Writer& w, const std::string& command, const std::vector<std::pair<std::string, std::string>>& params,
                        const CountReport& r)
{
    w.write({command, params, r.n, to_string(r.value), r.route});
    for (const auto& [route, v] : r.crosschecks) w.write({command, params, r.n, to_string(v), route});
}

/// Runs one command line (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Counts alternating permutations by shape, inverse, cycle type and fixed points"};
    app.require_subcommand(1);
    std::string format = "csv";
    std::size_t order = 10;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--order", order, "Truncation order for series commands");

    int max_n = 10, m = 2, p = 3, n = 1, terms = 3;
    std::string lambda, inner, rho, variant = "alt_alt", kind = "a", alpha, a_set, suite = "all";
    bool reverse = false;
    std::uint64_t seed = 1;

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto* euler = sub("euler", "Euler numbers E_0..E_N");
    euler->add_option("--max", max_n)->required();
    auto* shape = sub("shape", "Alternating SYT of a (skew) shape");
    shape->add_option("--lambda", lambda)->required();
    shape->add_option("--skew-inner", inner);
    shape->add_flag("--reverse", reverse);
    auto* stair = sub("staircase", "Alternating SYT of the staircase (m-1,...,1)");
    stair->add_option("--m", m)->required();
    auto* sq = sub("square", "Alternating SYT of the p x p square, p odd");
    sq->add_option("--p", p)->required();
    auto* cycle = sub("cycle", "Alternating permutations of a cycle type");
    cycle->add_option("--rho", rho)->required();
    cycle->add_flag("--reverse", reverse);
    auto* ncycle = sub("ncycle", "Alternating n-cycles, closed form");
    ncycle->add_option("--n", n)->required();
    ncycle->add_flag("--reverse", reverse);
    auto* fm = sub("fm", "b(m^r) for r = 0..order");
    fm->add_option("--m", m)->required();
    fm->add_flag("--reverse", reverse);
    auto* doubly = sub("doubly", "w and its inverse both (reverse) alternating");
    doubly->add_option("--n", n)->required();
    doubly->add_option("--variant", variant);
    auto* inv = sub("involutions", "Alternating involutions c(0..N)");
    inv->add_option("--max", max_n)->required();
    inv->add_flag("--reverse", reverse);
    auto* fixed = sub("fixed", "Alternating permutations by fixed points");
    fixed->add_option("--max", max_n)->required();
    fixed->add_flag("--reverse", reverse);
    auto* asy = sub("asy", "Coefficients of the derangement asymptotics");
    asy->add_option("--kind", kind)->check(CLI::IsMember({"a", "b", "c"}));
    asy->add_option("--terms", terms)->required();
    auto* multi = sub("multiset", "(A,B)-alternating multiset permutations");
    multi->add_option("--alpha", alpha)->required();
    multi->add_option("--A", a_set);
    multi->add_flag("--reverse", reverse);
    auto* conj = sub("conjecture", "Fixed-point extremes against derangement numbers");
    conj->add_option("--max", max_n)->required();
    auto* ver = sub("verify", "Run self-checks");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "oracle", "routes", "identities"}));
    ver->add_option("--max-n", max_n);
    ver->add_option("--seed", seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Writer w(out, format == "json");
    auto rev_param = [&](std::vector<std::pair<std::string, std::string>> ps) {
        if (reverse) ps.emplace_back("reverse", "true");
        return ps;
    };
    try {
        if (*euler) {
            if (max_n < 0) throw UsageError("--max must be >= 0");
            const auto e = euler_numbers(static_cast<std::size_t>(max_n));
            for (std::size_t i = 0; i < e.size(); ++i)
                w.write({"euler", {{"max", std::to_string(max_n)}}, static_cast<long>(i), e[i].get_str(), "boustrophedon"});
        } else if (*shape) {
            const Partition outer = parse_partition(lambda, "partition");
            const Partition in = parse_partition(inner, "partition");
            SkewShape s;
            try {
                s = SkewShape(outer, in);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            auto params = rev_param({{"lambda", lambda}});
            if (!inner.empty()) params.insert(params.begin() + 1, {"inner", inner});
            emit_report(w, "shape", params, alt_shape(s, reverse));
        } else if (*stair) {
            emit_report(w, "staircase", {{"m", std::to_string(m)}}, staircase(m));
        } else if (*sq) {
            emit_report(w, "square", {{"p", std::to_string(p)}}, square(p));
        } else if (*cycle) {
            emit_report(w, "cycle", rev_param({{"rho", rho}}), b_cycle_type(parse_partition(rho, "partition"), reverse));
        } else if (*ncycle) {
            emit_report(w, "ncycle", rev_param({{"n", std::to_string(n)}}), b_ncycle_closed(n, reverse));
        } else if (*fm) {
            const auto s = fm_series(m, order, reverse);
            const auto params = rev_param({{"m", std::to_string(m)}, {"order", std::to_string(order)}});
            for (std::size_t r = 0; r < s.size(); ++r) w.write({"fm", params, static_cast<long>(r), s[r].get_str(), "generating_function"});
        } else if (*doubly) {
            emit_report(w, "doubly", {{"n", std::to_string(n)}, {"variant", variant}}, doubly_alternating(n, parse_double_variant(variant)));
        } else if (*inv) {
            if (max_n < 0) throw UsageError("--max must be >= 0");
            const auto c = involutions_series(static_cast<std::size_t>(max_n), reverse);
            const auto params = rev_param({{"max", std::to_string(max_n)}});
            for (std::size_t i = 0; i < c.size(); ++i) w.write({"involutions", params, static_cast<long>(i), c[i].get_str(), "generating_function"});
        } else if (*fixed) {
            if (max_n < 0) throw UsageError("--max must be >= 0");
            const auto t = fixed_point_series(static_cast<std::size_t>(max_n), reverse);
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t k = 0; k < t[i].size(); ++k)
                    w.write({"fixed", rev_param({{"max", std::to_string(max_n)}, {"k", std::to_string(k)}}), static_cast<long>(i),
                             t[i][k].get_str(), "generating_function"});
        } else if (*asy) {
            if (terms < 0) throw UsageError("--terms must be >= 0");
            const auto c = asymptotic_coeffs(parse_asy_kind(kind), static_cast<std::size_t>(terms));
            for (std::size_t k = 0; k < c.size(); ++k)
                w.write({"asy", {{"kind", kind}, {"terms", std::to_string(terms)}}, static_cast<long>(k), to_string(c[k]), "series"});
        } else if (*multi) {
            const auto parts = parse_int_list(a_set, "subset");
            emit_report(w, "multiset", rev_param({{"alpha", alpha}, {"A", a_set}}),
                        multiset_count(parse_composition(alpha, "composition"), std::set<int>(parts.begin(), parts.end()), reverse));
        } else if (*conj) {
            int code = kOk;
            for (const auto& row : conjecture_check(max_n)) {
                w.write({"conjecture",
                         {{"max", std::to_string(max_n)}, {"rhs", row.rhs.get_str()}, {"equal", row.equal ? "true" : "false"}},
                         row.n, row.lhs.get_str(), row.statement});
                if (!row.equal) code = kMismatch;
            }
            return code;
        } else if (*ver) {
            const auto checks = verify::run_suite(suite, {max_n, seed});
            int code = kOk;
            long i = 0;
            for (const auto& c : checks) {
                w.write({"verify", {{"suite", c.suite}, {"max-n", std::to_string(max_n)}, {"seed", std::to_string(seed)}}, i++,
                         c.passed ? "pass" : "fail", c.name});
                if (!c.passed && code == kOk) {
                    err << "mismatch in " << c.suite << "/" << c.name << ": " << c.detail << '\n';
                    code = kMismatch;
                }
            }
            return code;
        }
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal mismatch: " << e.what() << '\n';
        return kMismatch;
    }
    return kOk;
}

}  // namespace altperm::cli
