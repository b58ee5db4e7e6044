#pragma once

// Command-line front end. cmd_dispatch is the whole program; tools/cyl2dom.cpp
// only forwards argv and the standard streams.
//
// Exit status: 0 success, 1 usage or input error, 2 a checked claim failed,
// 3 internal pipeline failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bounds.hpp"
#include "cylinder.hpp"
#include "io.hpp"
#include "json.hpp"
#include "omega.hpp"
#include "oracle.hpp"
#include "transfer.hpp"
#include "tropical.hpp"
#include "words.hpp"

namespace cyl2dom::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kClaimFailed = 2, kInternal = 3 };

using nlohmann::json;

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceOptions {
    /// Test mode: drop this factor from the suitability tables before running.
    std::optional<std::string> corrupt_factor;
    bool timing = false;
};

class ClaimLog {
public:
    void check(std::string id, std::string statement, json expected, json observed) {
        const bool pass = expected == observed;
        all_pass_ = all_pass_ && pass;
        claims_.push_back({{"id", std::move(id)},
                           {"statement", std::move(statement)},
                           {"expected", std::move(expected)},
                           {"observed", std::move(observed)},
                           {"status", pass ? "pass" : "FAIL"}});
    }

    void skip(std::string id, std::string statement, json expected, const std::string& reason) {
        all_pass_ = false;
        claims_.push_back({{"id", std::move(id)},
                           {"statement", std::move(statement)},
                           {"expected", std::move(expected)},
                           {"observed", nullptr},
                           {"status", "skipped: " + reason}});
    }

    bool all_pass() const noexcept { return all_pass_; }
    const json& claims() const noexcept { return claims_; }

private:
    json claims_ = json::array();
    bool all_pass_ = true;
};

/// Drops one factor from whichever suitability list holds it; false if none does.
inline bool remove_forbidden_factor(SuitabilityRules& rules, const std::string& factor) {
    for (auto* list : {&rules.forbidden_prefixes, &rules.forbidden_suffixes, &rules.forbidden_triples}) {
        auto it = std::find(list->begin(), list->end(), factor);
        if (it != list->end()) {
            list->erase(it);
            return true;
        }
    }
    return false;
}

/// Runs the whole pipeline and checks each published number. Returns the run report.
inline json cmd_reproduce(const ReproduceOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SuitabilityRules rules = default_suitability_rules();
    json params = json::object();
    if (opts.corrupt_factor) {
        if (!remove_forbidden_factor(rules, *opts.corrupt_factor))
            throw std::invalid_argument("reproduce: '" + *opts.corrupt_factor + "' is not a forbidden factor");
        params["corrupt_factor"] = *opts.corrupt_factor;
    }

    ClaimLog log;
    json observed = json::object();
    const WordTable table = WordTable::build(rules);
    observed["word_count"] = table.size();
    log.check("suitable-word-count", "number of suitable column words", 111, table.size());

    const std::vector<std::tuple<std::string, std::string, json>> downstream = {
        {"transfer-matrix-order", "order of the arc-label matrix", 111},
        {"shift-periodicity", "first (n0, a, b) with A^(n0+a) = b + A^n0", json{{"n0", 45}, {"a", 1}, {"b", 2}}},
        {"omega2-16", "omega2(16)", 33},
        {"omega2-19", "omega2(19)", 39},
        {"omega2-45", "omega2(45)", 90},
        {"omega2-linear", "omega2(n) = 2n for every other n in 16..60", true},
        {"gamma2-13x18", "gamma2(P_13 x C_18) with a verified witness", 90},
    };

    if (table.size() != WordTable::kExpectedSize) {
        for (const auto& [id, st, ex] : downstream) log.skip(id, st, ex, "word table has the wrong size");
    } else {
        const OmegaTable omega = build_omega_table(kDefaultMaxExplicit, rules, default_follow_rules());
        const auto& cert = omega.certificate();
        observed["certificate"] = {{"n0", cert.n0}, {"a", cert.a}, {"b", cert.b}};
        log.check(std::get<0>(downstream[0]), std::get<1>(downstream[0]), 111, cert.power_at_n0.order());
        log.check(std::get<0>(downstream[1]), std::get<1>(downstream[1]), std::get<2>(downstream[1]),
                  observed["certificate"]);
        log.check("omega2-16", "omega2(16)", 33, omega(16));
        log.check("omega2-19", "omega2(19)", 39, omega(19));
        log.check("omega2-45", "omega2(45)", 90, omega(45));
        json off_law = json::array();
        for (int n = 16; n <= 60; ++n)
            if (n != 16 && n != 19 && omega(n) != 2LL * n) off_law.push_back(n);
        log.check("omega2-linear", "omega2(n) = 2n for every other n in 16..60", true, off_law.empty());
        if (!off_law.empty()) observed["omega2_off_law"] = off_law;

        const BoundResult g = gamma2(13, 18, omega);
        const bool witness_ok = g.witness && is_2dominating(*g.witness) &&
                                g.witness->size() == static_cast<std::size_t>(*g.exact);
        log.check("gamma2-13x18", "gamma2(P_13 x C_18) with a verified witness", 90,
                  witness_ok ? json(*g.exact) : json("witness rejected"));
        observed["gamma2_13x18_lower"] = *g.lower;
    }

    json report = {{"command", "reproduce"},
                   {"parameters", params},
                   {"observed", observed},
                   {"claims", log.claims()},
                   {"status", log.all_pass() ? "pass" : "fail"}};
    if (opts.timing)
        report["wall_time_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

inline void print_reproduce_text(const json& report, std::ostream& out) {
    for (const auto& c : report["claims"]) {
        out << (c["status"] == "pass" ? "[pass] " : "[FAIL] ") << c["id"].get<std::string>() << ": "
            << c["statement"].get<std::string>() << " expected " << c["expected"].dump() << " observed "
            << c["observed"].dump();
        if (c["status"] != "pass" && c["status"] != "FAIL") out << " (" << c["status"].get<std::string>() << ")";
        out << '\n';
    }
    out << "overall: " << report["status"].get<std::string>() << '\n';
}

// ---------------------------------------------------------------------------
// helpers

namespace detail {

inline std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) throw std::invalid_argument("range must look like A..B (got '" + text + "')");
    try {
        std::size_t u1 = 0;
        std::size_t u2 = 0;
        const std::string lo = text.substr(0, pos);
        const std::string hi = text.substr(pos + 2);
        const int a = std::stoi(lo, &u1);
        const int b = std::stoi(hi, &u2);
        if (u1 != lo.size() || u2 != hi.size() || a > b) throw std::invalid_argument("bad");
        return {a, b};
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like A..B with A <= B (got '" + text + "')");
    }
}

/// Writes to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    writer(f);
}

inline json optional_json(const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

// ---------------------------------------------------------------------------
// dispatch

inline int cmd_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-domination of cylinders P_m x C_n via (min,+) transfer matrices", "cyl2dom"};
    app.require_subcommand(1);
    std::function<int()> action;

    // words
    auto* words = app.add_subcommand("words", "suitable column words");
    words->require_subcommand(1);
    std::string words_format = "text";
    auto* words_list = words->add_subcommand("list", "one word per line with its matrix index");
    words_list->add_option("--format", words_format)->check(CLI::IsMember({"text", "csv", "json"}));
    words_list->callback([&] {
        action = [&] {
            const WordTable t = generate_word_table();
            if (words_format == "json") {
                json arr = json::array();
                for (std::size_t i = 0; i < t.size(); ++i) arr.push_back({{"index", i}, {"word", t[i].str()}});
                out << arr.dump(2) << '\n';
            } else {
                if (words_format == "csv") out << "index,word\n";
                for (std::size_t i = 0; i < t.size(); ++i)
                    out << i << (words_format == "csv" ? "," : " ") << t[i].str() << '\n';
            }
            return kOk;
        };
    });
    auto* words_count = words->add_subcommand("count", "print the number of suitable words");
    words_count->callback([&] {
        action = [&] {
            out << generate_word_table().size() << '\n';
            return kOk;
        };
    });

    // digraph
    auto* digraph = app.add_subcommand("digraph", "transfer digraph");
    digraph->require_subcommand(1);
    std::string digraph_out;
    auto* digraph_dump = digraph->add_subcommand("dump", "arcs as 'q p d nd2 nd1 label' lines");
    digraph_dump->add_option("--out", digraph_out, "output file (default stdout)");
    digraph_dump->callback([&] {
        action = [&] {
            const TransferDigraph D = build_transfer_digraph();
            detail::emit(digraph_out, out, [&](std::ostream& os) {
                for (const auto& [arc, st] : D.arcs())
                    os << D.words()[arc.first].str() << ' ' << D.words()[arc.second].str() << ' ' << st.d << ' '
                       << st.nd2 << ' ' << st.nd1 << ' ' << st.label << '\n';
            });
            return kOk;
        };
    });

    // matrix
    auto* matrix = app.add_subcommand("matrix", "arc-label matrix A(D)");
    matrix->require_subcommand(1);
    std::string matrix_out;
    std::size_t matrix_power = 1;
    auto* matrix_dump = matrix->add_subcommand("dump", "write A(D) (or a power of it) as CSV");
    matrix_dump->add_option("--out", matrix_out, "output file (default stdout)");
    matrix_dump->add_option("--power", matrix_power, "write A(D)^K instead")->check(CLI::PositiveNumber);
    matrix_dump->callback([&] {
        action = [&] {
            const TropicalMatrix A = tpow(build_transfer_matrix(build_transfer_digraph()), matrix_power);
            detail::emit(matrix_out, out, [&](std::ostream& os) { write_matrix_csv(os, A); });
            return kOk;
        };
    });
    std::string matrix_file;
    std::string matrix_load_format = "text";
    auto* matrix_load = matrix->add_subcommand("load", "parse a matrix CSV and summarize it");
    matrix_load->add_option("--file", matrix_file)->required();
    matrix_load->add_option("--format", matrix_load_format)->check(CLI::IsMember({"text", "json"}));
    matrix_load->callback([&] {
        action = [&] {
            std::ifstream f(matrix_file);
            if (!f) throw std::invalid_argument("cannot open '" + matrix_file + "'");
            const TropicalMatrix A = read_matrix_csv(f);
            std::size_t finite = 0;
            for (const auto& e : A.entries()) finite += e.is_finite() ? 1 : 0;
            const bool is_transfer = A == build_transfer_matrix(build_transfer_digraph());
            if (matrix_load_format == "json") {
                out << json{{"order", A.order()},
                            {"finite_entries", finite},
                            {"min_diagonal", min_diagonal(A).to_string()},
                            {"equals_transfer_matrix", is_transfer}}
                           .dump(2)
                    << '\n';
            } else {
                out << "order " << A.order() << "\nfinite_entries " << finite << "\nmin_diagonal "
                    << min_diagonal(A) << "\nequals_transfer_matrix " << (is_transfer ? "yes" : "no") << '\n';
            }
            return kOk;
        };
    });

    // omega2
    auto* om = app.add_subcommand("omega2", "minimum wasted 2-domination of the border");
    std::optional<long long> om_n;
    std::string om_range;
    std::string om_format = "text";
    auto* om_n_opt = om->add_option("--n", om_n, "cycle length (>= 16)");
    auto* om_range_opt = om->add_option("--range", om_range, "A..B");
    om_n_opt->excludes(om_range_opt);
    om->add_option("--format", om_format)->check(CLI::IsMember({"text", "csv", "json"}));
    om->callback([&] {
        action = [&] {
            if (!om_n && om_range.empty()) throw CLI::RequiredError("--n or --range");
            const OmegaTable& t = default_omega_table();
            if (om_n) {
                const long long v = t(*om_n);
                if (om_format == "json") out << json{{"n", *om_n}, {"omega2", v}}.dump() << '\n';
                else if (om_format == "csv") out << "n,omega2\n" << *om_n << ',' << v << '\n';
                else out << v << '\n';
                return kOk;
            }
            const auto [lo, hi] = detail::parse_range(om_range);
            if (om_format == "json") {
                json arr = json::array();
                for (int n = lo; n <= hi; ++n) arr.push_back({{"n", n}, {"omega2", t(n)}});
                out << arr.dump(2) << '\n';
            } else {
                if (om_format == "csv") out << "n,omega2\n";
                for (int n = lo; n <= hi; ++n) out << n << (om_format == "csv" ? "," : " ") << t(n) << '\n';
            }
            return kOk;
        };
    });

    // periodicity
    auto* per = app.add_subcommand("periodicity", "shift-periodicity certificate of A(D)");
    std::size_t per_max = kDefaultMaxExplicit;
    std::string per_prefix;
    std::string per_format = "text";
    per->add_option("--max-exponent", per_max, "largest power examined")->check(CLI::Range(2, 1000));
    per->add_option("--out-prefix", per_prefix, "write PREFIX_n0.csv and PREFIX_n0_plus_a.csv");
    per->add_option("--format", per_format)->check(CLI::IsMember({"text", "json"}));
    per->callback([&] {
        action = [&] {
            const auto cert =
                find_shift_periodicity(build_transfer_matrix(build_transfer_digraph()), per_max);
            if (!cert.verify()) throw std::logic_error("periodicity: certificate does not re-verify");
            json j = {{"n0", cert.n0}, {"a", cert.a}, {"b", cert.b}, {"verified", true}};
            if (!per_prefix.empty()) {
                const std::string lo = per_prefix + "_n0.csv";
                const std::string hi = per_prefix + "_n0_plus_a.csv";
                detail::emit(lo, out, [&](std::ostream& os) { write_matrix_csv(os, cert.power_at_n0); });
                detail::emit(hi, out, [&](std::ostream& os) { write_matrix_csv(os, cert.power_at_n0_plus_a); });
                j["power_at_n0"] = lo;
                j["power_at_n0_plus_a"] = hi;
            }
            if (per_format == "json") out << j.dump(2) << '\n';
            else out << "n0 " << cert.n0 << "\na " << cert.a << "\nb " << cert.b << '\n';
            return kOk;
        };
    });

    // bound
    auto* bound = app.add_subcommand("bound", "lower bound, upper bound and exact value of gamma2");
    int b_m = 0;
    int b_n = 0;
    std::string b_format = "text";
    bound->add_option("--m", b_m)->required();
    bound->add_option("--n", b_n)->required();
    bound->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));
    bound->callback([&] {
        action = [&] {
            if (b_m < 2 || b_n < 3) throw std::invalid_argument("bound: need m >= 2 and n >= 3");
            const BoundResult r = gamma2(b_m, b_n);
            const json j = {{"m", r.m},
                            {"n", r.n},
                            {"lower_rational", r.lower_rational ? json(r.lower_rational->str()) : json(nullptr)},
                            {"lower", detail::optional_json(r.lower)},
                            {"upper", detail::optional_json(r.upper)},
                            {"exact", detail::optional_json(r.exact)},
                            {"status", to_string(r.status)}};
            if (b_format == "json") {
                out << j.dump(2) << '\n';
            } else {
                for (const auto& key : {"m", "n", "lower_rational", "lower", "upper", "exact", "status"})
                    out << key << ' ' << (j[key].is_string() ? j[key].get<std::string>() : j[key].dump()) << '\n';
            }
            return kOk;
        };
    });

    // construct
    auto* cons = app.add_subcommand("construct", "2-dominating set of size (m+2)n/3");
    int c_m = 0;
    int c_n = 0;
    std::string c_format = "json";
    cons->add_option("--m", c_m)->required();
    cons->add_option("--n", c_n)->required();
    cons->add_option("--format", c_format)->check(CLI::IsMember({"json", "grid"}));
    cons->callback([&] {
        action = [&] {
            const VertexSet s = construct_2dominating(c_m, c_n);
            if (c_format == "grid") out << render_grid(s);
            else out << vertex_set_to_json(s).dump() << '\n';
            return kOk;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check a vertex set file");
    std::string v_file;
    std::string v_format = "text";
    verify->add_option("--set", v_file, "VertexSet JSON file")->required();
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] {
        action = [&] {
            std::ifstream f(v_file);
            if (!f) throw std::invalid_argument("cannot open '" + v_file + "'");
            const VertexSet s = read_vertex_set(f);
            json j = {{"m", s.spec().m()}, {"n", s.spec().n()}, {"size", s.size()}};
            const bool dom = is_2dominating(s);
            j["two_dominating"] = dom;
            bool border = false;
            if (s.spec().m() >= kMinBorderRows) {
                border = is_border_2dominating(s);
                j["border_two_dominating"] = border;
                if (border) j["wasted"] = wasted_2domination(s).omega;
            }
            const bool valid = dom || border;
            j["valid"] = valid;
            if (v_format == "json") {
                out << j.dump(2) << '\n';
            } else {
                out << (valid ? "valid" : "invalid") << " size " << s.size() << '\n';
                out << "2-dominating " << (dom ? "yes" : "no") << '\n';
                if (j.contains("border_two_dominating"))
                    out << "border-2-dominating " << (border ? "yes" : "no") << '\n';
                if (j.contains("wasted")) out << "wasted " << j["wasted"].get<long long>() << '\n';
            }
            return valid ? kOk : kClaimFailed;
        };
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "independent exact solvers");
    orc->require_subcommand(1);
    int o_m = 0;
    int o_n = 0;
    bool o_witness = false;
    auto* orc_g = orc->add_subcommand("gamma2", "exact gamma2 by cyclic column DP (m <= 9, n <= 12)");
    orc_g->add_option("--m", o_m)->required();
    orc_g->add_option("--n", o_n)->required();
    orc_g->add_flag("--witness", o_witness, "print a minimum set as JSON");
    orc_g->callback([&] {
        action = [&] {
            const auto r = oracle::gamma2_oracle(o_m, o_n);
            out << r.value << '\n';
            if (o_witness) out << vertex_set_to_json(r.witness).dump() << '\n';
            return kOk;
        };
    });
    auto* orc_o = orc->add_subcommand("omega2", "exact omega2 by border DP (16 <= n <= 24)");
    orc_o->add_option("--n", o_n)->required();
    orc_o->add_flag("--witness", o_witness, "print a minimizing border set as JSON");
    orc_o->callback([&] {
        action = [&] {
            const auto r = oracle::omega2_oracle(o_n);
            out << r.value << '\n';
            if (o_witness) out << vertex_set_to_json(r.witness).dump() << '\n';
            return kOk;
        };
    });

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "run the full pipeline and check every published value");
    ReproduceOptions rep_opts;
    std::string rep_format = "text";
    std::string rep_factor;
    rep->add_option("--format", rep_format)->check(CLI::IsMember({"text", "json"}));
    rep->add_option("--corrupt-factor", rep_factor, "test mode: drop one forbidden factor first");
    rep->add_flag("--timing", rep_opts.timing, "include wall time in the JSON report");
    rep->callback([&] {
        action = [&] {
            if (!rep_factor.empty()) rep_opts.corrupt_factor = rep_factor;
            const json report = cmd_reproduce(rep_opts);
            if (rep_format == "json") out << report.dump(2) << '\n';
            else print_reproduce_text(report, out);
            return report["status"] == "pass" ? kOk : kClaimFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PeriodicityNotFound& e) {
        err << "pipeline failure: " << e.what() << '\n';
        return kInternal;
    } catch (const WordTableSizeError& e) {
        err << "pipeline failure: " << e.what() << '\n';
        return kInternal;
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range and domain_error derive from logic_error.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
            dynamic_cast<const std::domain_error*>(&e)) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
        err << "internal failure: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal failure: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace cyl2dom::cli
