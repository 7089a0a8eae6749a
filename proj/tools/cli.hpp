#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ncolor/ncolor.hpp>

namespace ncolor::cli {

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

enum class Format { csv, json, pretty };

/// Parsed command line. Parameters are validated against the chosen
/// command before any computation starts.
struct CliConfig {
    std::string command;
    std::string selector; // sequence name, enumeration kind or identity
    std::optional<long long> k, r, s, alpha, min_part, weight;
    std::optional<std::string> a_kind;
    long long max = 40;
    std::optional<Format> format;
    std::string output; // empty: standard output
};

inline const std::vector<std::string> kTableNames{"pl", "p", "t", "ell", "ell-gf", "s", "s-cong", "t-div", "t-cong"};
inline const std::vector<std::string> kEnumerateKinds{"ncolor", "partitions", "hybrid"};
inline const std::vector<std::string> kIdentityNames{"all", "main",    "r1",    "corollaries", "vonmangoldt",
                                                     "phi", "andrews-deutsch", "s-cong", "t-div", "t-cong"};
inline const std::vector<std::string> kFunctionNames{"unit-floor", "mobius", "one",     "liouville",
                                                     "power",      "sigma",  "totient", "von-mangoldt"};

namespace detail {

inline std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

inline std::size_t need(const std::optional<long long>& v, const char* flag, long long lo, const std::string& cmd) {
    if (!v) throw usage_error(cmd + " requires " + flag);
    if (*v < lo) throw usage_error(std::string(flag) + " must be >= " + std::to_string(lo));
    return static_cast<std::size_t>(*v);
}

inline ArithmeticFunctionSpec parse_function(const std::string& name, const std::optional<long long>& alpha) {
    if (name == "unit-floor") return ArithmeticFunctionSpec::unit_floor();
    if (name == "mobius") return ArithmeticFunctionSpec::mobius();
    if (name == "one") return ArithmeticFunctionSpec::one();
    if (name == "liouville") return ArithmeticFunctionSpec::liouville();
    if (name == "totient") return ArithmeticFunctionSpec::totient();
    if (name == "von-mangoldt") return ArithmeticFunctionSpec::von_mangoldt();
    if (name == "power" || name == "sigma") {
        const long long a = alpha.value_or(1);
        if (a < 0) throw usage_error("--alpha must be >= 0");
        return ArithmeticFunctionSpec::power(static_cast<unsigned>(a));
    }
    throw usage_error("unknown arithmetic function '" + name + "'; valid: " + join(kFunctionNames));
}

inline SequenceTable build_table(const CliConfig& c) {
    const auto n = static_cast<std::size_t>(c.max);
    const auto& name = c.selector;
    auto s_below_k = [&](std::size_t k) {
        const auto s = need(c.s, "--s", 0, "table " + name);
        if (s >= k) throw usage_error("--s must be < --k");
        return s;
    };
    if (name == "pl") return pl_table(n);
    if (name == "p") return partition_table(n);
    if (name == "t") {
        const auto k = need(c.k, "--k", 1, "table t");
        const auto r = need(c.r, "--r", 1, "table t");
        if (k > n) throw usage_error("--k must not exceed --max");
        return t_table(k, r, n);
    }
    if (name == "ell") return ell_table_recursive(need(c.r, "--r", 0, "table ell"), n);
    if (name == "ell-gf") return ell_table_gf(need(c.r, "--r", 0, "table ell-gf"), n);
    if (name == "s") return s_table(need(c.k, "--k", 1, "table s"), n);
    if (name == "s-cong") {
        const auto k = need(c.k, "--k", 1, "table s-cong");
        return s_cong_table(s_below_k(k), k, n);
    }
    if (name == "t-div") return t_div_table(need(c.k, "--k", 1, "table t-div"), n);
    if (name == "t-cong") {
        const auto k = need(c.k, "--k", 1, "table t-cong");
        return t_cong_table(s_below_k(k), k, n);
    }
    throw usage_error("unknown sequence '" + name + "'; valid: " + join(kTableNames));
}

inline ExitCode run_table(const CliConfig& c, std::ostream& out) {
    const auto table = build_table(c);
    switch (c.format.value_or(Format::csv)) {
    case Format::csv: io::write_csv(table, out); break;
    case Format::json: io::write_json(table, out); break;
    case Format::pretty: io::write_pretty(table, out); break;
    }
    return ExitCode::ok;
}

inline ExitCode run_enumerate(const CliConfig& c, std::ostream& out) {
    const auto m = static_cast<unsigned>(need(c.weight, "a weight", 0, "enumerate"));
    if (c.selector == "ncolor") {
        const auto min_part = static_cast<unsigned>(c.min_part ? need(c.min_part, "--min-part", 1, "") : 1);
        oracle::for_each_ncolor(m, min_part, [&](const oracle::NColorPartition& p) { out << p.to_string() << '\n'; });
    } else if (c.selector == "partitions") {
        oracle::for_each_partition(m, [&](const oracle::Partition& p) { out << p.to_string() << '\n'; });
    } else if (c.selector == "hybrid") {
        const auto k = static_cast<unsigned>(need(c.k, "--k", 1, "enumerate hybrid"));
        const auto r = static_cast<unsigned>(need(c.r, "--r", 1, "enumerate hybrid"));
        if (r <= k) throw usage_error("enumerate hybrid needs --r > --k");
        if (m < k) return ExitCode::ok;
        oracle::for_each_hybrid(m - k, k, r, [&](const oracle::HybridPartition& h) { out << h.to_string() << '\n'; });
    } else {
        throw usage_error("unknown enumeration '" + c.selector + "'; valid: " + join(kEnumerateKinds));
    }
    return ExitCode::ok;
}

inline std::vector<VerificationReport> collect_reports(const CliConfig& c) {
    const auto max = static_cast<std::size_t>(c.max);
    const auto& id = c.selector;
    auto positive = [](const std::optional<long long>& v, const char* flag, std::size_t dflt) {
        return v ? need(v, flag, 1, "") : dflt;
    };
    std::vector<std::size_t> rs;
    if (c.r) rs.push_back(need(c.r, "--r", 1, ""));
    else rs = {1, 2, 3, 4};

    std::vector<VerificationReport> out;
    if (id == "all") {
        SuiteBounds b;
        b.max = max;
        if (c.r) b.r_max = rs.front();
        if (c.alpha) b.alpha_max = static_cast<unsigned>(need(c.alpha, "--alpha", 0, ""));
        if (c.k) b.s_k_max = b.t_k_max = need(c.k, "--k", 1, "");
        return verify_all(b);
    }
    if (id == "main" || id == "r1") {
        std::vector<ArithmeticFunctionSpec> kinds;
        if (c.a_kind) {
            kinds.push_back(parse_function(*c.a_kind, c.alpha));
        } else {
            kinds = {ArithmeticFunctionSpec::unit_floor(), ArithmeticFunctionSpec::mobius(),
                     ArithmeticFunctionSpec::one(),        ArithmeticFunctionSpec::liouville(),
                     ArithmeticFunctionSpec::power(1),     ArithmeticFunctionSpec::power(2),
                     ArithmeticFunctionSpec::totient()};
        }
        for (const auto& a : kinds) {
            if (a.kind == ArithKind::von_mangoldt) {
                for (auto r : (id == "r1" ? std::vector<std::size_t>{1} : rs)) out.push_back(verify_vonmangoldt(r, max));
            } else if (id == "r1") {
                out.push_back(verify_r1_special(a, max));
            } else {
                for (auto r : rs) out.push_back(verify_main(a, r, max));
            }
        }
        return out;
    }
    if (id == "corollaries") {
        const auto alpha = c.alpha ? need(c.alpha, "--alpha", 0, "") : 2;
        return verify_corollaries(max, rs.back(), static_cast<unsigned>(alpha));
    }
    if (id == "vonmangoldt") {
        for (auto r : rs) out.push_back(verify_vonmangoldt(r, max));
        return out;
    }
    if (id == "phi") return {verify_phi(max)};
    if (id == "andrews-deutsch") return {verify_andrews_deutsch(positive(c.k, "--k", 4), max)};
    if (id == "s-cong") return {verify_s_cong(positive(c.k, "--k", 4), max)};
    if (id == "t-div") return {verify_t_div(positive(c.k, "--k", 3), max)};
    if (id == "t-cong") return {verify_t_cong(positive(c.k, "--k", 3), max)};
    throw usage_error("unknown identity '" + id + "'; valid: " + join(kIdentityNames));
}

inline ExitCode run_verify(const CliConfig& c, std::ostream& out) {
    const auto reports = collect_reports(c);
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        if (c.format.value_or(Format::json) == Format::pretty) out << io::report_line(r) << '\n';
        else out << io::report_json(r).dump() << '\n';
    }
    return all_pass ? ExitCode::ok : ExitCode::verification_failed;
}

} // namespace detail

/// Pinned worked-example values; every line names where the value comes from.
inline ExitCode selftest(std::ostream& out) {
    struct Pin {
        std::string what;
        std::string source;
        std::function<BigInt()> actual;
        BigInt expected;
    };
    const auto pl = pl_table(11);
    const auto ell2 = ell_table_recursive(2, 9);
    auto t = [](std::size_t k, std::size_t r, std::size_t m) { return t_table(k, r, m).values[m]; };
    auto vm = [](std::uint64_t p) {
        LogCombination lhs;
        const auto pl11 = pl_table(11);
        for (std::uint64_t k = 2; k <= 11; ++k) lhs += log_expand(k).scaled(pl11.values[11 - k]);
        return lhs.coefficient(p);
    };

    std::vector<Pin> pins{
        {"p(4) = 5", "partitions of 4 listed in the introduction", [] { return partition_table(4).values[4]; }, 5},
        {"PL(4) = 13", "n-color partitions of 4 listed in the introduction", [&] { return pl.values[4]; }, 13},
        {"T_3^2(5) = 2", "first T example of the introduction", [&] { return t(3, 2, 5); }, 2},
        {"T_2^3(5) = 3", "second T example of the introduction", [&] { return t(2, 3, 5); }, 3},
        {"T_2^3(7) = 8", "third T example of the introduction", [&] { return t(2, 3, 7); }, 8},
        {"oracle T_2^3(7) = 8", "third T example, by enumeration", [] { return BigInt(oracle::t_oracle(2, 3, 7)); }, 8},
    };
    const long long ell2_expected[] = {1, 1, 3, 3, 6, 6, 10, 10, 15, 15};
    for (std::size_t j = 0; j <= 9; ++j)
        pins.push_back({"l_2(" + std::to_string(j) + ") = " + std::to_string(ell2_expected[j]),
                        "table of l_2 in the m = 11, r = 3 example", [&ell2, j] { return ell2.values[j]; },
                        ell2_expected[j]});
    const std::pair<std::uint64_t, long long> table31[] = {{2, 497}, {3, 190}, {5, 49}, {7, 13}, {11, 1}};
    for (const auto& [p, c] : table31) {
        pins.push_back({"log " + std::to_string(p) + " coefficient (left) = " + std::to_string(c),
                        "left-side log table of the m = 11, r = 3 example", [vm, p] { return vm(p); }, c});
        pins.push_back({"log " + std::to_string(p) + " coefficient (right) = " + std::to_string(c),
                        "right-side log table of the m = 11, r = 3 example",
                        [p] { return vonmangoldt_rhs_coefficient(p, 3, 11); }, c});
    }
    const std::pair<std::pair<std::size_t, std::size_t>, long long> t33[] = {
        {{3, 11}, 38}, {{3, 10}, 23}, {{3, 9}, 16}, {{3, 8}, 5}, {{3, 7}, 4}, {{3, 6}, 4}, {{3, 3}, 1},
        {{9, 9}, 1},   {{4, 11}, 22}, {{5, 11}, 12}, {{6, 11}, 5}, {{7, 11}, 4}, {{8, 11}, 3}, {{11, 11}, 1}};
    for (const auto& [km, v] : t33) {
        const auto [k, m] = km;
        pins.push_back({"T_" + std::to_string(k) + "^3(" + std::to_string(m) + ") = " + std::to_string(v),
                        "T values in the worked log and totient examples", [t, k, m] { return t(k, 3, m); }, v});
    }
    pins.push_back({"PL(8) - PL(6) = 112", "totient identity example at m = 6",
                    [&] { return BigInt(pl.values[8] - pl.values[6]); }, 112});

    bool ok = true;
    for (const auto& pin : pins) {
        const BigInt got = pin.actual();
        if (got == pin.expected) {
            out << "ok    " << pin.what << '\n';
        } else {
            ok = false;
            out << "FAIL  " << pin.what << ": got " << got.str() << " [" << pin.source << "]\n";
        }
    }
    const auto phi = verify_phi(6);
    out << (phi.passed() ? "ok    " : "FAIL  ") << "totient identity for 0 <= m <= 6\n";
    ok = ok && phi.passed();
    return ok ? ExitCode::ok : ExitCode::verification_failed;
}

inline ExitCode run(const CliConfig& c, std::ostream& out) {
    if (c.max < 1) throw usage_error("--max must be >= 1");
    if (c.command == "table") return detail::run_table(c, out);
    if (c.command == "enumerate") return detail::run_enumerate(c, out);
    if (c.command == "verify") return detail::run_verify(c, out);
    if (c.command == "selftest") return selftest(out);
    throw usage_error("unknown command '" + c.command + "'");
}

/// Parses `args` (without the program name), runs, and maps errors to exit
/// codes. Reports go to `out`; diagnostics go to `err`.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"n-color partition tables, enumerations and identity checks", "ncolor"};
    app.require_subcommand(1);
    CliConfig cfg;

    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}, {"pretty", Format::pretty}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max,-N", cfg.max, "largest index / truncation order (default 40)");
        sub->add_option("--format", cfg.format, "csv | json | pretty")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--output,-o", cfg.output, "write to this file instead of standard output");
    };

    auto* table = app.add_subcommand("table", "print a sequence table");
    table->add_option("name", cfg.selector, detail::join(kTableNames))->required();
    table->add_option("--k", cfg.k);
    table->add_option("--r", cfg.r);
    table->add_option("--s", cfg.s);
    add_common(table);

    auto* enumerate = app.add_subcommand("enumerate", "list partitions one per line");
    enumerate->add_option("kind", cfg.selector, detail::join(kEnumerateKinds))->required();
    enumerate->add_option("weight", cfg.weight, "weight m (for hybrid: T_k^r(m) objects)")->required();
    enumerate->add_option("--min-part", cfg.min_part, "smallest allowed part (ncolor)");
    enumerate->add_option("--k", cfg.k);
    enumerate->add_option("--r", cfg.r);
    add_common(enumerate);

    auto* verify = app.add_subcommand("verify", "check identities; one JSON report per line");
    verify->add_option("identity", cfg.selector, detail::join(kIdentityNames))->required();
    verify->add_option("--A", cfg.a_kind, detail::join(kFunctionNames));
    verify->add_option("--alpha", cfg.alpha);
    verify->add_option("--r", cfg.r);
    verify->add_option("--k", cfg.k, "largest k for the part-counting identities");
    add_common(verify);

    auto* self = app.add_subcommand("selftest", "check the pinned worked-example values");
    add_common(self);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.output.empty()) return static_cast<int>(run(cfg, out));
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) throw usage_error("cannot open " + cfg.output + " for writing");
        return static_cast<int>(run(cfg, file));
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const invariant_error& e) {
        err << "internal error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::verification_failed);
    }
}

} // namespace ncolor::cli
