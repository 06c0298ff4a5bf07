#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aitken/dobinski.hpp"
#include "aitken/exact_core.hpp"
#include "aitken/identities.hpp"
#include "aitken/modular.hpp"
#include "aitken/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace aitken;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string format;  // csv, json, text; per-command default when empty
    std::string out_path;
};

void emit(const CommonOpts& opts, const std::string& content) {
    if (opts.out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + opts.out_path);
        f << content;
    }
}

json make_report(const std::string& command, json params,
                 const std::string& verdict, json failures, json data) {
    json r;
    r["command"] = command;
    r["params"] = std::move(params);
    r["verdict"] = verdict;
    r["failures"] = std::move(failures);
    r["data"] = std::move(data);
    return r;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

modular::Direction parse_direction(const std::string& d) {
    if (d == "n") return modular::Direction::n_dir;
    if (d == "k") return modular::Direction::k_dir;
    throw CLI::ValidationError("--direction must be 'n' or 'k'");
}

const char* direction_name(modular::Direction d) {
    return d == modular::Direction::n_dir ? "n" : "k";
}

bool slow_enabled(bool flag) {
    if (flag) return true;
    const char* env = std::getenv("AITKEN_SLOW");
    return env && *env && std::string(env) != "0";
}

// Fault-injection hook for the test suite: bumps one triangle entry by 1.
void corrupt(core::TriangleA& tri, const std::string& nk_arg) {
    auto comma = nk_arg.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--corrupt-entry expects 'n,k'");
    std::size_t n = std::stoul(nk_arg.substr(0, comma));
    std::size_t k = std::stoul(nk_arg.substr(comma + 1));
    if (n > tri.max_n() || k > n)
        throw CLI::ValidationError("--corrupt-entry out of range");
    tri.rows[n][k] += 1;
}

int run_table(unsigned n, const CommonOpts& opts,
              const std::string& corrupt_nk) {
    core::TriangleA tri = core::a_triangle(n);
    if (!corrupt_nk.empty()) corrupt(tri, corrupt_nk);
    std::string fmt = opts.format.empty() ? "csv" : opts.format;
    if (fmt == "csv") {
        std::ostringstream os;
        os << "n,k,A\n";
        for (std::size_t r = 0; r <= tri.max_n(); ++r)
            for (std::size_t c = 0; c <= r; ++c)
                os << r << "," << c << "," << tri.at(r, c) << "\n";
        emit(opts, os.str());
    } else if (fmt == "json") {
        json data = json::array();
        for (std::size_t r = 0; r <= tri.max_n(); ++r)
            for (std::size_t c = 0; c <= r; ++c)
                data.push_back(json{{"n", r}, {"k", c},
                                    {"A", tri.at(r, c).get_str()}});
        emit(opts, dump(make_report("table", json{{"n", n}}, "pass",
                                    json::array(), data)));
    } else {
        std::ostringstream os;
        for (std::size_t r = 0; r <= tri.max_n(); ++r) {
            for (std::size_t c = 0; c <= r; ++c)
                os << tri.at(r, c) << (c == r ? "" : " ");
            os << "\n";
        }
        emit(opts, os.str());
    }
    return kExitOk;
}

int run_oracle_check(unsigned n, bool allow_large, const CommonOpts& opts) {
    core::TriangleA tri = core::a_triangle(n);
    core::SeqTable bell = core::bell_table(n);
    core::SeqTable v = core::v_table(n);
    core::StirlingTables st = core::stirling_tables(n);
    json failures = json::array();
    for (unsigned m = 0; m <= n; ++m) {
        oracle::PartitionStats s = oracle::stats(m, allow_large);
        auto fail = [&](const std::string& what, const core::Nat& got,
                        const core::Nat& want) {
            failures.push_back(json{{"n", m},
                                    {"check", what},
                                    {"oracle", got.get_str()},
                                    {"exact", want.get_str()}});
        };
        if (s.total != bell[m]) fail("total=B_n", s.total, bell[m]);
        if (s.singleton_free != v[m])
            fail("singleton_free=V_n", s.singleton_free, v[m]);
        for (unsigned j = 0; j <= m; ++j) {
            core::Nat got = 0;
            if (auto it = s.by_block_count.find(j);
                it != s.by_block_count.end())
                got = it->second;
            if (got != st.second[m][j])
                fail("block_count=S(n,j) j=" + std::to_string(j), got,
                     st.second[m][j]);
        }
        if (m >= 1) {
            for (unsigned k = 0; k < m; ++k) {
                core::Nat got = 0;
                if (auto it = s.by_largest_singleton.find(k + 1);
                    it != s.by_largest_singleton.end())
                    got = it->second;
                if (got != tri.at(m - 1, k))
                    fail("largest_singleton=A(n-1,k) k=" + std::to_string(k),
                         got, tri.at(m - 1, k));
            }
        }
    }
    bool pass = failures.empty();
    json rep = make_report("oracle-check", json{{"n", n}},
                           pass ? "pass" : "fail", failures, nullptr);
    std::string fmt = opts.format.empty() ? "json" : opts.format;
    if (fmt == "text")
        emit(opts, std::string("oracle-check n<=") + std::to_string(n) + ": " +
                       (pass ? "pass" : "FAIL") + " (" +
                       std::to_string(failures.size()) + " failures)\n");
    else
        emit(opts, dump(rep));
    return pass ? kExitOk : kExitVerificationFailure;
}

json failure_json(const identities::IdentityCase& c) {
    return json{{"identity", identities::info(c.id).name},
                {"params", c.params.str()},
                {"lhs", c.lhs},
                {"rhs", c.rhs}};
}

int run_identities(int grid, int poly_grid, const CommonOpts& opts,
                   const std::string& corrupt_nk) {
    unsigned need = static_cast<unsigned>(3 * grid + 3);
    identities::Tables t = identities::Tables::build(need);
    if (!corrupt_nk.empty()) corrupt(t.tri, corrupt_nk);
    identities::CheckAllResult res =
        identities::check_all(t, grid, poly_grid);
    bool pass = res.failures.empty();
    std::string fmt = opts.format.empty() ? "text" : opts.format;
    if (fmt == "text") {
        std::ostringstream os;
        os << "catalog: " << identities::catalog().size() << " identities, "
           << res.failures.size() << " failures (" << res.cases_run
           << " cases, grid " << grid << ", polynomial grid " << poly_grid
           << ")\n";
        for (const auto& f : res.failures)
            os << "  FAIL " << identities::info(f.id).name << " "
               << f.params.str() << ": " << f.lhs << " != " << f.rhs << "\n";
        emit(opts, os.str());
    } else {
        json failures = json::array();
        for (const auto& f : res.failures) failures.push_back(failure_json(f));
        emit(opts, dump(make_report(
                       "identities",
                       json{{"grid", grid}, {"poly_grid", poly_grid}},
                       pass ? "pass" : "fail", failures,
                       json{{"cases_run", res.cases_run}})));
    }
    return pass ? kExitOk : kExitVerificationFailure;
}

const char* dobinski_verdict_name(identities::DobinskiVerdict v) {
    switch (v) {
        case identities::DobinskiVerdict::pass: return "pass";
        case identities::DobinskiVerdict::fail: return "fail";
        default: return "inconclusive";
    }
}

int run_dobinski(int n, int k, int sum_max, const CommonOpts& opts) {
    json data = json::array();
    bool all_pass = true;
    json failures = json::array();
    auto one = [&](unsigned nn, unsigned kk,
                   const identities::Tables& t) {
        auto r = identities::dobinski_enclosure(t, nn, kk);
        bool ok = r.verdict == identities::DobinskiVerdict::pass;
        all_pass = all_pass && ok;
        json e = {{"n", nn},
                  {"k", kk},
                  {"verdict", dobinski_verdict_name(r.verdict)},
                  {"isolated", r.unique ? r.isolated.get_str() : ""}};
        data.push_back(e);
        if (!ok) failures.push_back(e);
    };
    if (sum_max >= 0) {
        identities::Tables t =
            identities::Tables::build(static_cast<unsigned>(sum_max));
        for (int s = 0; s <= sum_max; ++s)
            for (int nn = 0; nn <= s; ++nn) one(nn, s - nn, t);
    } else {
        if (n < 0 || k < 0)
            throw CLI::ValidationError(
                "dobinski needs --n and --k, or --sum-max");
        identities::Tables t =
            identities::Tables::build(static_cast<unsigned>(n + k));
        one(n, k, t);
    }
    json params;
    if (sum_max >= 0)
        params = json{{"sum_max", sum_max}};
    else
        params = json{{"n", n}, {"k", k}};
    emit(opts, dump(make_report("dobinski", params,
                                all_pass ? "pass" : "fail", failures, data)));
    return all_pass ? kExitOk : kExitVerificationFailure;
}

json congruence_failures(const std::vector<modular::CongruenceFailure>& v) {
    json arr = json::array();
    for (const auto& f : v) {
        json e = {{"p", f.p}, {"relation", f.relation}};
        if (f.n >= 0) e["n"] = f.n;
        if (f.m >= 0) e["m"] = f.m;
        if (f.k >= 0) e["k"] = f.k;
        e["lhs"] = f.lhs;
        e["rhs"] = f.rhs;
        arr.push_back(e);
    }
    return arr;
}

int run_mod_verify(unsigned p, unsigned rows, const CommonOpts& opts) {
    modular::Prime pr(p);
    core::TriangleA tri = core::a_triangle(rows);
    // grids trimmed so every index fits inside `rows`
    unsigned g41 = (rows / 3 > p) ? std::min<unsigned>((rows - p) / 3, 8) : 0;
    unsigned m41 = std::min(g41, (rows - 2 * g41) / p);
    auto f41 = modular::verify_thm41(tri, pr, g41, m41, g41);
    unsigned n42 = rows / p > 1 ? rows / p - 1 : 0;
    unsigned m42 = std::min<unsigned>(n42, (rows - 1) / p);
    auto f42 = modular::verify_cor42(tri, pr, n42, m42);
    unsigned m43 = 0;
    while (true) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, m43 + 1);
        if (pw + 8 > rows) break;
        ++m43;
    }
    auto f43 = modular::verify_thm43(tri, pr, m43, 4, 4);
    json failures = json::array();
    for (auto* lst : {&f41, &f42, &f43})
        for (auto& e : congruence_failures(*lst)) failures.push_back(e);
    bool pass = failures.empty();
    json data = {{"thm41_grid", g41},
                 {"cor42_n_max", n42},
                 {"thm43_m_max", m43},
                 {"rows", rows}};
    emit(opts, dump(make_report("mod-verify", json{{"p", p}, {"rows", rows}},
                                pass ? "pass" : "fail", failures, data)));
    return pass ? kExitOk : kExitVerificationFailure;
}

int run_period(unsigned p, unsigned k, const std::string& dir_s, bool slow,
               const CommonOpts& opts) {
    modular::Prime pr(p);
    modular::Direction dir = parse_direction(dir_s);
    if (p > 7 && !slow_enabled(slow)) {
        std::cerr << "period: p > 7 is gated behind --slow (or AITKEN_SLOW=1)\n";
        return kExitUsage;
    }
    core::TriangleA tri = core::a_triangle(k + 210);
    modular::PeriodReport rep = modular::minimal_period(tri, pr, dir, k);
    json divisors = json::array();
    for (const auto& [d, ok] : rep.divisors_tested)
        divisors.push_back(json{{"divisor", d.get_str()}, {"is_period", ok}});
    bool pass = rep.claimed_period_holds;
    json data = {{"N_p", rep.N_p.get_str()},
                 {"claimed_period_holds", rep.claimed_period_holds},
                 {"minimal_period",
                  rep.minimal_known ? rep.minimal_period.get_str() : ""},
                 {"minimal_matches_N_p",
                  rep.minimal_known && rep.minimal_period == rep.N_p},
                 {"divisors_tested", divisors},
                 {"method", rep.method == modular::PeriodMethod::powmod
                                ? "powmod"
                                : "stream_compare"}};
    json failures = json::array();
    if (!pass)
        failures.push_back(json{{"p", p}, {"reason", "N_p is not a period"}});
    emit(opts, dump(make_report(
                   "period",
                   json{{"p", p}, {"k", k}, {"direction", direction_name(dir)}},
                   pass ? "pass" : "fail", failures, data)));
    return pass ? kExitOk : kExitVerificationFailure;
}

int run_zero_string(unsigned p, unsigned k, const std::string& dir_s,
                    const CommonOpts& opts) {
    modular::Prime pr(p);
    modular::Direction dir = parse_direction(dir_s);
    core::TriangleA tri = core::a_triangle(k + 210);
    modular::ZeroStringReport rep = modular::zero_string(tri, pr, k, dir);
    json data = {{"N_p", rep.N_p.get_str()},
                 {"predicted_start_residue", rep.predicted_start_residue},
                 {"start", rep.start},
                 {"length_found", rep.length_found},
                 {"runs_in_period", rep.runs_in_period}};
    json failures = json::array();
    if (!rep.pass)
        failures.push_back(
            json{{"p", p},
                 {"k", k},
                 {"reason", "no zero run at the predicted residue"}});
    emit(opts, dump(make_report(
                   "zero-string",
                   json{{"p", p}, {"k", k}, {"direction", direction_name(dir)}},
                   rep.pass ? "pass" : "fail", failures, data)));
    return rep.pass ? kExitOk : kExitVerificationFailure;
}

int run_report(int grid, const CommonOpts& opts) {
    std::ostringstream os;
    bool all_pass = true;

    identities::Tables t = identities::Tables::build(3 * grid + 3);
    auto ids = identities::check_all(t, grid, std::min(grid, 6));
    all_pass = all_pass && ids.failures.empty();
    os << "identity catalog: " << identities::catalog().size()
       << " identities, " << ids.cases_run << " cases, "
       << ids.failures.size() << " failures\n";

    core::TriangleA tri = core::a_triangle(215);
    for (unsigned p : {2u, 3u, 5u}) {
        modular::Prime pr(p);
        auto f41 = modular::verify_thm41(tri, pr, 4, 4, 4);
        auto f42 = modular::verify_cor42(tri, pr, 8, 4);
        auto f43 = modular::verify_thm43(tri, pr, 2, 3, 3);
        std::size_t nf = f41.size() + f42.size() + f43.size();
        all_pass = all_pass && nf == 0;
        os << "congruences mod " << p << ": "
           << (nf == 0 ? "all hold" : std::to_string(nf) + " failures")
           << "\n";
        auto rep =
            modular::minimal_period(tri, pr, modular::Direction::n_dir, 1);
        os << "minimal period mod " << p << " (k=1, n-direction): "
           << rep.minimal_period << " (N_p = " << rep.N_p << ")\n";
    }

    // Biconditional zero-window checks, both directions. The k-direction
    // variant is an empirical check only; no proof is relied upon.
    for (unsigned p : {2u, 3u, 5u}) {
        modular::Prime pr(p);
        bool ok = true;
        for (unsigned n = 0; n <= 20 && ok; ++n)
            for (unsigned k = 0; k <= 3 && ok; ++k)
                ok = modular::verify_thm47(tri, pr, n, k) &&
                     modular::verify_thm49(tri, pr, n, k);
        all_pass = all_pass && ok;
        os << "zero-window biconditionals mod " << p << " (n,k <= 20,3): "
           << (ok ? "hold" : "FAIL")
           << (p == 2 ? "  [k-direction: empirical only]" : "") << "\n";
    }

    // Average largest singleton of a partition of [n+1], exact closed form;
    // monotonicity is reported, not asserted.
    os << "average largest singleton ((n+2)B_{n+1} - V_{n+3}) / B_{n+1}:\n";
    core::SeqTable bell = core::bell_table(16);
    core::SeqTable v = core::v_table(16);
    mpq_class prev(0);
    bool increasing = true;
    for (unsigned n = 0; n <= 12; ++n) {
        mpq_class avg(mpz_class((n + 2) * bell[n + 1] - v[n + 3]),
                      bell[n + 1]);
        avg.canonicalize();
        if (n > 0 && avg <= prev) increasing = false;
        os << "  n=" << n << ": " << avg << " ~ " << avg.get_d() << "\n";
        prev = avg;
    }
    os << "observed monotone increasing for n <= 12: "
       << (increasing ? "yes" : "no") << "\n";
    os << "overall: " << (all_pass ? "pass" : "FAIL") << "\n";
    emit(opts, os.str());
    return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, identity checks, and mod-p analysis of the "
                 "largest-singleton partition triangle"};
    app.require_subcommand(1);
    CommonOpts common;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        cmd->add_option("--out", common.out_path, "Write output to PATH");
    };

    int rc = kExitOk;
    unsigned arg_n = 7, arg_p = 2, arg_k = 0, arg_rows = 60;
    int arg_grid = 8, arg_poly_grid = 6, arg_dn = -1, arg_dk = -1,
        arg_sum_max = -1;
    bool arg_slow = false, arg_allow_large = false;
    std::string arg_dir = "n", arg_corrupt;

    auto* c_table = app.add_subcommand("table", "Emit the A-triangle");
    c_table->add_option("--n", arg_n, "Largest row index")->required();
    c_table->add_option("--corrupt-entry", arg_corrupt)->group("");
    add_common(c_table);
    c_table->callback([&] { rc = run_table(arg_n, common, arg_corrupt); });

    auto* c_oracle =
        app.add_subcommand("oracle-check", "Brute-force cross-check");
    c_oracle->add_option("--n", arg_n, "Check all sizes up to n")
        ->default_val(10);
    c_oracle->add_flag("--allow-large", arg_allow_large,
                       "Lift the enumeration cap");
    add_common(c_oracle);
    c_oracle->callback(
        [&] { rc = run_oracle_check(arg_n, arg_allow_large, common); });

    auto* c_ids = app.add_subcommand("identities", "Run the identity catalog");
    c_ids->add_option("--grid", arg_grid, "Integer-parameter grid bound")
        ->default_val(8);
    c_ids->add_option("--poly-grid", arg_poly_grid,
                      "Polynomial-identity grid bound")
        ->default_val(6);
    c_ids->add_option("--corrupt-entry", arg_corrupt)->group("");
    add_common(c_ids);
    c_ids->callback([&] {
        rc = run_identities(arg_grid, arg_poly_grid, common, arg_corrupt);
    });

    auto* c_dob = app.add_subcommand("dobinski",
                                     "Series enclosure integer isolation");
    c_dob->add_option("--n", arg_dn, "Row offset");
    c_dob->add_option("--k", arg_dk, "Column");
    c_dob->add_option("--sum-max", arg_sum_max, "Run all n+k <= bound");
    add_common(c_dob);
    c_dob->callback(
        [&] { rc = run_dobinski(arg_dn, arg_dk, arg_sum_max, common); });

    auto* c_mod = app.add_subcommand("mod-verify", "Congruence-theorem grids");
    c_mod->add_option("--p", arg_p, "Prime modulus")->required();
    c_mod->add_option("--rows", arg_rows, "Exact triangle size")
        ->default_val(60);
    add_common(c_mod);
    c_mod->callback([&] { rc = run_mod_verify(arg_p, arg_rows, common); });

    auto* c_period = app.add_subcommand("period", "Minimal-period analysis");
    c_period->add_option("--p", arg_p, "Prime modulus")->required();
    c_period->add_option("--k", arg_k, "Fixed index")->default_val(1);
    c_period->add_option("--direction", arg_dir, "Stream direction: n or k")
        ->check(CLI::IsMember({"n", "k"}));
    c_period->add_flag("--slow", arg_slow, "Enable p in {11,13}");
    add_common(c_period);
    c_period->callback(
        [&] { rc = run_period(arg_p, arg_k, arg_dir, arg_slow, common); });

    auto* c_zero = app.add_subcommand("zero-string", "Locate the zero run");
    c_zero->add_option("--p", arg_p, "Prime modulus")->required();
    c_zero->add_option("--k", arg_k, "Fixed index")->default_val(1);
    c_zero->add_option("--direction", arg_dir, "Stream direction: n or k")
        ->check(CLI::IsMember({"n", "k"}));
    add_common(c_zero);
    c_zero->callback(
        [&] { rc = run_zero_string(arg_p, arg_k, arg_dir, common); });

    auto* c_rep = app.add_subcommand("report", "Combined text summary");
    c_rep->add_option("--grid", arg_grid, "Identity grid bound")
        ->default_val(8);
    add_common(c_rep);
    c_rep->callback([&] { rc = run_report(arg_grid, common); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
