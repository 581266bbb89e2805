// glperm: decompositions of k[GL_n(F_q)/GL_{n-m}(F_q)] by zigzag path counting,
// stability reports, and brute-force oracle counts.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or guard error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "glperm/branching.hpp"
#include "glperm/degrees.hpp"
#include "glperm/io.hpp"
#include "glperm/oracle/oracle.hpp"
#include "glperm/stability.hpp"
#include "glperm/verify.hpp"

namespace {

using glperm::BigInt;
using glperm::io::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::string format;  // empty: the command's default
    std::string output;
    std::optional<unsigned> threads;
    bool strict = false;

    unsigned thread_count() const {
        if (threads) return std::max(1u, *threads);
        if (const char* env = std::getenv("GLPERM_THREADS")) {
            try {
                const int v = std::stoi(env);
                if (v > 0) return static_cast<unsigned>(v);
            } catch (const std::exception&) {
            }
            throw UsageError(std::string("GLPERM_THREADS must be a positive integer, got '") + env + "'");
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void error_exit_json(const std::string& kind, const std::string& reason) {
    std::cerr << json{{"error", kind}, {"reason", reason}}.dump() << "\n";
}

void require_q(std::uint64_t q) {
    if (q < 2) throw glperm::BadParameters("q must be a prime power, got " + std::to_string(q));
    glperm::require_prime_power(q);
}

void require_oracle_q(std::uint64_t q) {
    if (!glperm::oracle::is_supported_field(q))
        throw glperm::BadParameters("oracle commands need q in {2,3,4,5,7,8,9}, got " + std::to_string(q));
}

std::string verdict(const std::optional<bool>& ok) { return !ok ? "skipped" : (*ok ? "pass" : "fail"); }

// decompose ------------------------------------------------------------------

struct DecomposeArgs {
    int m = -1;
    std::optional<int> n;
    std::uint64_t q = 0;
};

int run_decompose(const Global& g, const DecomposeArgs& a) {
    require_q(a.q);
    if (a.m < 0) throw glperm::BadParameters("--m must be non-negative");
    const int n = a.n.value_or(3 * a.m);
    const glperm::Decomposition dec = glperm::decompose_perm_module(n, a.m, a.q);

    const BigInt expected_dim = glperm::gl_order(n, a.q) / glperm::gl_order(n - a.m, a.q);
    const bool dim_ok = dec.dimension() == expected_dim;
    std::optional<bool> sq_ok;
    std::string sq_note;
    std::optional<std::size_t> cosets;
    if (glperm::oracle::is_supported_field(a.q)) {
        try {
            cosets = glperm::oracle::double_cosets_gl(n, a.m, a.q);
            sq_ok = dec.sum_squares() == *cosets;
        } catch (const glperm::GuardExceeded& e) {
            sq_note = e.what();
        }
    } else {
        sq_note = "no field table for this q";
    }

    Output out(g.output);
    auto& os = out.stream();
    if (g.format == "json") {
        json j = glperm::io::to_json(dec);
        j["checks"]["dim_expected"] = expected_dim.str();
        j["checks"]["dim_identity"] = verdict(dim_ok);
        j["checks"]["sum_sq_oracle"] = cosets ? json(*cosets) : json(nullptr);
        j["checks"]["sum_sq_identity"] = verdict(sq_ok);
        if (!sq_note.empty()) j["checks"]["sum_sq_note"] = sq_note;
        os << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        os << glperm::io::to_csv(dec);
    } else {
        os << "n=" << n << " m=" << a.m << " q=" << a.q << "\n" << glperm::io::to_table(dec);
        os << "sum c^2 class_size = " << dec.sum_squares().str();
        if (cosets) os << ", oracle double cosets = " << *cosets;
        os << " [" << verdict(sq_ok) << "]" << (sq_note.empty() ? "" : " (" + sq_note + ")") << "\n";
        os << "sum c deg class_size = " << dec.dimension().str() << ", |G_n|/|G_{n-m}| = " << expected_dim.str()
           << " [" << verdict(dim_ok) << "]\n";
    }
    if (!dim_ok || (sq_ok && !*sq_ok)) return kCheckFailed;
    if (g.strict && !sq_ok) return kCheckFailed;
    return kOk;
}

// stability ------------------------------------------------------------------

struct StabilityArgs {
    int m = -1;
    std::uint64_t q = 0;
    std::optional<int> n_max;
};

int run_stability(const Global& g, const StabilityArgs& a) {
    require_q(a.q);
    if (a.m < 0) throw glperm::BadParameters("--m must be non-negative");
    const int n_max = a.n_max.value_or(3 * a.m + 3);
    const auto rep = glperm::empirical_stability_degree(a.m, a.q, n_max, g.thread_count());
    Output out(g.output);
    auto& os = out.stream();
    if (g.format == "json")
        os << glperm::io::to_json(rep).dump(2) << "\n";
    else if (g.format == "csv")
        os << glperm::io::to_csv(rep);
    else
        os << glperm::io::to_table(rep);
    return rep.bound_satisfied ? kOk : kCheckFailed;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
    bool quick = false;
    bool full = false;
    std::string suite;
    std::optional<std::uint64_t> q;
    std::optional<int> n_max;
};

std::vector<glperm::verify::CheckResult> run_suite(glperm::verify::Context& ctx, const VerifyArgs& a,
                                                   const std::function<void(const glperm::verify::CheckResult&)>& report) {
    namespace v = glperm::verify;
    std::vector<v::CheckResult> out;
    auto add = [&](v::CheckResult r) {
        report(r);
        out.push_back(std::move(r));
    };
    const std::string& s = a.suite;
    if (s == "census") {
        add(v::census_gl3_f2(ctx));
    } else if (s == "degrees") {
        std::vector<std::pair<int, std::uint64_t>> cases;
        if (a.q) {
            require_q(*a.q);
            for (int n = 1; n <= a.n_max.value_or(4); ++n) cases.emplace_back(n, *a.q);
        } else {
            cases = v::default_census_cases();
            if (a.n_max) std::erase_if(cases, [&](const auto& c) { return c.first > *a.n_max; });
        }
        for (const auto& [n, q] : cases)
            if (n > 5 || q > 5) throw glperm::GuardExceeded("degree census limited to n <= 5 and q <= 5");
        add(v::degree_census_check(ctx, cases));
    } else if (s == "regular") {
        add(v::regular_representation(ctx));
    } else if (s == "cross") {
        add(v::oracle_cross_validation(ctx, v::cross_validation_cases()));
        add(v::dimension_identity(ctx));
    } else if (s == "stability") {
        std::vector<std::pair<int, std::uint64_t>> cases = v::default_stability_cases();
        if (a.q) std::erase_if(cases, [&](const auto& c) { return c.second != *a.q; });
        add(v::stability_instances(ctx, cases));
        add(v::support_bounds(ctx));
    } else if (s == "dp") {
        add(v::dp_vs_concrete(ctx));
    } else if (s == "dims") {
        add(v::dimension_polynomial(ctx));
    } else if (s == "weakstab") {
        add(v::weak_stability(ctx));
    } else {
        throw UsageError("unknown suite '" + s + "' (census, degrees, regular, cross, stability, dp, dims, weakstab)");
    }
    return out;
}

int run_verify(Global g, const VerifyArgs& a) {
    namespace v = glperm::verify;
    if (g.format.empty()) g.format = "json";
    if ((a.quick ? 1 : 0) + (a.full ? 1 : 0) + (a.suite.empty() ? 0 : 1) > 1)
        throw UsageError("choose one of --quick, --full, --suite");
    v::Options opts;
    opts.threads = g.thread_count();
    v::Context ctx(opts);
    Output out(g.output);
    auto& os = out.stream();
    if (g.format == "csv") os << glperm::io::csv_row({"id", "name", "status", "seconds", "detail"});
    auto report = [&](const v::CheckResult& r) {
        if (g.format == "csv") {
            std::ostringstream secs;
            secs << r.seconds;
            os << glperm::io::csv_row({std::to_string(r.id), r.name, v::status_name(r.status), secs.str(), r.detail});
            os.flush();
        } else if (g.format == "table") {
            os << "[" << v::status_name(r.status) << "] " << r.id << " " << r.name << " (" << r.seconds << " s)";
            if (!r.detail.empty()) os << ": " << r.detail;
            os << std::endl;
        } else {
            os << json{{"id", r.id},
                       {"name", r.name},
                       {"status", v::status_name(r.status)},
                       {"detail", r.detail},
                       {"seconds", r.seconds}}
                      .dump()
               << std::endl;
        }
    };
    std::vector<v::CheckResult> results;
    if (!a.suite.empty())
        results = run_suite(ctx, a, report);
    else if (a.full)
        results = v::run_full(ctx, report);
    else
        results = v::run_quick(ctx, report);
    bool ok = v::all_passed(results);
    if (g.strict)
        for (const auto& r : results) ok = ok && r.status != v::Status::Skipped;
    return ok ? kOk : kCheckFailed;
}

// zigzag ---------------------------------------------------------------------

struct ZigzagArgs {
    std::string from, to;
    std::uint64_t q = 0;
    std::optional<int> m;
};

int run_zigzag(const Global& g, const ZigzagArgs& a) {
    require_q(a.q);
    glperm::LabelFunction nu, mu;
    try {
        nu = glperm::io::parse_label(a.from);
        mu = glperm::io::parse_label(a.to);
    } catch (const glperm::io::ParseError& e) {
        throw UsageError(e.what());
    }
    const int m = a.m.value_or(mu.norm() - nu.norm());
    const BigInt count = glperm::count_zigzag(nu, mu, m, a.q);
    Output out(g.output);
    if (g.format == "json")
        out.stream() << json{{"from", nu.to_string()}, {"to", mu.to_string()}, {"m", m}, {"q", a.q}, {"value", glperm::io::integer_json(count)}}
                            .dump()
                     << "\n";
    else
        out.stream() << count.str() << "\n";
    return kOk;
}

// dims -----------------------------------------------------------------------

struct DimsArgs {
    int m = -1;
    std::uint64_t q = 0;
    std::optional<int> n_max;
};

int run_dims(const Global& g, const DimsArgs& a) {
    require_q(a.q);
    if (a.m < 0) throw glperm::BadParameters("--m must be non-negative");
    const int n_max = a.n_max.value_or(a.m + 4);
    if (n_max < a.m) throw glperm::BadParameters("--n-max must be at least m");
    const glperm::QPolynomial p = glperm::p_polynomial(a.m, a.q);
    bool ok = true;
    json rows = json::array();
    std::vector<std::vector<std::string>> table{{"n", "P(q^n)", "formula", "oracle"}};
    for (int n = a.m; n <= n_max; ++n) {
        const glperm::BigRational v = p.evaluate(glperm::BigRational(glperm::pow(BigInt(a.q), static_cast<unsigned>(n))));
        const BigInt formula = glperm::vic_hom_count(a.m, n, a.q);
        std::optional<std::size_t> enumerated;
        if (glperm::oracle::is_supported_field(a.q)) {
            try {
                enumerated = glperm::oracle::vic_count(a.m, n, a.q);
            } catch (const glperm::GuardExceeded&) {
            }
        }
        ok = ok && v == glperm::BigRational(formula) && (!enumerated || BigInt(*enumerated) == formula);
        rows.push_back({{"n", n},
                        {"p_value", glperm::to_string(v)},
                        {"vic_hom_count", formula.str()},
                        {"oracle", enumerated ? json(*enumerated) : json(nullptr)}});
        const std::string pv = boost::multiprecision::denominator(v) == 1 ? boost::multiprecision::numerator(v).str()
                                                                          : glperm::to_string(v);
        table.push_back({std::to_string(n), pv, formula.str(), enumerated ? std::to_string(*enumerated) : "-"});
    }
    Output out(g.output);
    auto& os = out.stream();
    if (g.format == "json") {
        os << json{{"m", a.m}, {"q", a.q}, {"polynomial", glperm::io::to_json(p)}, {"rows", rows}}.dump(2) << "\n";
    } else if (g.format == "csv") {
        for (const auto& r : table) os << glperm::io::csv_row(r);
    } else {
        os << "P(T) = " << p.to_string("T") << "\n" << glperm::io::format_table(table);
    }
    return ok ? kOk : kCheckFailed;
}

// oracle ---------------------------------------------------------------------

struct OracleArgs {
    int n = -1, m = -1, l = -1, r_max = -1;
    std::uint64_t q = 0;
};

void print_value(const Global& g, const json& value, const std::string& plain) {
    Output out(g.output);
    if (g.format == "json")
        out.stream() << json{{"value", value}}.dump() << "\n";
    else
        out.stream() << plain;
}

int run_oracle_double_cosets(const Global& g, const OracleArgs& a) {
    require_oracle_q(a.q);
    if (a.m < 0 || a.n < a.m) throw glperm::BadParameters("need 0 <= m <= n");
    const std::size_t v = glperm::oracle::double_cosets_gl(a.n, a.m, a.q);
    print_value(g, v, std::to_string(v) + "\n");
    return kOk;
}

int run_oracle_weakstab(const Global& g, const OracleArgs& a) {
    require_oracle_q(a.q);
    if (a.l < 0 || a.m < 0 || a.r_max < 0) throw glperm::BadParameters("need l, m, r-max >= 0");
    const int r_min = std::max(0, a.m - a.l);
    if (a.r_max < r_min) throw glperm::BadParameters("need l + r-max >= m");
    json values = json::array();
    std::string plain;
    for (int r = r_min; r <= a.r_max; ++r) {
        const std::size_t v = glperm::oracle::weakstab_cosets(a.l, a.m, r, a.q);
        values.push_back({{"r", r}, {"value", v}});
        plain += std::to_string(v) + "\n";
    }
    print_value(g, values, plain);
    return kOk;
}

int run_oracle_classes(const Global& g, const OracleArgs& a) {
    require_oracle_q(a.q);
    if (a.n < 1) throw glperm::BadParameters("need n >= 1");
    const std::size_t v = glperm::oracle::conjugacy_class_count(a.n, a.q);
    print_value(g, v, std::to_string(v) + "\n");
    return kOk;
}

int run_oracle_vic_count(const Global& g, const OracleArgs& a) {
    require_oracle_q(a.q);
    if (a.m < 0 || a.n < a.m) throw glperm::BadParameters("need 0 <= m <= n");
    const std::size_t v = glperm::oracle::vic_count(a.m, a.n, a.q);
    print_value(g, v, std::to_string(v) + "\n");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose k[GL_n(F_q)/GL_{n-m}(F_q)] by zigzag path counting"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "json, csv or table (default table; json lines for verify)")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--output,-o", g.output, "Write to this file instead of standard output");
    app.add_option("--threads", g.threads, "Worker threads (default: GLPERM_THREADS, then hardware concurrency)");
    app.add_flag("--strict", g.strict, "Treat skipped oracle checks as failures");

    std::function<int()> action;

    DecomposeArgs dec;
    auto* c_dec = app.add_subcommand("decompose", "Decomposition of k[G_n/G_{n-m}] in stable coordinates");
    c_dec->add_option("--m", dec.m)->required();
    c_dec->add_option("--n", dec.n, "Default 3m");
    c_dec->add_option("--q", dec.q)->required();
    c_dec->callback([&] { action = [&] { return run_decompose(g, dec); }; });

    StabilityArgs stab;
    auto* c_stab = app.add_subcommand("stability", "Decompositions for n = m..n_max and the observed stability degree");
    c_stab->add_option("--m", stab.m)->required();
    c_stab->add_option("--q", stab.q)->required();
    c_stab->add_option("--n-max", stab.n_max, "Default 3m + 3");
    c_stab->callback([&] { action = [&] { return run_stability(g, stab); }; });

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "Run the acceptance checks");
    c_ver->add_flag("--quick", ver.quick, "Census and m <= 1 identities (default)");
    c_ver->add_flag("--full", ver.full, "Every check");
    c_ver->add_option("--suite", ver.suite, "census, degrees, regular, cross, stability, dp, dims or weakstab");
    c_ver->add_option("--q", ver.q, "Restrict the suite to this q");
    c_ver->add_option("--n-max", ver.n_max, "Largest n for the degrees suite");
    c_ver->callback([&] { action = [&] { return run_verify(g, ver); }; });

    ZigzagArgs zz;
    auto* c_zz = app.add_subcommand("zigzag", "Count zigzag paths between two labels");
    c_zz->add_option("--from", zz.from, "Label, e.g. \"ι:(2); 2:(1)\"; empty for the empty label")->required();
    c_zz->add_option("--to", zz.to, "Label")->required();
    c_zz->add_option("--q", zz.q)->required();
    c_zz->add_option("--m", zz.m, "Number of steps (default: norm difference)");
    c_zz->callback([&] { action = [&] { return run_zigzag(g, zz); }; });

    DimsArgs dims;
    auto* c_dims = app.add_subcommand("dims", "dim P(m)(F_q^n) from the polynomial, the formula and enumeration");
    c_dims->add_option("--m", dims.m)->required();
    c_dims->add_option("--q", dims.q)->required();
    c_dims->add_option("--n-max", dims.n_max, "Default m + 4");
    c_dims->callback([&] { action = [&] { return run_dims(g, dims); }; });

    OracleArgs orc;
    auto* c_orc = app.add_subcommand("oracle", "Brute-force counts over explicit matrices");
    c_orc->require_subcommand(1);
    auto* o_dc = c_orc->add_subcommand("double-cosets", "|G_{n-m} \\ G_n / G_{n-m}|");
    o_dc->add_option("--n", orc.n)->required();
    o_dc->add_option("--m", orc.m)->required();
    o_dc->add_option("--q", orc.q)->required();
    o_dc->callback([&] { action = [&] { return run_oracle_double_cosets(g, orc); }; });
    auto* o_ws = c_orc->add_subcommand("weakstab", "|L_{l,r} \\ G_{l+r} / L_{m,l+r-m}| for r up to r-max");
    o_ws->add_option("--l", orc.l)->required();
    o_ws->add_option("--m", orc.m)->required();
    o_ws->add_option("--r-max", orc.r_max)->required();
    o_ws->add_option("--q", orc.q)->required();
    o_ws->callback([&] { action = [&] { return run_oracle_weakstab(g, orc); }; });
    auto* o_cl = c_orc->add_subcommand("classes", "Conjugacy classes of GL_n(F_q)");
    o_cl->add_option("--n", orc.n)->required();
    o_cl->add_option("--q", orc.q)->required();
    o_cl->callback([&] { action = [&] { return run_oracle_classes(g, orc); }; });
    auto* o_vc = c_orc->add_subcommand("vic-count", "Enumerated |Hom_VIC(F_q^m, F_q^n)|");
    o_vc->add_option("--m", orc.m)->required();
    o_vc->add_option("--n", orc.n)->required();
    o_vc->add_option("--q", orc.q)->required();
    o_vc->callback([&] { action = [&] { return run_oracle_vic_count(g, orc); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const glperm::GuardExceeded& e) {
        error_exit_json("guard_exceeded", e.what());
        return kUsage;
    } catch (const glperm::BoundExceeded& e) {
        error_exit_json("guard_exceeded", e.what());
        return kUsage;
    } catch (const glperm::VerificationFailure& e) {
        error_exit_json("verification_failure", e.what());
        return kCheckFailed;
    } catch (const UsageError& e) {
        error_exit_json("usage", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        error_exit_json("bad_parameters", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        error_exit_json("internal", e.what());
        return kCheckFailed;
    }
}
