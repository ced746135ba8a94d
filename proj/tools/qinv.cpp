// qinv: exact computations with m-quasi-invariant polynomials of S3 in three
// variables over F_2, F_3 and Q. See README.md for the command reference.

#include "qinv/generators.hpp"
#include "qinv/parse.hpp"
#include "qinv/quasi.hpp"
#include "qinv/renxu.hpp"
#include "qinv/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    unsigned p = 0;
    long long m = -1;
    long long m_half = -1;
    unsigned degree = 0;
    unsigned terms = 0;
    unsigned max_degree = 0;
    unsigned max_m = 12;
    unsigned budget = 0;
    std::string poly_text;
    std::string format;
    std::string compare = "empirical";
    bool verify = false;
};

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

qinv::QuasiOrder order_from_options(const Options& opt) {
    if (opt.p != 2 && opt.p != 3) usage_error("--p must be 2 or 3");
    if (opt.m >= 0 && opt.m_half >= 0) usage_error("--m and --m-half are mutually exclusive");
    if (opt.m < 0 && opt.m_half < 0) usage_error("one of --m or --m-half is required");
    if (opt.m_half >= 0) {
        if (opt.m_half % 2 == 0)
            usage_error("--m-half takes the odd value of 2m; use --m for integers");
        if (opt.p != 2) usage_error("--m-half requires --p 2");
        return qinv::QuasiOrder(unsigned(opt.m_half), 2);
    }
    return qinv::QuasiOrder::integral(unsigned(opt.m), opt.p);
}

std::string series_str(const qinv::TruncatedSeries& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.coefficients[i]);
    }
    return out + "]";
}

json series_json(const qinv::TruncatedSeries& s) {
    json a = json::array();
    for (long long c : s.coefficients) a.push_back(c);
    return a;
}

qinv::PolyFp parse_poly_flag(const std::string& text, unsigned p) {
    try {
        return qinv::parse_poly(text, qinv::FpRing{p});
    } catch (const qinv::parse_error& e) {
        usage_error(std::string("--poly: ") + e.what());
    }
}

int run_dim(const Options& opt) {
    auto m = order_from_options(opt);
    unsigned dim = qinv::dim_component(m, opt.degree);
    if (opt.format == "json") {
        json j{{"p", opt.p}, {"m2", m.twice_m()}, {"degree", opt.degree}, {"dimension", dim}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "p=" << opt.p << " m=" << m.m_str() << " degree=" << opt.degree
                  << " dimension=" << dim << "\n";
    }
    return kExitOk;
}

int run_hilbert(const Options& opt) {
    auto m = order_from_options(opt);
    unsigned terms = opt.terms ? opt.terms : 3 * m.twice_m() + 10;
    auto closed = qinv::series_closed_form(m, terms);

    std::optional<qinv::TruncatedSeries> char0;
    if (m.is_integral()) char0 = qinv::series_char0(m.m_integer(), terms);

    std::optional<qinv::TruncatedSeries> empirical;
    if (opt.compare == "empirical")
        empirical = qinv::series_empirical(m, terms, opt.budget);
    else if (opt.compare != "char0" && opt.compare != "none")
        usage_error("--compare must be empirical, char0 or none");

    bool match = true;
    if (opt.compare == "empirical")
        match = (closed == *empirical);
    else if (opt.compare == "char0")
        match = char0 && closed == *char0;

    if (opt.format == "json") {
        json j;
        j["closed_form"] = series_json(closed);
        j["empirical"] = empirical ? series_json(*empirical) : json(nullptr);
        j["char0"] = char0 ? series_json(*char0) : json(nullptr);
        j["match"] = match;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "closed_form " << series_str(closed)
                  << (m.is_integral() ? "" : " (extended: half-integer m)") << "\n";
        if (empirical) std::cout << "empirical   " << series_str(*empirical) << "\n";
        if (char0) std::cout << "char0       " << series_str(*char0) << "\n";
        if (opt.compare != "none")
            std::cout << "status " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitCheckFailure;
}

int run_check(const Options& opt) {
    if (opt.poly_text.empty()) usage_error("--poly is required for check");
    auto m = order_from_options(opt);
    auto k = parse_poly_flag(opt.poly_text, opt.p);
    if (k.is_zero()) usage_error("--poly: the zero polynomial has no quasi-order");
    auto q = qinv::quasi_order(k);
    bool invariant = !q || *q >= m.required_exponent();
    if (opt.format == "json") {
        json j;
        j["quasi_order"] = q ? json(*q) : json(nullptr);
        j["m_quasi_invariant"] = invariant;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "quasi_order=" << (q ? std::to_string(*q) : "infinity")
                  << ", m-quasi-invariant: " << (invariant ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int run_generators(const Options& opt) {
    auto m = order_from_options(opt);
    qinv::GeneratorSet set = opt.p == 2 ? qinv::char2_generator_set(m)
                                        : qinv::char3_generator_set(m);
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& e : set.entries)
            list.push_back(json{{"poly", qinv::format_poly(e.poly)},
                                {"degree", e.degree},
                                {"rep", e.rep}});
        std::cout << list.dump() << "\n";
    } else {
        for (const auto& e : set.entries)
            std::cout << "degree=" << e.degree << " rep=" << e.rep
                      << " poly=" << qinv::format_poly(e.poly) << "\n";
    }
    return kExitOk;
}

int run_counterexample(const Options& opt) {
    if (opt.m < 0) usage_error("--m is required for counterexample");
    auto spec = qinv::minimal_counterexample(unsigned(opt.m));
    std::string format = opt.format.empty() ? "json" : opt.format;
    json j;
    if (!spec) {
        j["none"] = true;
    } else {
        j["a"] = spec->a;
        j["k"] = spec->k;
        j["b"] = spec->b;
        j["degree"] = spec->degree;
        try {
            j["poly"] = qinv::format_poly(spec->polynomial());
        } catch (const std::domain_error&) {
            j["poly"] = nullptr; // P_k beyond the compute budget
        }
    }
    if (format == "json") {
        std::cout << j.dump() << "\n";
    } else if (!spec) {
        std::cout << "none (m not in X)\n";
    } else {
        std::cout << "a=" << spec->a << " k=" << spec->k << " b=" << spec->b
                  << " degree=" << spec->degree << "\n";
    }
    return kExitOk;
}

const char* phase_str(unsigned m) {
    if (!qinv::in_X(m)) return "closed";
    return qinv::staircase_info(m).phase == qinv::StaircasePhase::flat ? "flat" : "climbing";
}

int run_staircase(const Options& opt) {
    struct Row {
        unsigned m, lower, upper;
        bool in_x;
        const char* phase;
    };
    std::vector<Row> rows;
    for (unsigned m = 0; m <= opt.max_m; ++m) {
        auto order = qinv::QuasiOrder::integral(m, 3);
        unsigned lower = qinv::lowest_generator_degree(order);
        rows.push_back({m, lower, 6 * m + 3 - lower, qinv::in_X(m), phase_str(m)});
    }

    if (opt.verify) {
        for (const Row& r : rows) {
            std::fprintf(stderr, "verify m=%u d_low=%u\n", r.m, r.lower);
            auto order = qinv::QuasiOrder::integral(r.m, 3);
            auto closed = qinv::series_closed_form(order, r.lower + 1);
            for (unsigned d = 0; d <= r.lower; ++d) {
                unsigned dim = qinv::dim_component(order, d);
                if (static_cast<long long>(dim) != closed.coefficients[d]) {
                    std::cerr << "oracle mismatch at m=" << r.m << " d=" << d << ": dim "
                              << dim << " vs closed form " << closed.coefficients[d] << "\n";
                    return kExitCheckFailure;
                }
            }
        }
    }

    if (opt.format == "csv") {
        std::cout << "m,lower,upper,in_X,phase\n";
        for (const Row& r : rows)
            std::cout << r.m << "," << r.lower << "," << r.upper << ","
                      << (r.in_x ? "true" : "false") << "," << r.phase << "\n";
    } else if (opt.format == "json") {
        json list = json::array();
        for (const Row& r : rows)
            list.push_back(json{{"m", r.m},
                                {"lower", r.lower},
                                {"upper", r.upper},
                                {"in_X", r.in_x},
                                {"phase", r.phase}});
        std::cout << list.dump() << "\n";
    } else {
        std::cout << "   m lower upper in_X phase\n";
        for (const Row& r : rows) {
            std::printf("%4u %5u %5u %4s %s\n", r.m, r.lower, r.upper,
                        r.in_x ? "yes" : "no", r.phase);
        }
    }
    return kExitOk;
}

int run_classify(const Options& opt) {
    if (opt.poly_text.empty()) usage_error("--poly is required for classify");
    auto k = parse_poly_flag(opt.poly_text, opt.p);
    if (k.is_zero()) usage_error("--poly: cannot classify the zero polynomial");
    qinv::Classification c = qinv::classify_module(k);
    if (opt.format == "json") {
        json j{{"dim", c.dim},
               {"fixed_dim", c.fixed_dim},
               {"sign_dim", c.sign_dim},
               {"label", c.label}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "dim=" << c.dim << " fixed_dim=" << c.fixed_dim
                  << " sign_dim=" << c.sign_dim << " label=" << c.label << "\n";
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    auto m = order_from_options(opt);
    unsigned max_degree = opt.max_degree ? opt.max_degree : 3 * m.twice_m() + 6;
    qinv::GeneratorSet set = opt.p == 2 ? qinv::char2_generator_set(m)
                                        : qinv::char3_generator_set(m);
    auto report = qinv::verify_free_generation(set, max_degree);
    if (opt.format == "json") {
        json j;
        j["ok"] = report.ok;
        j["checked_to"] = report.checked_to;
        j["failure"] = report.ok ? json(nullptr) : json(report.failure);
        std::cout << j.dump() << "\n";
    } else {
        if (report.ok) {
            std::cout << "free generation verified to degree " << report.checked_to << " ("
                      << set.module_gens.size() << " module generators)\n";
        } else {
            std::cout << "FAILURE: " << report.failure << "\n";
        }
    }
    return report.ok ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact m-quasi-invariant polynomials of S3 in three variables"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_p) {
        if (needs_p) cmd->add_option("--p", opt.p, "characteristic (2 or 3)")->required();
        cmd->add_option("--m", opt.m, "integer quasi-invariance order m")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--m-half", opt.m_half, "odd value of 2m (half-integer m, p=2 only)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--format", opt.format, "plain|json|csv");
    };

    auto* dim = app.add_subcommand("dim", "dimension of one graded component");
    add_common(dim, true);
    dim->add_option("--degree", opt.degree, "homogeneous degree")->required();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series, closed form vs oracle");
    add_common(hilbert, true);
    hilbert->add_option("--terms", opt.terms, "number of series coefficients");
    hilbert->add_option("--compare", opt.compare, "empirical|char0|none (default empirical)");
    hilbert->add_option("--budget", opt.budget, "raise the oracle term budget");

    auto* check = app.add_subcommand("check", "quasi-order of a polynomial");
    add_common(check, true);
    check->add_option("--poly", opt.poly_text, "polynomial text")->required();

    auto* gens = app.add_subcommand("generators", "free module generators for Q_m");
    add_common(gens, true);

    auto* cex = app.add_subcommand("counterexample", "minimal Ren-Xu counterexample (p=3)");
    cex->add_option("--m", opt.m, "integer quasi-invariance order m")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cex->add_option("--format", opt.format, "plain|json (default json)");

    auto* stair = app.add_subcommand("staircase", "generator degree table (p=3)");
    stair->add_option("--max-m", opt.max_m, "largest m in the table (default 12)");
    stair->add_option("--format", opt.format, "plain|json|csv");
    stair->add_flag("--verify", opt.verify, "cross-check each d_low against the oracle");

    auto* classify = app.add_subcommand("classify", "cyclic S3-module of a polynomial");
    add_common(classify, true);
    classify->add_option("--poly", opt.poly_text, "polynomial text")->required();

    auto* verify = app.add_subcommand("verify", "certify free generation degree by degree");
    add_common(verify, true);
    verify->add_option("--max-degree", opt.max_degree, "check up to this degree "
                                                       "(default 6m+6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(dim)) return run_dim(opt);
        if (app.got_subcommand(hilbert)) return run_hilbert(opt);
        if (app.got_subcommand(check)) return run_check(opt);
        if (app.got_subcommand(gens)) return run_generators(opt);
        if (app.got_subcommand(cex)) return run_counterexample(opt);
        if (app.got_subcommand(stair)) return run_staircase(opt);
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
    } catch (const qinv::parse_error& e) {
        usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
