// ffsq — batch CLI for exact and empirical computations around the
// indicator b(f) of f = A^2 + T B^2 in GF(p^k)[T].
//
// Subcommands: represent, interval, global, chebotarev, group, affine,
// first-interval. Every run is deterministic given its full flag set
// (seed included); JSON/CSV goes to --out or stdout.
//
// Exit codes: 0 success, 1 usage or parse error, 2 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffsq/affine.hpp"
#include "ffsq/intervals.hpp"
#include "ffsq/twosquares.hpp"

using namespace ffsq;

namespace {

struct CommonOpts {
    uint32_t p = 3;
    uint32_t k = 1;
    unsigned workers = 1;
    uint64_t max_enum = kDefaultMaxEnum;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_field = true) {
    if (with_field) {
        cmd->add_option("--p", o.p, "field characteristic (odd prime)")->required();
        cmd->add_option("--k", o.k, "extension degree, q = p^k (default 1)");
    }
    cmd->add_option("--workers", o.workers, "worker threads (output is identical for any count)");
    cmd->add_option("--max-enum", o.max_enum, "enumeration guard (overrides FFSQ_MAX_ENUM)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
}

void apply_env_guard(CommonOpts& o, bool flag_given) {
    if (flag_given) return;
    if (const char* env = std::getenv("FFSQ_MAX_ENUM")) {
        try {
            o.max_enum = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("FFSQ_MAX_ENUM is not a number: " + std::string(env));
        }
    }
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out);
    f << text;
}

// "T^n" shorthand or the coefficient format of poly_from_string.
Poly parse_poly(const FieldCtxPtr& ctx, const std::string& text) {
    if (text.size() >= 3 && text[0] == 'T' && text[1] == '^') {
        size_t pos = 0;
        int n = std::stoi(text.substr(2), &pos);
        if (pos != text.size() - 2 || n < 0)
            throw std::invalid_argument("bad monomial: " + text);
        return Poly::monomial(ctx.get(), n);
    }
    if (text == "T") return Poly::monomial(ctx.get(), 1);
    return poly_from_string(ctx, text);
}

std::string render_report(const DensityReport& r, const std::string& format) {
    if (format == "csv") return report_csv_header(r) + "\n" + report_to_csv_row(r) + "\n";
    return report_to_json(r);
}

int cmd_represent(const CommonOpts& o, const std::string& f_text) {
    auto ctx = field_new(o.p, o.k);
    Poly f = parse_poly(ctx, f_text);
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("represent: f must be monic");

    nlohmann::json j;
    j["q"] = ctx->q();
    j["p"] = o.p;
    j["k"] = o.k;
    j["f"] = poly_to_string(f);
    j["bq"] = b_q(f);

    Factorization fac = factor(f);
    nlohmann::json factors = nlohmann::json::array();
    for (auto& t : fac.factors)
        factors.push_back({{"prime", poly_to_string(t.prime)},
                           {"multiplicity", t.multiplicity},
                           {"inert", is_inert_prime(t.prime)}});
    j["factors"] = factors;

    j["witness"] = nullptr;
    j["witness_source"] = nullptr;
    std::optional<Representation> w;
    try {
        w = find_representation_bruteforce(f, o.max_enum);
        if (w) j["witness_source"] = "bruteforce";
    } catch (const guard_error&) {
        w = find_representation(f);  // cheap constructive fallback
        if (w) j["witness_source"] = "constructive";
    }
    if (w) j["witness"] = {{"A", poly_to_string(w->a)}, {"B", poly_to_string(w->b)}};

    write_output(j.dump(2) + "\n", o.out);
    return 0;
}

int cmd_group(uint32_t n, const CommonOpts& o) {
    if (n < 1) throw std::invalid_argument("group: n must be >= 1");
    Rat closed = xn_density_closed_form(n);
    std::optional<Rat> psum, enumerated;
    if (n <= 40) psum = xn_density_partition_sum(n);
    std::optional<uint64_t> count;
    if (n <= 8) {
        count = xn_count_enumerated(n);
        enumerated = Rat(Int(*count), pow2(n) * factorial(n));
    }
    bool all_equal = (!psum || *psum == closed) && (!enumerated || *enumerated == closed);

    if (o.format == "csv") {
        std::string text =
            "n,count_enumerated,density_enumerated,density_partition_sum,density_closed_form,"
            "all_equal\n";
        text += std::to_string(n) + ",";
        text += (count ? std::to_string(*count) : "") + ",";
        text += (enumerated ? rational_string(*enumerated) : "") + ",";
        text += (psum ? rational_string(*psum) : "") + ",";
        text += rational_string(closed) + ",";
        text += all_equal ? "1" : "0";
        write_output(text + "\n", o.out);
        return 0;
    }
    nlohmann::json j;
    j["n"] = n;
    j["group_order"] = (pow2(n) * factorial(n)).str();
    j["count_enumerated"] = count ? nlohmann::json(*count) : nlohmann::json(nullptr);
    j["density_enumerated"] =
        enumerated ? nlohmann::json(rational_string(*enumerated)) : nlohmann::json(nullptr);
    j["density_partition_sum"] =
        psum ? nlohmann::json(rational_string(*psum)) : nlohmann::json(nullptr);
    j["density_closed_form"] = rational_string(closed);
    j["all_equal"] = all_equal;
    write_output(j.dump(2) + "\n", o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and empirical computations for sums of two squares in GF(q)[T]"};
    app.require_subcommand(1);

    // represent
    CommonOpts rep_opts;
    std::string rep_f;
    auto* rep = app.add_subcommand("represent", "decide b(f), print factorization and a witness");
    add_common(rep, rep_opts);
    rep->add_option("--f", rep_f, "monic polynomial (coefficients or T^n)")->required();

    // interval
    CommonOpts iv_opts;
    std::string iv_f0 = "", iv_eps = "", iv_mode = "exhaustive";
    uint32_t iv_n = 0;
    int64_t iv_m = -1;
    uint64_t iv_samples = 0, iv_seed = 0;
    auto* iv = app.add_subcommand("interval", "mean of b(f) over a short interval around f0");
    add_common(iv, iv_opts);
    iv->add_option("--n", iv_n, "degree of f0 (required with --f0 T^n or omitted --f0)");
    iv->add_option("--f0", iv_f0, "interval center (default T^n)");
    iv->add_option("--epsilon", iv_eps, "interval exponent in (0,1), e.g. 1/2 (m = floor(eps*n))");
    iv->add_option("--m", iv_m, "explicit interval radius exponent (deg h <= m)");
    iv->add_option("--mode", iv_mode, "exhaustive or monte_carlo")
        ->check(CLI::IsMember({"exhaustive", "monte_carlo"}));
    iv->add_option("--samples", iv_samples, "sample count for monte_carlo");
    iv->add_option("--seed", iv_seed, "RNG seed for monte_carlo");

    // global
    CommonOpts gl_opts;
    uint32_t gl_n = 0;
    auto* gl = app.add_subcommand("global", "mean of b(f) over all monic degree-n polynomials");
    add_common(gl, gl_opts);
    gl->add_option("--n", gl_n, "degree")->required();

    // chebotarev
    CommonOpts ch_opts;
    std::string ch_f0 = "", ch_eps = "";
    uint32_t ch_n = 0;
    int64_t ch_m = -1;
    auto* ch = app.add_subcommand(
        "chebotarev", "signed Frobenius type histogram over an interval, with theory");
    add_common(ch, ch_opts);
    ch->add_option("--n", ch_n, "degree of f0");
    ch->add_option("--f0", ch_f0, "interval center (default T^n)");
    ch->add_option("--epsilon", ch_eps, "interval exponent");
    ch->add_option("--m", ch_m, "explicit interval radius exponent");

    // group
    CommonOpts gr_opts;
    uint32_t gr_n = 0;
    auto* gr = app.add_subcommand(
        "group", "X_n density three ways: enumeration, partition sum, closed form");
    add_common(gr, gr_opts, /*with_field=*/false);
    gr->add_option("--n", gr_n, "degree of the signed permutation group")->required();

    // affine
    CommonOpts af_opts;
    uint32_t af_nu = 1;
    std::string af_mode = "exhaustive";
    uint64_t af_samples = 0, af_seed = 0;
    auto* af = app.add_subcommand(
        "affine", "two-coefficient interval around T^(p^2) over GF(p^(2 nu)); reference c_p");
    af->add_option("--p", af_opts.p, "odd prime p (q = p^(2 nu))")->required();
    af->add_option("--nu", af_nu, "field exponent: q = p^(2 nu)")->required();
    af->add_option("--workers", af_opts.workers, "worker threads");
    af->add_option("--max-enum", af_opts.max_enum, "enumeration guard");
    af->add_option("--format", af_opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    af->add_option("--out", af_opts.out, "output path");
    af->add_option("--mode", af_mode, "exhaustive or monte_carlo")
        ->check(CLI::IsMember({"exhaustive", "monte_carlo"}));
    af->add_option("--samples", af_samples, "sample count for monte_carlo");
    af->add_option("--seed", af_seed, "RNG seed for monte_carlo");

    // first-interval
    CommonOpts fi_opts;
    uint32_t fi_n = 0;
    auto* fi = app.add_subcommand(
        "first-interval", "constant-term interval around an odd monomial; mean is (q+1)/(2q)");
    add_common(fi, fi_opts);
    fi->add_option("--n", fi_n, "odd degree of the monomial center")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (rep->parsed()) {
            apply_env_guard(rep_opts, rep->count("--max-enum") > 0);
            return cmd_represent(rep_opts, rep_f);
        }
        if (iv->parsed()) {
            apply_env_guard(iv_opts, iv->count("--max-enum") > 0);
            if ((iv_eps.empty()) == (iv_m < 0))
                throw std::invalid_argument("interval: give exactly one of --epsilon, --m");
            if (iv_mode == "monte_carlo" && iv->count("--samples") == 0)
                throw std::invalid_argument("interval: monte_carlo requires --samples");
            auto ctx = field_new(iv_opts.p, iv_opts.k);
            Poly f0 = iv_f0.empty() ? Poly::monomial(ctx.get(), static_cast<int>(iv_n))
                                    : parse_poly(ctx, iv_f0);
            if (iv->count("--n") && f0.deg() != static_cast<int>(iv_n))
                throw std::invalid_argument("interval: --n disagrees with deg f0");
            Interval interval = iv_eps.empty()
                                    ? make_interval_m(f0, static_cast<uint32_t>(iv_m))
                                    : make_interval(f0, parse_rational(iv_eps));
            DensityReport r = iv_mode == "exhaustive"
                                  ? scan_exhaustive(interval, iv_opts.max_enum, iv_opts.workers)
                                  : scan_monte_carlo(interval, iv_samples, iv_seed,
                                                     iv_opts.workers);
            write_output(render_report(r, iv_opts.format), iv_opts.out);
            return 0;
        }
        if (gl->parsed()) {
            apply_env_guard(gl_opts, gl->count("--max-enum") > 0);
            auto ctx = field_new(gl_opts.p, gl_opts.k);
            DensityReport r = global_density(ctx, gl_n, gl_opts.max_enum, gl_opts.workers);
            write_output(render_report(r, gl_opts.format), gl_opts.out);
            return 0;
        }
        if (ch->parsed()) {
            apply_env_guard(ch_opts, ch->count("--max-enum") > 0);
            if ((ch_eps.empty()) == (ch_m < 0))
                throw std::invalid_argument("chebotarev: give exactly one of --epsilon, --m");
            auto ctx = field_new(ch_opts.p, ch_opts.k);
            Poly f0 = ch_f0.empty() ? Poly::monomial(ctx.get(), static_cast<int>(ch_n))
                                    : parse_poly(ctx, ch_f0);
            Interval interval = ch_eps.empty()
                                    ? make_interval_m(f0, static_cast<uint32_t>(ch_m))
                                    : make_interval(f0, parse_rational(ch_eps));
            SignedTypeHistogram h =
                signed_type_histogram(interval, ch_opts.max_enum, ch_opts.workers);
            if (ch_opts.format == "csv") {
                write_output(histogram_to_csv(h), ch_opts.out);
            } else {
                nlohmann::json j;
                j["q"] = h.q;
                j["p"] = h.p;
                j["k"] = h.k;
                j["n"] = h.n;
                j["m"] = h.m;
                j["f0"] = h.f0;
                j["total"] = h.total;
                j["skipped"] = h.skipped;
                j["tv_distance_decimal"] = decimal_string(histogram_tv_distance(h));
                nlohmann::json rows = nlohmann::json::array();
                for (auto& [t, c] : h.counts)
                    rows.push_back({{"signed_type", t.to_string()},
                                    {"count", c},
                                    {"theoretical",
                                     rational_string(signed_type_probability(t))}});
                j["types"] = rows;
                write_output(j.dump(2) + "\n", ch_opts.out);
            }
            return 0;
        }
        if (gr->parsed()) {
            apply_env_guard(gr_opts, gr->count("--max-enum") > 0);
            return cmd_group(gr_n, gr_opts);
        }
        if (af->parsed()) {
            apply_env_guard(af_opts, af->count("--max-enum") > 0);
            if (af_mode == "monte_carlo" && af->count("--samples") == 0)
                throw std::invalid_argument("affine: monte_carlo requires --samples");
            DensityReport r =
                small_epsilon_experiment(af_opts.p, af_nu, af_mode == "monte_carlo", af_samples,
                                         af_seed, af_opts.max_enum, af_opts.workers);
            write_output(render_report(r, af_opts.format), af_opts.out);
            return 0;
        }
        if (fi->parsed()) {
            apply_env_guard(fi_opts, fi->count("--max-enum") > 0);
            if (fi_n < 3 || fi_n % 2 == 0)
                throw std::invalid_argument("first-interval: --n must be odd and >= 3");
            auto ctx = field_new(fi_opts.p, fi_opts.k);
            DensityReport r = first_interval_experiment(ctx, (fi_n - 1) / 2, fi_opts.max_enum,
                                                        fi_opts.workers);
            write_output(render_report(r, fi_opts.format), fi_opts.out);
            return 0;
        }
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
