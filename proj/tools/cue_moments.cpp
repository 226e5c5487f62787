// cue-moments: exact and Monte-Carlo joint moments of CUE characteristic
// polynomials.
//
// Exit codes: 0 success, 1 input error, 2 cross-check mismatch.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cuem/barnes.hpp"
#include "cuem/bessel.hpp"
#include "cuem/conformal.hpp"
#include "cuem/error.hpp"
#include "cuem/laguerre.hpp"
#include "cuem/montecarlo.hpp"
#include "cuem/painleve.hpp"
#include "cuem/verify.hpp"

using nlohmann::ordered_json;
using namespace cuem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

// Accepts "p", "p/q" or a plain decimal such as "0.5".
Rational parse_number(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational::parse(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed number: '" + text + "'");
    std::string den = "1" + std::string(frac.size(), '0');
    return Rational::parse(digits + "/" + den);
}

int parse_h(const std::string& text) {
    Rational h;
    try {
        h = parse_number(text);
    } catch (const std::exception&) {
        throw InputError("h must be a non-negative integer (got '" + text + "')");
    }
    if (!h.is_integer()) {
        if ((Rational(2) * h).is_integer())
            throw InputError("half-integer h=" + h.to_string() + " is out of scope: " + kOutOfScopeNote);
        throw InputError("h must be an integer (got " + h.to_string() + "): " + kOutOfScopeNote);
    }
    if (h.sign() < 0) throw InputError("h must be non-negative (got " + h.to_string() + ")");
    if (h > Rational(1000)) throw InputError("h=" + h.to_string() + " is out of scope: " + kOutOfScopeNote);
    return static_cast<int>(h.numerator().get_si());
}

std::string approx(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot open output file '" + out_path + "'");
    f << text;
}

std::string render_moment(const MomentResult& r, Format fmt) {
    const std::string value = r.value.to_string();
    const double va = r.value.to_double();
    if (fmt == Format::json) {
        ordered_json j;
        if (r.N) j["N"] = *r.N;
        j["h"] = r.h;
        j["k"] = r.k;
        j["method"] = std::string(method_name(r.method));
        j["value"] = value;
        j["value_approx"] = va;
        if (r.truncation_order) j["truncation_order"] = *r.truncation_order;
        return j.dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "N,h,k,method,value,value_approx,truncation_order\n";
        os << (r.N ? std::to_string(*r.N) : "") << ',' << r.h << ',' << r.k << ',' << method_name(r.method) << ','
           << value << ',' << approx(va) << ',' << (r.truncation_order ? std::to_string(*r.truncation_order) : "") << '\n';
        return os.str();
    }
    std::ostringstream os;
    if (r.N)
        os << "F_" << *r.N << "(" << r.h << "," << r.k << ")";
    else
        os << "F(" << r.h << "," << r.k << ")";
    os << " = " << value << "  ~ " << approx(va) << "  [" << method_name(r.method) << "]\n";
    return os.str();
}

std::string render_mc(int N, int h, int k, const McEstimate& e, Format fmt) {
    if (fmt == Format::json) {
        ordered_json j;
        j["N"] = N;
        j["h"] = h;
        j["k"] = k;
        j["method"] = "montecarlo";
        j["value"] = e.mean;
        j["value_approx"] = e.mean;
        j["stderr"] = e.stderr_;
        j["samples"] = e.samples;
        j["seed"] = e.seed;
        return j.dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "N,h,k,method,value,value_approx,truncation_order,stderr,samples,seed\n";
        os << N << ',' << h << ',' << k << ",montecarlo," << std::setprecision(17) << e.mean << ',' << approx(e.mean)
           << ",," << e.stderr_ << ',' << e.samples << ',' << e.seed << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "F_" << N << "(" << h << "," << k << ") ~ " << approx(e.mean) << " +- " << approx(e.stderr_) << "  [montecarlo, "
       << e.samples << " samples, seed " << e.seed << "]\n";
    return os.str();
}

std::string render_series(const std::string& which, const std::string& var, const PowerSeries& s,
                          std::optional<int> N, int k) {
    ordered_json j;
    j["which"] = which;
    if (N) j["N"] = *N;
    j["k"] = k;
    j["variable"] = var;
    j["order"] = s.order();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    return j.dump(2) + "\n";
}

Format pick_format(bool json, bool csv) {
    if (json && csv) throw InputError("--json and --csv are mutually exclusive");
    return json ? Format::json : csv ? Format::csv : Format::text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint moments of CUE characteristic polynomials and their derivatives"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help and exit");  // -h would clash with --h

    std::string out_path;
    bool json = false, csv = false;

    // finite
    auto* finite = app.add_subcommand("finite", "F_N(h,k) at finite matrix size N");
    int fN = 0, fk = 1;
    std::string fh;
    std::string fmethod = "laguerre";
    std::uint64_t samples = 200000, seed = 20240611;
    int workers = default_workers();
    finite->add_option("--N", fN, "matrix size")->required();
    finite->add_option("--h", fh, "derivative exponent h")->required();
    finite->add_option("--k", fk, "exponent k")->required();
    finite->add_option("--method", fmethod, "laguerre | painleve5 | conformal | montecarlo | barnes-closed-form")
        ->capture_default_str();
    finite->add_option("--samples", samples, "Monte-Carlo samples")->capture_default_str();
    finite->add_option("--seed", seed, "Monte-Carlo seed")->capture_default_str();
    finite->add_option("--workers", workers, "Monte-Carlo worker threads");
    finite->add_flag("--json", json, "JSON output");
    finite->add_flag("--csv", csv, "CSV output");
    finite->add_option("--out", out_path, "write output to this file");

    // limit
    auto* limit = app.add_subcommand("limit", "F(h,k) = lim F_N(h,k)/N^{k^2+2h}");
    int lk = 1;
    std::string lh;
    std::string lmethod = "painleve3";
    limit->add_option("--h", lh, "derivative exponent h")->required();
    limit->add_option("--k", lk, "exponent k")->required();
    limit->add_option("--method", lmethod, "painleve3 | hooksum | dehaye | barnes-closed-form")->capture_default_str();
    limit->add_flag("--json", json, "JSON output");
    limit->add_flag("--csv", csv, "CSV output");
    limit->add_option("--out", out_path, "write output to this file");

    // series
    auto* series = app.add_subcommand("series", "dump a series as exact coefficients");
    std::string which;
    std::optional<int> sN;
    int sk = 1, sorder = 0;
    std::string free_param;
    bool from_laguerre = false;
    series->add_option("--which", which, "sigma5 | xi | fk | tau3 | h3")
        ->required()
        ->check(CLI::IsMember({"sigma5", "xi", "fk", "tau3", "h3"}));
    series->add_option("--N", sN, "matrix size (sigma5, fk)");
    series->add_option("--k", sk, "exponent k")->required();
    series->add_option("--order", sorder, "truncation order")->required();
    series->add_option("--free-param", free_param, "alpha_{2k+1} / xi_{2k+1} as p/q");
    series->add_flag("--from-laguerre", from_laguerre, "take the free parameter from the Laguerre determinant");
    series->add_option("--out", out_path, "write output to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "run every cross-method check");
    std::string preset = "small";
    bool with_mc = false;
    std::optional<int> inject_dehaye;
    verify->add_option("--grid-preset", preset, "small | full")
        ->check(CLI::IsMember({"small", "full"}))
        ->capture_default_str();
    verify->add_flag("--json", json, "JSON report");
    verify->add_flag("--with-mc", with_mc, "include Monte-Carlo checks");
    verify->add_option("--workers", workers, "parallel checks");
    verify->add_option("--inject-dehaye-fault", inject_dehaye, "corrupt the Dehaye table entry for this h")
        ->group("");
    verify->add_option("--out", out_path, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*finite) {
            const Format fmt = pick_format(json, csv);
            const int h = parse_h(fh);
            auto method = parse_method(fmethod);
            if (!method) throw InputError("unknown method '" + fmethod + "'");
            validate_moment_params(fN, h, fk);
            switch (*method) {
                case Method::laguerre: emit(render_moment(moment_direct({fN, fk, h}), fmt), out_path); break;
                case Method::painleve5: emit(render_moment(moment_painleve(fN, h, fk), fmt), out_path); break;
                case Method::conformal: emit(render_moment(moment_conformal(fN, h, fk), fmt), out_path); break;
                case Method::barnes_closed_form: {
                    if (h != 0) throw InputError("barnes-closed-form is only available for h=0");
                    emit(render_moment(MomentResult{fN, 0, fk, Method::barnes_closed_form, F_N_zero(fN, fk), std::nullopt}, fmt),
                         out_path);
                    break;
                }
                case Method::montecarlo: {
                    if (fN < 1) throw InputError("montecarlo requires N >= 1");
                    if (samples < 2) throw InputError("montecarlo requires at least 2 samples");
                    if (workers < 1) throw InputError("--workers must be positive");
                    emit(render_mc(fN, h, fk, estimate_moment(fN, h, fk, samples, seed, workers), fmt), out_path);
                    break;
                }
                default: throw InputError("method '" + fmethod + "' is not a finite-N method");
            }
            return kExitOk;
        }

        if (*limit) {
            const Format fmt = pick_format(json, csv);
            const int h = parse_h(lh);
            auto method = parse_method(lmethod);
            if (!method) throw InputError("unknown method '" + lmethod + "'");
            validate_moment_params(std::nullopt, h, lk);
            MomentResult r;
            switch (*method) {
                case Method::painleve3: r = moment_limit_painleve(h, lk); break;
                case Method::hooksum: r = moment_limit_hooksum(h, lk); break;
                case Method::dehaye: r = moment_limit_dehaye(h, lk); break;
                case Method::barnes_closed_form:
                    if (h != 0) throw InputError("barnes-closed-form is only available for h=0");
                    r = MomentResult{std::nullopt, 0, lk, Method::barnes_closed_form, F_zero_limit(lk), std::nullopt};
                    break;
                default: throw InputError("method '" + lmethod + "' is not a limit method");
            }
            emit(render_moment(r, fmt), out_path);
            return kExitOk;
        }

        if (*series) {
            if (sk < 1) throw InputError("k must be a positive integer");
            if (sorder < 0) throw InputError("order must be non-negative");
            if (!free_param.empty() && from_laguerre) throw InputError("--free-param and --from-laguerre are mutually exclusive");
            std::optional<Rational> fp;
            if (!free_param.empty()) {
                try {
                    fp = Rational::parse(free_param);
                } catch (const std::exception& e) {
                    throw InputError(e.what());
                }
            }
            const std::size_t free_idx = static_cast<std::size_t>(2 * sk + 1);
            if (which == "sigma5" || which == "fk") {
                if (!sN) throw InputError("--N is required for --which " + which);
                if (*sN < sk - 1)
                    throw InputError("N must satisfy N >= k-1: index of Laguerre polynomial would be negative");
            }
            if (which == "sigma5") {
                if (from_laguerre && sorder > 2 * sk)
                    fp = sigma_tilde_from_determinant(*sN, sk, free_idx)[free_idx];
                emit(render_series(which, "x", solve_sigma_v(*sN, sk, sorder, fp).series(), sN, sk), out_path);
            } else if (which == "xi") {
                if (from_laguerre && sorder > 2 * sk) {
                    auto alpha = [&](int N) { return sigma_tilde_from_determinant(N, sk, free_idx)[free_idx]; };
                    fp = leading_coefficient_in_N(alpha, 2 * sk + 1, std::max(sk - 1, 1));
                }
                emit(render_series(which, "t", solve_xi(sk, sorder, fp).series(), std::nullopt, sk), out_path);
            } else if (which == "fk") {
                emit(render_series(which, "x", f_k_series(LaguerreParams{*sN, sk, 0}, static_cast<std::size_t>(sorder)), sN, sk),
                     out_path);
            } else if (which == "tau3") {
                emit(render_series(which, "t", tau_iii_series(sk, sorder), std::nullopt, sk), out_path);
            } else {
                emit(render_series(which, "s", h_iii_det_series(sk, sorder), std::nullopt, sk), out_path);
            }
            return kExitOk;
        }

        if (*verify) {
            VerifyOptions opts;
            opts.preset = preset == "full" ? GridPreset::full : GridPreset::small;
            opts.with_mc = with_mc;
            opts.workers = std::max(1, workers);
            opts.corrupt_dehaye_h = inject_dehaye;
            auto results = run_verification(opts);
            const bool passed = all_passed(results);
            std::string text;
            if (json) {
                ordered_json j;
                j["preset"] = preset;
                j["passed"] = passed;
                ordered_json arr = ordered_json::array();
                for (const auto& r : results) {
                    ordered_json c;
                    c["name"] = r.name;
                    c["status"] = std::string(status_name(r.status));
                    c["detail"] = r.detail;
                    c["first_failing_coefficient"] =
                        r.first_failing_coefficient ? ordered_json(*r.first_failing_coefficient) : ordered_json(nullptr);
                    arr.push_back(c);
                }
                j["checks"] = arr;
                text = j.dump(2) + "\n";
            } else {
                std::ostringstream os;
                for (const auto& r : results) {
                    os << std::left << std::setw(8) << status_name(r.status) << r.name;
                    if (!r.detail.empty()) os << "  " << r.detail;
                    os << '\n';
                }
                os << (passed ? "all cross-checks passed\n" : "cross-check mismatch\n");
                text = os.str();
            }
            emit(text, out_path);
            return passed ? kExitOk : kExitMismatch;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::internal_consistency:
            case ErrorKind::relation_violated:
            case ErrorKind::inconsistent_recursion: return kExitMismatch;
            default: return kExitInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
