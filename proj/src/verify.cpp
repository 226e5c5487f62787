#include "cuem/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "cuem/barnes.hpp"
#include "cuem/bessel.hpp"
#include "cuem/conformal.hpp"
#include "cuem/laguerre.hpp"
#include "cuem/montecarlo.hpp"
#include "cuem/painleve.hpp"

namespace cuem {

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::finding: return "finding";
    }
    return "unknown";
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

namespace {

struct Grid {
    int closed_kmax, closed_extra;
    int finite_kmax, finite_extra;
    int scaling_kmax;
    int conformal_kmax, conformal_Nmax;
    int bessel_kmax;
    int sigma_kmax;
    int appb_kmax;
    int limit_kmax;
};

constexpr Grid kSmall{3, 4, 3, 3, 2, 2, 3, 3, 3, 4, 6};
constexpr Grid kFull{5, 6, 4, 5, 3, 3, 4, 4, 4, 6, 6};

std::string s(int v) { return std::to_string(v); }

using Check = std::function<CheckResult()>;

CheckResult ok(std::string name, std::string detail = {}) {
    return {std::move(name), CheckStatus::pass, std::move(detail), std::nullopt};
}

CheckResult bad(std::string name, std::string detail, std::optional<int> coeff = std::nullopt,
                CheckStatus st = CheckStatus::fail) {
    return {std::move(name), st, std::move(detail), coeff};
}

std::optional<int> first_mismatch(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t j = 0; j <= n; ++j)
        if (a[j] != b[j]) return static_cast<int>(j);
    return std::nullopt;
}

void add_exact_checks(std::vector<std::pair<std::string, Check>>& checks, const Grid& g, const VerifyOptions& opts) {
    for (int k = 1; k <= g.closed_kmax; ++k) {
        std::string name = "closed-form-vs-determinant k=" + s(k);
        checks.emplace_back(name, [=] {
            for (int N = std::max(0, k - 1); N <= k + g.closed_extra; ++N) {
                Rational det = f_k_series(LaguerreParams{N, k, 0}, 0)[0];
                if (det != F_N_zero(N, k))
                    return bad(name, "N=" + s(N) + ": determinant " + det.to_string() + " vs closed form " +
                                         F_N_zero(N, k).to_string(), 0);
            }
            return ok(name);
        });
    }

    for (int k = 1; k <= g.appb_kmax; ++k) {
        std::string name = "laguerre-derivative-identity k=" + s(k);
        checks.emplace_back(name, [=] {
            for (int N = k - 1; N <= k + 6; ++N)
                if (!derivative_identity_check(N, k)) return bad(name, "N=" + s(N), 1);
            return ok(name);
        });
    }

    for (int k = 1; k <= g.finite_kmax; ++k)
        for (int h = 0; h <= k; ++h) {
            std::string name = "finite-laguerre-painleve5-conformal h=" + s(h) + " k=" + s(k);
            checks.emplace_back(name, [=] {
                for (int N = std::max(k - 1, h >= 1 ? 1 : 0); N <= k + g.finite_extra; ++N) {
                    Rational a = moment_direct(LaguerreParams{N, k, h}).value;
                    Rational b = moment_painleve(N, h, k).value;
                    Rational c = moment_conformal(N, h, k).value;
                    if (a != b || a != c)
                        return bad(name, "N=" + s(N) + ": laguerre " + a.to_string() + ", painleve5 " + b.to_string() +
                                             ", conformal " + c.to_string(), 2 * h);
                }
                return ok(name);
            });
        }

    for (int k = 1; k <= g.sigma_kmax; ++k) {
        std::string name = "sigma5-residual k=" + s(k);
        checks.emplace_back(name, [=] {
            for (int N = std::max(1, k - 1); N <= k + 3; ++N) {
                SigmaVSeries sv = solve_sigma_v(N, k, 2 * k);
                int r = residual_check(sv);
                if (r <= 2 * k) return bad(name, "N=" + s(N) + ": residual nonzero", r);
                PowerSeries det = sigma_tilde_from_determinant(N, k, static_cast<std::size_t>(2 * k + 2));
                SigmaVSeries full = solve_sigma_v(N, k, 2 * k + 2, det[static_cast<std::size_t>(2 * k + 1)]);
                if (auto m = first_mismatch(full.series(), det))
                    return bad(name, "N=" + s(N) + ": sigma-PV with determinantal free parameter differs from x(log f_k)'", *m);
            }
            return ok(name);
        });
        std::string xname = "xi-residual k=" + s(k);
        checks.emplace_back(xname, [=] {
            int r = residual_check(solve_xi(k, 2 * k));
            if (r <= 2 * k) return bad(xname, "residual nonzero", r);
            return ok(xname);
        });
    }

    for (int h = 1; h <= 5; ++h) {
        DehayeTable table = default_dehaye_table();
        if (opts.corrupt_dehaye_h && *opts.corrupt_dehaye_h == h)
            table.x_tilde[2 * h] = table.x_tilde[2 * h] + DensePolynomial({Rational(1)});
        std::string dname = "dehaye-vs-hooksum h=" + s(h);
        checks.emplace_back(dname, [=] {
            for (int k = h; k <= g.limit_kmax; ++k) {
                Rational a = moment_limit_dehaye(h, k, table).value;
                Rational b = moment_limit_hooksum(h, k).value;
                if (a != b)
                    return bad(dname, "k=" + s(k) + ": dehaye " + a.to_string() + " vs hooksum " + b.to_string(), 2 * h);
            }
            return ok(dname);
        });
        std::string pname = "painleve3-vs-hooksum h=" + s(h);
        checks.emplace_back(pname, [=] {
            for (int k = h; k <= g.limit_kmax; ++k) {
                Rational a = moment_limit_painleve(h, k).value;
                Rational b = moment_limit_hooksum(h, k).value;
                if (a != b)
                    return bad(pname, "k=" + s(k) + ": painleve3 " + a.to_string() + " vs hooksum " + b.to_string(), 2 * h);
            }
            return ok(pname);
        });
        std::string tname = "limit-table h=" + s(h);
        checks.emplace_back(tname, [=] {
            for (int k = h; k <= g.limit_kmax; ++k) {
                const Rational q(4 * k * k);
                Rational ref;
                switch (h) {
                    case 1: ref = Rational(1) / (Rational(4) * (q - 1)); break;
                    case 2: ref = Rational(3) / (Rational(16) * (q - 1) * (q - 9)); break;
                    case 3: ref = Rational(15) / (Rational(64) * (q - 1) * (q - 1) * (q - 25)); break;
                    case 4:
                        ref = Rational(105) * (q - 33) / (Rational(256) * (q - 1) * (q - 1) * (q - 9) * (q - 25) * (q - 49));
                        break;
                    default:
                        ref = Rational(925) * (q * q - Rational(90) * q + 1497) /
                              (Rational(1024) * (q - 1) * (q - 1) * (q - 9) * (q - 9) * (q - 25) * (q - 49) * (q - 81));
                }
                ref *= F_zero_limit(k);
                Rational v = moment_limit_painleve(h, k).value;
                if (v != ref)
                    return bad(tname, "k=" + s(k) + ": computed " + v.to_string() + ", printed table " + ref.to_string() +
                                          " (ratio " + (v / ref).to_string() + ")",
                               2 * h, CheckStatus::finding);
            }
            return ok(tname);
        });
    }

    for (int k = 1; k <= g.scaling_kmax; ++k)
        for (int h = 0; h <= k; ++h) {
            std::string name = "scaling-limit h=" + s(h) + " k=" + s(k);
            checks.emplace_back(name, [=] {
                DensePolynomial p = moment_poly_in_N(h, k);
                Rational lim = moment_limit_painleve(h, k).value;
                if (p.degree() != k * k + 2 * h || p.leading() != lim)
                    return bad(name, "leading coefficient " + p.leading().to_string() + " (degree " + s(p.degree()) +
                                         ") vs F(h,k) " + lim.to_string());
                return ok(name);
            });
        }

    for (int k = 1; k <= g.conformal_kmax; ++k) {
        const int order = std::min(2 * k + 4, 10);
        std::string fb = "conformal-first-block k=" + s(k);
        checks.emplace_back(fb, [=] {
            for (int N = k - 1; N <= g.conformal_Nmax; ++N) {
                PowerSeries det = f_k_series(LaguerreParams{N, k, 0}, static_cast<std::size_t>(order));
                PowerSeries cb = f_k_conformal_term(N, k, 0, order);
                if (auto m = first_mismatch(det, cb)) return bad(fb, "N=" + s(N), *m);
            }
            return ok(fb);
        });
        std::string full = "conformal-full-expansion k=" + s(k);
        checks.emplace_back(full, [=] {
            for (int N = k - 1; N <= g.conformal_Nmax; ++N) {
                PowerSeries det = f_k_series(LaguerreParams{N, k, 0}, static_cast<std::size_t>(order));
                PowerSeries cb = f_k_conformal_series(N, k, order);
                if (auto m = first_mismatch(det, cb)) {
                    const std::size_t j = static_cast<std::size_t>(*m);
                    return bad(full, "N=" + s(N) + ": x^" + s(*m) + " determinant " + det[j].to_string() +
                                         " vs expansion " + cb[j].to_string() + " (n>=1 blocks)",
                               *m, CheckStatus::finding);
                }
            }
            return ok(full);
        });
    }

    for (int k = 1; k <= g.bessel_kmax; ++k) {
        std::string bname = "bessel-xi-relation k=" + s(k);
        checks.emplace_back(bname, [=] {
            XiRelation r = verify_xi_relation(k, 2 * k);
            return ok(bname, "D(t) constant " + r.constant.to_string() + " through t^" + s(r.clean_through) +
                                 " (printed reference value k^2 = " + s(k * k) + ")");
        });
        std::string tname = "bessel-transition k=" + s(k);
        checks.emplace_back(tname, [=] {
            TransitionReport rep = verify_transition(k, 2 * k);
            if (!rep.ok) return bad(tname, rep.mismatches.front());
            return ok(tname);
        });
        std::string uname = "tau3-vs-painleve3 k=" + s(k);
        checks.emplace_back(uname, [=] {
            PowerSeries tau = tau_iii_series(k, 2 * k);
            for (int h = 0; h <= k; ++h) {
                Rational v = Rational(factorial(2 * h)) * tau[static_cast<std::size_t>(2 * h)];
                if (h % 2) v = -v;
                Rational ref = moment_limit_painleve(h, k).value;
                if (v != ref) return bad(uname, "h=" + s(h) + ": tau3 " + v.to_string() + " vs " + ref.to_string(), 2 * h);
            }
            return ok(uname);
        });
    }
}

void add_mc_checks(std::vector<std::pair<std::string, Check>>& checks) {
    struct Case {
        int N, h, k;
        std::uint64_t samples;
    };
    for (Case c : {Case{3, 0, 1, 200000}, Case{3, 1, 1, 200000}, Case{4, 1, 2, 1000000}}) {
        std::string name = "montecarlo F_" + s(c.N) + "(" + s(c.h) + "," + s(c.k) + ")";
        checks.emplace_back(name, [=] {
            McEstimate e = estimate_moment(c.N, c.h, c.k, c.samples, 20240611, 1);
            const double exact = moment_direct(LaguerreParams{c.N, c.k, c.h}).value.to_double();
            const double z = (e.mean - exact) / e.stderr_;
            std::string detail = "mean " + std::to_string(e.mean) + " +- " + std::to_string(e.stderr_) + ", exact " +
                                 std::to_string(exact) + ", z " + std::to_string(z);
            if (std::abs(z) > 4) return bad(name, detail);
            return ok(name, detail);
        });
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    const Grid& g = opts.preset == GridPreset::full ? kFull : kSmall;
    std::vector<std::pair<std::string, Check>> checks;
    add_exact_checks(checks, g, opts);
    if (opts.with_mc) add_mc_checks(checks);

    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            try {
                results[i] = checks[i].second();
            } catch (const std::exception& e) {
                results[i] = bad(checks[i].first, std::string("exception: ") + e.what());
            }
        }
    };
    const int W = std::max(1, std::min<int>(opts.workers, static_cast<int>(checks.size())));
    if (W == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < W; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return results;
}

}  // namespace cuem
