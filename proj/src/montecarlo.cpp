#include "cuem/montecarlo.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace cuem {

CueSample sample_cue(int N, std::mt19937_64& rng) {
    if (N < 1) throw std::invalid_argument("sample_cue: N must be positive");
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    for (;;) {
        Eigen::MatrixXcd Z(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                double re = gauss(rng);
                double im = gauss(rng);
                Z(i, j) = {re, im};
            }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
        Eigen::MatrixXcd Q = qr.householderQ();
        const Eigen::MatrixXcd& R = qr.matrixQR();
        bool degenerate = false;
        for (int j = 0; j < N; ++j) {
            std::complex<double> r = R(j, j);
            double a = std::abs(r);
            if (a == 0.0 || !std::isfinite(a)) {
                degenerate = true;
                break;
            }
            Q.col(j) *= r / a;
        }
        if (degenerate) continue;

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Q, false);
        if (es.info() != Eigen::Success) continue;
        CueSample s;
        s.angles.reserve(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) {
            double th = std::arg(es.eigenvalues()(i));
            if (th < 0) th += 2 * std::numbers::pi;
            if (th >= 2 * std::numbers::pi) th -= 2 * std::numbers::pi;
            s.angles.push_back(th);
        }
        return s;
    }
}

VValues v_and_vprime(const CueSample& s) {
    const std::size_t n = s.angles.size();
    // log|sin(theta/2)| and signs; exact zeros tracked separately
    double log_abs = n * std::log(2.0);
    int sign = 1;
    int zeros = 0;
    std::size_t zero_at = 0;
    std::vector<double> sn(n), cs(n);
    for (std::size_t i = 0; i < n; ++i) {
        sn[i] = std::sin(s.angles[i] / 2);
        cs[i] = std::cos(s.angles[i] / 2);
        if (sn[i] == 0.0) {
            ++zeros;
            zero_at = i;
            continue;
        }
        log_abs += std::log(std::abs(sn[i]));
        if (sn[i] < 0) sign = -sign;
    }
    VValues out;
    if (zeros >= 2) return out;
    if (zeros == 1) {
        // Only the m = zero_at term of V' survives.
        double mag = std::exp(log_abs - std::log(2.0));
        out.vprime0 = -sign * cs[zero_at] * mag;
        return out;
    }
    out.v0 = sign * std::exp(log_abs);
    // V'(0)/V(0) = -(1/2) sum cot(theta_m/2)
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += cs[i] / sn[i];
    out.vprime0 = -0.5 * sum * out.v0;
    return out;
}

double v_at(const CueSample& s, double theta) {
    double v = 1;
    for (double a : s.angles) v *= 2 * std::sin((a - theta) / 2);
    return v;
}

namespace {

struct Welford {
    std::uint64_t n = 0;
    double mean = 0;
    double m2 = 0;

    void push(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    void merge(const Welford& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
        const double d = o.mean - mean;
        const double tot = na + nb;
        mean += d * nb / tot;
        m2 += o.m2 + d * d * na * nb / tot;
        n += o.n;
    }
};

}  // namespace

McEstimate estimate_statistic(int N, std::uint64_t samples, std::uint64_t seed, int workers,
                              const std::function<double(const CueSample&)>& stat) {
    if (samples == 0) throw std::invalid_argument("estimate: samples must be positive");
    if (workers < 1) throw std::invalid_argument("estimate: workers must be positive");
    const std::uint64_t W = static_cast<std::uint64_t>(workers);
    std::vector<Welford> acc(W);
    auto run = [&](std::uint64_t w) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(w)};
        std::mt19937_64 rng(seq);
        const std::uint64_t count = samples / W + (w < samples % W ? 1 : 0);
        for (std::uint64_t i = 0; i < count; ++i) acc[w].push(stat(sample_cue(N, rng)));
    };
    if (W == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t w = 0; w < W; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    Welford total;
    for (const auto& a : acc) total.merge(a);
    McEstimate e;
    e.mean = total.mean;
    e.samples = total.n;
    e.seed = seed;
    e.stderr_ = total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n)) : 0.0;
    return e;
}

McEstimate estimate_moment(int N, int h, int k, std::uint64_t samples, std::uint64_t seed, int workers) {
    if (N < 1) throw std::invalid_argument("estimate_moment: N must be positive");
    if (h < 0 || k < h) throw std::invalid_argument("estimate_moment: need 0 <= h <= k");
    return estimate_statistic(N, samples, seed, workers, [h, k](const CueSample& s) {
        VValues v = v_and_vprime(s);
        return std::pow(std::abs(v.v0), 2 * k - 2 * h) * std::pow(std::abs(v.vprime0), 2 * h);
    });
}

int default_workers() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("CUE_MOMENTS_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1 && cap < hw) hw = static_cast<int>(cap);
    }
    return hw;
}

}  // namespace cuem
