#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace cuem {

struct CueSample {
    std::vector<double> angles;  ///< eigenphases in [0, 2 pi)
};

/// Eigenphases of a Haar-random N x N unitary (phase-corrected QR of a
/// complex Gaussian matrix).
CueSample sample_cue(int N, std::mt19937_64& rng);

struct VValues {
    double v0 = 0;
    double vprime0 = 0;
};

/// V(0) = 2^N prod sin(theta_n/2) and V'(0) = -2^{N-1} sum_m cos(theta_m/2)
/// prod_{n != m} sin(theta_n/2), accumulated in log space.
VValues v_and_vprime(const CueSample& s);

/// V(theta) = 2^N prod sin((theta_n - theta)/2), plain product.
double v_at(const CueSample& s, double theta);

struct McEstimate {
    double mean = 0;
    double stderr_ = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Mean and standard error of an arbitrary per-sample statistic. Worker w
/// draws from its own stream seeded by (seed, w); results are merged in
/// worker order, so output depends only on (seed, samples, workers).
McEstimate estimate_statistic(int N, std::uint64_t samples, std::uint64_t seed, int workers,
                              const std::function<double(const CueSample&)>& stat);

/// E |V(0)|^{2k-2h} |V'(0)|^{2h}.
McEstimate estimate_moment(int N, int h, int k, std::uint64_t samples, std::uint64_t seed, int workers);

/// Worker count honouring CUE_MOMENTS_THREADS and hardware concurrency.
int default_workers();

}  // namespace cuem
