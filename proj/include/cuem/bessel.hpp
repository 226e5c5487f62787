#pragma once

#include <string>
#include <vector>

#include "cuem/series.hpp"

namespace cuem {

struct BesselSeries {
    int nu = 0;
    PowerSeries coeffs{0};  ///< I_nu(2s) in powers of s
};

BesselSeries bessel_i_series(int nu, int order);

/// det[I_{i+j+1}(2s)]_{i,j=0..k-1} in powers of s (constant (2 pi i)^k dropped).
PowerSeries h_iii_det_series(int k, int order);

struct XiRelation {
    Rational constant;
    int clean_through = 0;
    PowerSeries d{0};  ///< D(t) through t^order
};

/// D(t) = t d/dt log H(sqrt t) - t/2 - xi(t). Throws ErrorKind::relation_violated
/// if D is not constant through `order` (order <= 2k).
XiRelation verify_xi_relation(int k, int order);

/// xi(t) read off the Bessel determinant: t d/dt log H(sqrt t) - t/2 minus its
/// constant term.
PowerSeries xi_from_bessel(int k, int order);

struct TransitionReport {
    bool ok = true;
    std::vector<std::string> mismatches;
    explicit operator bool() const { return ok; }
};

/// Compares, for j = 2..order, the large-N limit of alpha_j / N^j from the
/// Laguerre determinant with xi_j from the sigma-PIII' recursion and from the
/// Bessel determinant.
TransitionReport verify_transition(int k, int order);

}  // namespace cuem
