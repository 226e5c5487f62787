#pragma once

#include <optional>
#include <string_view>

#include "cuem/rational.hpp"

namespace cuem {

enum class Method {
    laguerre,
    painleve5,
    painleve3,
    conformal,
    hooksum,
    dehaye,
    barnes_closed_form,
    montecarlo,
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// An exact moment value; N is absent for N -> infinity limits.
struct MomentResult {
    std::optional<int> N;
    int h = 0;
    int k = 1;
    Method method = Method::laguerre;
    Rational value;
    std::optional<int> truncation_order;
};

/// Throws cuem::Error (invalid_input / out_of_scope) unless k >= 1, 0 <= h <= k
/// and, when N is given, N >= k - 1.
void validate_moment_params(std::optional<int> N, int h, int k);

}  // namespace cuem
