#include "cuem/moment.hpp"

#include <array>
#include <string>
#include <utility>

#include "cuem/error.hpp"

namespace cuem {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 8> kNames{{
    {Method::laguerre, "laguerre"},
    {Method::painleve5, "painleve5"},
    {Method::painleve3, "painleve3"},
    {Method::conformal, "conformal"},
    {Method::hooksum, "hooksum"},
    {Method::dehaye, "dehaye"},
    {Method::barnes_closed_form, "barnes-closed-form"},
    {Method::montecarlo, "montecarlo"},
}};

}  // namespace

std::string_view method_name(Method m) {
    for (const auto& [method, name] : kNames)
        if (method == m) return name;
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [method, n] : kNames)
        if (n == name) return method;
    return std::nullopt;
}

void validate_moment_params(std::optional<int> N, int h, int k) {
    if (k < 1) throw Error(ErrorKind::invalid_input, "k must be a positive integer (got k=" + std::to_string(k) + ")");
    if (h < 0) throw Error(ErrorKind::invalid_input, "h must be non-negative (got h=" + std::to_string(h) + ")");
    if (h > k)
        throw Error(ErrorKind::out_of_scope, "h=" + std::to_string(h) + " > k=" + std::to_string(k) +
                                                 " is out of scope: " + kOutOfScopeNote);
    if (N && *N < k - 1)
        throw Error(ErrorKind::invalid_input, "N must satisfy N >= k-1 (got N=" + std::to_string(*N) +
                                                  ", k=" + std::to_string(k) +
                                                  "): index of Laguerre polynomial would be negative");
}

}  // namespace cuem
