#pragma once

#include <stdexcept>
#include <string>

namespace cuem {

enum class ErrorKind {
    invalid_input,
    out_of_scope,
    free_parameter_required,
    inconsistent_recursion,
    underdetermined,
    singular_block,
    table_exhausted,
    internal_consistency,
    relation_violated,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Text shared by every rejection of h > k or non-integer h.
inline constexpr const char* kOutOfScopeNote =
    "integer h with k > h - 1/2 (i.e. 0 <= h <= k) is required; other cases need the free "
    "parameter / half-integer machinery and are out of scope. Known but unsupported: "
    "F(1/2,1) = (e^2-5)/(4*pi)";

}  // namespace cuem
