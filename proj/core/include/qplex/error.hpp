#pragma once

#include <stdexcept>
#include <string>

namespace qplex {

/// Every failure mode the library reports, one code per contract violation.
enum class errc {
    non_prime,
    reducible_modulus,
    unsupported_size,
    division_by_zero,
    field_mismatch,
    dimension_mismatch,
    ambient_mismatch,
    too_large,
    bad_dimension,
    not_nested,
    empty_difference,
    profile_mismatch,
    not_between,
    bad_index,
    not_pure,
    empty_complex,
    not_prefix,
    shelling_broken,
    method_unavailable,
    parse_error,
    unknown_id,
    bad_args,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw Error(code, message); }

} // namespace qplex
