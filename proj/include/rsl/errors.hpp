#ifndef RSL_ERRORS_HPP
#define RSL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsl {

enum class errc {
    ramified_prime,
    unsupported,
    non_real_coefficient,
    cutoff_too_large,
    bad_spec,
    unsupported_field,
    stream_too_short,
    divergent_local_factor,
    count_mismatch,
    incomplete_set,
    degenerate_region,
    inadmissible_parameters,
    exhausted_range,
    kappa_unavailable,
    usage,
};

const char* errc_name(errc e);

/// Single exception type; `kind()` distinguishes the contract violations
/// named in the operation error lists.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what_arg)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what_arg), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

} // namespace rsl

#endif
