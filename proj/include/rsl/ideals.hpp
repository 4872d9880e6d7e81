#ifndef RSL_IDEALS_HPP
#define RSL_IDEALS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rsl/field.hpp"

namespace rsl {

struct prime_ideal {
    std::int64_t norm = 0;
    int residue_degree = 1;
    bool field_ramified = false;   // p | D_F
    std::int64_t p = 0;            // underlying rational prime
    int conjugate_index = 0;       // 0/1 for the two primes above a split p
};

struct prime_ideal_table {
    field_descriptor field;
    std::int64_t cutoff = 0;
    std::vector<prime_ideal> ideals; // norm-sorted
};

/// All prime ideals of norm <= x.  Splitting for quadratic(d) is decided by
/// the Kronecker symbol (D_F | p): +1 split, -1 inert, 0 ramified.
prime_ideal_table enumerate_prime_ideals(const field_descriptor& field, std::int64_t x);

struct ideal_count_report {
    double z = 0, eps = 0;
    std::int64_t count = 0;  // # integral ideals of norm <= z
    double bound = 0;        // (2/eps)^{[F:Q]} z^{1+eps}
    bool pass = false;
};

/// Weiss-style ideal-count bound check.
ideal_count_report ideal_count(const field_descriptor& field, double z, double eps);

struct omega_report {
    std::size_t omega = 0;
    double bound = 0;  // 6 e^{2/eps} [F:Q] + eps log Nd
    double log_norm = 0;
    bool pass = false;
};

/// omega(d) <= 6 e^{2/eps}[F:Q] + eps log Nd for a squarefree ideal given as
/// a list of distinct prime ideals.
omega_report prime_divisor_count_check(const std::vector<prime_ideal>& divisor_primes,
                                       double eps, int degree_f);

/// Depth-first enumeration of integral ideals of norm <= x as factored
/// products of the table's prime ideals.  `min_exponent(i)` forces prime i
/// to appear at least that often (divisibility constraints); `max_norm_of_p`
/// can skip primes entirely (z-rough enumerations pass a predicate).
/// Callback receives (norm, exponent vector index list) via per-prime
/// exponents maintained internally; visit receives norm and a span of
/// (prime index, exponent) pairs.
struct ideal_factor {
    std::size_t prime_index;
    int exponent;
};

void enumerate_ideals(const prime_ideal_table& table, std::int64_t max_norm,
                      const std::function<bool(std::size_t)>& include_prime,
                      const std::vector<std::pair<std::size_t, int>>& forced,
                      const std::function<void(std::int64_t, const std::vector<ideal_factor>&)>& visit);

} // namespace rsl

#endif
