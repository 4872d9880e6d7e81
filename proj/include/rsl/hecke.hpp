#ifndef RSL_HECKE_HPP
#define RSL_HECKE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rsl {

/// Exact q-expansion coefficients a(n), 1 <= n <= cutoff, of the unique
/// normalized level-1 eigenform of the given weight (12,16,18,20,22,26),
/// as decimal strings (they overflow any machine word well before 10^4).
/// Delta is eta^24 via sparse Jacobi/Euler expansions; the other weights
/// multiply in E4/E6 powers.  cutoff > 10^4 throws cutoff_too_large.
std::vector<std::string> eigenform_expansion(int weight, std::int64_t cutoff);

/// tau(n) for n <= cutoff (weight-12 row of the above).
std::vector<std::string> tau_expansion(std::int64_t cutoff);

struct hecke_table {
    int weight = 12;
    std::int64_t cutoff = 0;                 // primes p <= cutoff covered
    std::vector<std::int64_t> prime;         // ascending
    std::vector<double> lambda;              // a_p p^{-(k-1)/2}
};

/// Normalized eigenvalues at primes.  Weight 12 is served to ~3e6 by a
/// binary64 eta-power convolution (validated against the exact expansion in
/// the tests); the other weights stay at the exact desk cutoff 10^4.
const hecke_table& hecke_eigenvalues(int weight, std::int64_t cutoff);

/// Cache-bypassing build (reproducibility checks re-run it under different
/// worker counts and compare bytes).
hecke_table hecke_eigenvalues_uncached(int weight, std::int64_t cutoff);

std::int64_t hecke_prime_cutoff_cap(int weight);

} // namespace rsl

#endif
