#ifndef RSL_STREAM_HPP
#define RSL_STREAM_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "rsl/ideals.hpp"
#include "rsl/instances.hpp"

namespace rsl {

/// One prime-ideal-power entry of the Rankin-Selberg Dirichlet data.
struct pp_entry {
    std::int64_t norm;     // N(p)^k
    std::int64_t pnorm;    // N(p)
    int k;                 // ideal exponent
    double lambda;         // lambda_{pi x pi~}(p^k)
    double vonmangoldt;    // Lambda_{pi x pi~}(p^k)
    double std_lambda_sq;  // |lambda_pi(p)|^2 (k = 1 only, else 0)
};

/// Norm-sorted prime-power coefficient stream up to cutoff.  Entries are
/// per-ideal, so split primes contribute two rows of equal norm; Lambda is
/// nonzero only here (prime-ideal powers), which is all psi-type sums need.
struct coeff_stream {
    std::int64_t cutoff = 0;
    std::vector<pp_entry> entries;
};

coeff_stream prime_power_stream(const representation& rep, std::int64_t cutoff);

/// Process-wide cache of prime-power streams keyed by instance label;
/// rebuilt (and the larger one kept) when a caller needs a higher cutoff.
std::shared_ptr<const coeff_stream> shared_stream(const representation& rep, std::int64_t cutoff);

/// The prime-ideal table the representation's Satake data was built on.
prime_ideal_table instance_ideal_table(const representation& rep, std::int64_t cutoff);

/// lambda_{pi x pi~}(p^k) table per prime ideal, for full multiplicative
/// enumeration: lam[i][k] is the local coefficient at table.ideals[i]^k,
/// k = 0..floor(log cutoff / log Np).
std::vector<std::vector<double>> rs_lambda_powers(const representation& rep,
                                                  const prime_ideal_table& table,
                                                  std::int64_t cutoff);

} // namespace rsl

#endif
