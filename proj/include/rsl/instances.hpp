#ifndef RSL_INSTANCES_HPP
#define RSL_INSTANCES_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsl/representation.hpp"

namespace rsl {

enum class instance_kind { zeta, dirichlet, dedekind_quadratic, holomorphic };

/// Parsed instance selector: "zeta", "dirichlet:q:j", "dedekind:d",
/// "holomorphic:k".
struct instance_spec {
    instance_kind kind = instance_kind::zeta;
    std::int64_t q = 0;      // dirichlet modulus
    std::int64_t index = 0;  // dirichlet character index
    std::int64_t d = 0;      // quadratic radicand / fundamental discriminant
    int weight = 0;          // holomorphic weight

    static instance_spec parse(const std::string& text);
    std::string label() const;
};

/// Build the representation with Satake data at every prime ideal of norm
/// <= cutoff.  Throws bad_spec for malformed selectors (imprimitive
/// characters, unsupported weights, non-fundamental d).
representation make_instance(const instance_spec& spec, std::int64_t cutoff);
representation make_instance(const std::string& spec, std::int64_t cutoff);

/// The canonical curated list used by the acceptance suite: zeta, a spread
/// of primitive characters, the four quadratic fields, the six level-1
/// weights.
std::vector<instance_spec> curated_instances();

/// Residue kappa of L(s, pi x pi~) at s = 1.
///   zeta -> 1; primitive chi -> phi(q)/q; quadratic trivial -> class number
///   formula constants; holomorphic -> empirical estimator (see sieve).
/// Returns nullopt when only the empirical path exists.
std::optional<double> known_kappa(const representation& rep);

/// Raise stream_too_short unless satake data reaches `needed`.
void require_cutoff(const representation& rep, std::int64_t needed);

} // namespace rsl

#endif
