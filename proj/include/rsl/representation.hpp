#ifndef RSL_REPRESENTATION_HPP
#define RSL_REPRESENTATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsl/field.hpp"
#include "rsl/numeric.hpp"

namespace rsl {

/// theta_n = 1/2 - 1/(n^2+1), the unconditional bound toward Ramanujan.
inline double theta_bound(int n) { return 0.5 - 1.0 / (double(n) * n + 1.0); }

/// Satake data of one local factor.  `ramified` means the prime divides the
/// arithmetic conductor of the representation (zero parameters allowed
/// there); it is unrelated to ramification of the prime in the base field.
struct satake_local {
    std::int64_t norm = 0;     // N(p)
    int residue_degree = 1;
    bool ramified = false;
    std::vector<cplx> alphas;  // n entries
};

/// One gamma-factor slot Gamma_v(s + mu) with conductor weight d(v).
struct arch_factor {
    int dv = 1;
    cplx mu{0.0, 0.0};
};

struct rs_local {
    std::int64_t norm = 0;
    std::vector<cplx> rs_alphas; // n^2 entries (empty at curated ramified primes)
};

/// A concrete automorphic representation: degree, base field, conductor,
/// per-prime Satake parameters and archimedean parameters.  Rankin-Selberg
/// conductor data is instance-supplied (the paper only gives divisibility),
/// so it travels with the object.
struct representation {
    std::string label;
    int n = 1;
    field_descriptor field;
    std::int64_t conductor_norm = 1;        // N(q_pi)
    std::vector<arch_factor> arch;          // standard gamma factors
    std::vector<arch_factor> rs_arch;       // gamma factors of pi x pi~
    std::int64_t rs_conductor_norm = 1;     // N(q_{pi x pi~})
    std::map<std::int64_t, std::vector<satake_local>> satake; // keyed by norm; split primes give two entries
    std::int64_t satake_cutoff = 0;         // all prime ideals with norm <= cutoff present

    int degree_f() const { return field.degree; }

    /// All local factors in ascending norm order (split pairs adjacent).
    std::vector<const satake_local*> locals_by_norm() const;
};

/// JSON (de)serialization with the fixed schema
/// {label, n, field:{kind,d}, conductor, arch:[[re,im],...],
///  satake:[{norm, degree, ramified, alphas:[[re,im],...]}]}.
/// An optional "rs" extension carries the instance RS conductor data; when
/// absent the loader falls back to the archimedean sum rule and the
/// Bushnell-Henniart divisibility bound.
std::string to_json(const representation& rep, int indent = 2);
representation representation_from_json(const std::string& text);

/// RS arch factors from the standard ones by the unramified sum rule
/// {mu_j + conj(mu_j')} applied per place.
std::vector<arch_factor> rs_arch_sum_rule(const representation& rep);

} // namespace rsl

#endif
