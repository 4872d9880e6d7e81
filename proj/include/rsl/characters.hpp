#ifndef RSL_CHARACTERS_HPP
#define RSL_CHARACTERS_HPP

#include <cstdint>
#include <vector>

#include "rsl/numeric.hpp"

namespace rsl {

/// Character group of (Z/q)^*.  Characters are indexed 0..phi(q)-1 through
/// exponent vectors on the cyclic decomposition (index 0 = principal).
class dirichlet_group {
public:
    explicit dirichlet_group(std::int64_t q);

    std::int64_t modulus() const { return q_; }
    std::int64_t order() const { return phi_; }

    /// chi_index(a); 0 for gcd(a,q) > 1.
    cplx chi(std::int64_t index, std::int64_t a) const;

    /// Conductor of chi_index (product of component conductors).
    std::int64_t conductor(std::int64_t index) const;
    bool is_primitive(std::int64_t index) const { return conductor(index) == q_; }

    /// chi(-1) = +1 (even) or -1 (odd).
    bool is_odd(std::int64_t index) const;

private:
    struct component {
        std::int64_t p = 0, pk = 1;   // prime and prime power
        std::int64_t g = 0;           // generator of (Z/p^k)^* (odd p, or the 5-part mod 2^k)
        std::int64_t ord = 1;         // its order
        bool two_part = false;        // extra C2 generated by -1 (q divisible by 8 handling)
    };
    std::int64_t q_, phi_;
    std::vector<component> comps_;
    std::vector<std::int64_t> total_orders_; // mixed-radix sizes for index decoding

    std::vector<std::int64_t> dlog(std::int64_t a) const;       // discrete logs per component
    std::vector<std::int64_t> exponents(std::int64_t index) const;
};

} // namespace rsl

#endif
