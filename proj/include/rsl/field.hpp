#ifndef RSL_FIELD_HPP
#define RSL_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rsl {

enum class field_kind { rationals, quadratic };

struct archimedean_place {
    bool complex_place = false; // d(v) = 2 when true, 1 otherwise
    int d() const { return complex_place ? 2 : 1; }
};

/// Base-field descriptor for Q and real/imaginary quadratic fields.
/// `d` is the squarefree radicand; the discriminant follows the usual rule
/// (d for d = 1 mod 4, 4d otherwise).
struct field_descriptor {
    field_kind kind = field_kind::rationals;
    std::int64_t d = 0;              // radicand, 0 for Q
    int degree = 1;                  // [F:Q]
    std::int64_t discriminant = 1;   // |D_F| and sign kept separately
    std::int64_t disc_signed = 1;    // D_F with sign (Kronecker argument)
    std::vector<archimedean_place> places;

    static field_descriptor rationals();
    /// Accepts a squarefree radicand, or a fundamental discriminant
    /// (e.g. 8 for Q(sqrt 2)); anything else is a bad_spec error.
    static field_descriptor quadratic(std::int64_t d);

    bool is_rational() const { return kind == field_kind::rationals; }
    std::string label() const;
};

/// Kronecker symbol (a|n) extended to all integers.
int kronecker(std::int64_t a, std::int64_t n);

} // namespace rsl

#endif
