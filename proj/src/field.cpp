#include "rsl/field.hpp"

#include <cmath>
#include <cstdlib>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

bool squarefree(std::int64_t n) {
    n = std::llabs(n);
    for (std::int64_t f = 2; f * f <= n; ++f)
        while (n % f == 0) {
            n /= f;
            if (n % f == 0) return false;
        }
    return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

field_descriptor field_descriptor::rationals() {
    field_descriptor f;
    f.kind = field_kind::rationals;
    f.degree = 1;
    f.discriminant = 1;
    f.disc_signed = 1;
    f.places = {archimedean_place{false}};
    return f;
}

field_descriptor field_descriptor::quadratic(std::int64_t d) {
    if (d == 0 || d == 1) throw error(errc::bad_spec, "quadratic field needs d != 0, 1");
    std::int64_t radicand = d;
    if (!squarefree(d)) {
        // accept fundamental discriminants like 8, -4, 12 as input
        if (d % 4 == 0 && squarefree(d / 4) && mod(d / 4, 4) != 1)
            radicand = d / 4;
        else
            throw error(errc::bad_spec, "d must be squarefree or a fundamental discriminant");
    }
    field_descriptor f;
    f.kind = field_kind::quadratic;
    f.d = radicand;
    f.degree = 2;
    f.disc_signed = (mod(radicand, 4) == 1) ? radicand : 4 * radicand;
    f.discriminant = std::llabs(f.disc_signed);
    if (radicand > 0)
        f.places = {archimedean_place{false}, archimedean_place{false}};
    else
        f.places = {archimedean_place{true}};
    return f;
}

std::string field_descriptor::label() const {
    if (is_rational()) return "Q";
    return "Q(sqrt(" + std::to_string(d) + "))";
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    // strip factors of 2 from n: (a|2) table
    auto a8 = [](std::int64_t x) { std::int64_t r = x % 8; return r < 0 ? r + 8 : r; };
    int v2 = 0;
    while (n % 2 == 0) { n /= 2; ++v2; }
    if (v2) {
        if (a % 2 == 0) return 0;
        if (v2 % 2 == 1 && (a8(a) == 3 || a8(a) == 5)) sign = -sign;
    }
    a = mod(a, n);
    // now the Jacobi symbol (a|n), n odd positive
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a = mod(a, n);
    }
    return n == 1 ? sign : 0;
}

} // namespace rsl
