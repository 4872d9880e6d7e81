#include "rsl/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::int64_t primitive_root(std::int64_t p, std::int64_t pk, std::int64_t phi) {
    // factor phi, test candidates; moduli are tiny here
    std::vector<std::int64_t> fac;
    std::int64_t m = phi;
    for (std::int64_t f = 2; f * f <= m; ++f)
        if (m % f == 0) {
            fac.push_back(f);
            while (m % f == 0) m /= f;
        }
    if (m > 1) fac.push_back(m);
    for (std::int64_t g = 2; g < pk; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (std::int64_t f : fac)
            if (powmod(g, phi / f, pk) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw error(errc::bad_spec, "no primitive root found");
}

int vp(std::int64_t e, std::int64_t p) {
    int v = 0;
    while (e % p == 0) { e /= p; ++v; }
    return v;
}

} // namespace

dirichlet_group::dirichlet_group(std::int64_t q) : q_(q) {
    if (q < 1) throw error(errc::bad_spec, "modulus must be positive");
    phi_ = 1;
    std::vector<std::pair<std::int64_t, int>> factors; // (p, k)
    std::int64_t m = q;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        int k = 0;
        while (m % p == 0) { m /= p; ++k; }
        factors.push_back({p, k});
    }
    if (m > 1) factors.push_back({m, 1});
    for (auto [p, k] : factors) {
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (p == 2) {
            if (k == 2) {
                comps_.push_back({2, 4, 3, 2, false});
            } else if (k >= 3) {
                comps_.push_back({2, pk, pk - 1, 2, true}); // <-1>
                comps_.push_back({2, pk, 5, pk / 4, false}); // <5>, order 2^{k-2}
            }
            // k == 1 contributes nothing
        } else {
            std::int64_t phi = pk / p * (p - 1);
            comps_.push_back({p, pk, primitive_root(p, pk, phi), phi, false});
        }
        phi_ *= pk / p * (p - 1);
    }
    for (const auto& c : comps_) total_orders_.push_back(c.ord);
}

std::vector<std::int64_t> dirichlet_group::dlog(std::int64_t a) const {
    a %= q_;
    if (a < 0) a += q_;
    std::vector<std::int64_t> logs;
    std::size_t i = 0;
    while (i < comps_.size()) {
        const auto& c = comps_[i];
        std::int64_t r = a % c.pk;
        if (c.two_part) {
            // components <-1>, <5> of (Z/2^k)^*: split off the sign by r mod 4
            const auto& c5 = comps_[i + 1];
            std::int64_t sign = (r % 4 == 3) ? 1 : 0;
            std::int64_t r5 = sign ? (c.pk - r) % c.pk : r;
            std::int64_t x = 1;
            std::int64_t j = 0;
            for (; j < c5.ord; ++j) {
                if (x == r5) break;
                x = x * 5 % c.pk;
            }
            if (j == c5.ord) throw error(errc::bad_spec, "dlog failure mod 2^k");
            logs.push_back(sign);
            logs.push_back(j);
            i += 2;
        } else {
            std::int64_t x = 1, j = 0;
            for (; j < c.ord; ++j) {
                if (x == r) break;
                x = x * c.g % c.pk;
            }
            if (j == c.ord) throw error(errc::bad_spec, "dlog failure");
            logs.push_back(j);
            ++i;
        }
    }
    return logs;
}

std::vector<std::int64_t> dirichlet_group::exponents(std::int64_t index) const {
    if (index < 0 || index >= phi_) throw error(errc::bad_spec, "character index out of range");
    std::vector<std::int64_t> e;
    for (std::int64_t ord : total_orders_) {
        e.push_back(index % ord);
        index /= ord;
    }
    return e;
}

cplx dirichlet_group::chi(std::int64_t index, std::int64_t a) const {
    std::int64_t r = a % q_;
    if (r < 0) r += q_;
    if (q_ > 1 && std::gcd(r, q_) != 1) return {0.0, 0.0};
    auto e = exponents(index);
    auto l = dlog(r);
    double angle = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        angle += 2.0 * std::numbers::pi * double(e[i]) * double(l[i]) / double(total_orders_[i]);
    return {std::cos(angle), std::sin(angle)};
}

std::int64_t dirichlet_group::conductor(std::int64_t index) const {
    auto e = exponents(index);
    std::int64_t cond = 1;
    std::size_t i = 0, ei = 0;
    while (i < comps_.size()) {
        const auto& c = comps_[i];
        if (c.two_part) {
            std::int64_t esign = e[ei], e5 = e[ei + 1];
            const auto& c5 = comps_[i + 1];
            if (e5 != 0) {
                int k = 0;
                for (std::int64_t t = c.pk; t > 1; t /= 2) ++k;
                int m = k - std::min<std::int64_t>(vp(e5, 2), k - 3);
                cond *= std::int64_t(1) << m;
            } else if (esign != 0) {
                cond *= 4;
            }
            (void)c5;
            i += 2;
            ei += 2;
        } else {
            std::int64_t ex = e[ei];
            if (ex != 0) {
                if (c.p == 2) {
                    cond *= 4; // the mod-4 component
                } else {
                    int k = 0;
                    for (std::int64_t t = c.pk; t > 1; t /= c.p) ++k;
                    int m = k - std::min<int>(vp(ex, c.p), k - 1);
                    std::int64_t pm = 1;
                    for (int j = 0; j < m; ++j) pm *= c.p;
                    cond *= pm;
                }
            }
            ++i;
            ++ei;
        }
    }
    return cond;
}

bool dirichlet_group::is_odd(std::int64_t index) const {
    cplx v = chi(index, q_ - 1);
    return v.real() < 0.0;
}

} // namespace rsl
