#include "rsl/ideals.hpp"

#include <algorithm>
#include <cmath>

#include "rsl/errors.hpp"
#include "rsl/primes.hpp"

namespace rsl {

prime_ideal_table enumerate_prime_ideals(const field_descriptor& field, std::int64_t x) {
    if (field.kind != field_kind::rationals && field.kind != field_kind::quadratic)
        throw error(errc::unsupported_field, "only Q and quadratic fields are enumerable");
    prime_ideal_table t;
    t.field = field;
    t.cutoff = x;
    if (x < 2) return t;
    auto ps = primes_up_to(x);
    if (field.is_rational()) {
        for (auto p : ps) t.ideals.push_back({p, 1, false, p, 0});
        return t;
    }
    for (auto p : ps) {
        int chi = kronecker(field.disc_signed, p);
        if (chi == 0) {
            t.ideals.push_back({p, 1, true, p, 0});
        } else if (chi == 1) {
            t.ideals.push_back({p, 1, false, p, 0});
            t.ideals.push_back({p, 1, false, p, 1});
        } else if (p * p <= x) {
            t.ideals.push_back({p * p, 2, false, p, 0});
        }
    }
    std::sort(t.ideals.begin(), t.ideals.end(),
              [](const prime_ideal& a, const prime_ideal& b) {
                  return a.norm != b.norm ? a.norm < b.norm
                                          : std::tie(a.p, a.conjugate_index) <
                                                std::tie(b.p, b.conjugate_index);
              });
    return t;
}

ideal_count_report ideal_count(const field_descriptor& field, double z, double eps) {
    if (eps <= 0 || eps >= 1) throw error(errc::bad_spec, "need 0 < eps < 1");
    if (field.kind != field_kind::rationals && field.kind != field_kind::quadratic)
        throw error(errc::unsupported_field, "only Q and quadratic fields are countable");
    ideal_count_report r;
    r.z = z;
    r.eps = eps;
    std::int64_t zi = std::int64_t(std::floor(z));
    if (zi >= 1) {
        if (field.is_rational()) {
            r.count = zi;
        } else {
            // #ideals of norm m = sum_{e | m} chi_D(e); sieve over e
            std::vector<std::int32_t> a(std::size_t(zi) + 1, 0);
            for (std::int64_t e = 1; e <= zi; ++e) {
                int chi = kronecker(field.disc_signed, e);
                if (!chi) continue;
                for (std::int64_t m = e; m <= zi; m += e) a[std::size_t(m)] += chi;
            }
            std::int64_t total = 0;
            for (std::int64_t m = 1; m <= zi; ++m) total += a[std::size_t(m)];
            r.count = total;
        }
    }
    r.bound = std::pow(2.0 / eps, field.degree) * std::pow(z, 1.0 + eps);
    r.pass = double(r.count) <= r.bound;
    return r;
}

omega_report prime_divisor_count_check(const std::vector<prime_ideal>& divisor_primes,
                                       double eps, int degree_f) {
    omega_report r;
    r.omega = divisor_primes.size();
    double log_norm = 0;
    for (const auto& p : divisor_primes) log_norm += std::log(double(p.norm));
    r.log_norm = log_norm;
    r.bound = 6.0 * std::exp(2.0 / eps) * degree_f + eps * log_norm;
    r.pass = double(r.omega) <= r.bound;
    return r;
}

namespace {

struct ideal_enum {
    const prime_ideal_table& table;
    std::int64_t max_norm;
    const std::vector<std::size_t>& optional;
    const std::vector<std::pair<std::size_t, int>>& forced;
    const std::function<void(std::int64_t, const std::vector<ideal_factor>&)>& visit;
    std::vector<ideal_factor> factors;

    // optional primes: each chosen prime takes exponent >= 1
    void rec_optional(std::size_t pos, std::int64_t norm) {
        visit(norm, factors);
        for (std::size_t i = pos; i < optional.size(); ++i) {
            std::size_t pi = optional[i];
            std::int64_t pn = table.ideals[pi].norm;
            if (norm > max_norm / pn) break; // norm-sorted: later primes only larger
            std::int64_t cur = norm;
            int e = 0;
            while (cur <= max_norm / pn) {
                cur *= pn;
                ++e;
                factors.push_back({pi, e});
                rec_optional(i + 1, cur);
                factors.pop_back();
            }
        }
    }

    // forced primes must all appear, with exponent >= their minimum
    void rec_forced(std::size_t j, std::int64_t norm) {
        if (j == forced.size()) {
            rec_optional(0, norm);
            return;
        }
        auto [pi, min_e] = forced[j];
        std::int64_t pn = table.ideals[pi].norm;
        std::int64_t cur = norm;
        for (int i = 0; i < min_e; ++i) {
            if (cur > max_norm / pn) return; // forced part does not fit
            cur *= pn;
        }
        int e = min_e;
        for (;;) {
            factors.push_back({pi, e});
            rec_forced(j + 1, cur);
            factors.pop_back();
            if (cur > max_norm / pn) break;
            cur *= pn;
            ++e;
        }
    }
};

} // namespace

void enumerate_ideals(const prime_ideal_table& table, std::int64_t max_norm,
                      const std::function<bool(std::size_t)>& include_prime,
                      const std::vector<std::pair<std::size_t, int>>& forced,
                      const std::function<void(std::int64_t, const std::vector<ideal_factor>&)>& visit) {
    if (max_norm < 1) return;
    std::vector<char> is_forced(table.ideals.size(), 0);
    for (auto [idx, e] : forced) is_forced[idx] = 1;
    std::vector<std::size_t> optional;
    for (std::size_t i = 0; i < table.ideals.size(); ++i) {
        if (is_forced[i]) continue;
        if (include_prime && !include_prime(i)) continue;
        optional.push_back(i);
    }
    ideal_enum en{table, max_norm, optional, forced, visit, {}};
    en.rec_forced(0, 1);
}

} // namespace rsl
