#include "rsl/hecke.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "rsl/errors.hpp"
#include "rsl/numeric.hpp"
#include "rsl/primes.hpp"

namespace rsl {

namespace {

constexpr std::int64_t kExactCap = 10'000;     // desk cutoff for exact expansions
constexpr std::int64_t kLongCap = 2'750'000;   // weight-12 binary64 stream

// eta(q)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}   (Jacobi)
std::vector<std::pair<std::int64_t, std::int64_t>> eta3_sparse(std::int64_t max_index) {
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;
    for (std::int64_t k = 0;; ++k) {
        std::int64_t idx = k * (k + 1) / 2;
        if (idx > max_index) break;
        terms.push_back({idx, (k % 2 ? -(2 * k + 1) : (2 * k + 1))});
    }
    return terms;
}

// Exact coefficients of eta^24 up to q^{max_index}; Delta's a(n) is the
// coefficient of q^{n-1}.
std::vector<mpz_class> eta24_exact(std::int64_t max_index) {
    auto sp = eta3_sparse(max_index);
    std::vector<mpz_class> cur(std::size_t(max_index) + 1, mpz_class(0));
    for (auto [i, ci] : sp)
        for (auto [j, cj] : sp) {
            std::int64_t s = i + j;
            if (s > max_index) break;
            cur[std::size_t(s)] += ci * cj;
        }
    std::vector<mpz_class> nxt(std::size_t(max_index) + 1);
    for (int stage = 0; stage < 6; ++stage) {
        for (auto& v : nxt) v = 0;
        for (auto [t, c] : sp) {
            if (c >= 0)
                for (std::int64_t s = 0; s + t <= max_index; ++s)
                    mpz_addmul_ui(nxt[std::size_t(s + t)].get_mpz_t(), cur[std::size_t(s)].get_mpz_t(),
                                  static_cast<unsigned long>(c));
            else
                for (std::int64_t s = 0; s + t <= max_index; ++s)
                    mpz_submul_ui(nxt[std::size_t(s + t)].get_mpz_t(), cur[std::size_t(s)].get_mpz_t(),
                                  static_cast<unsigned long>(-c));
        }
        std::swap(cur, nxt);
    }
    return cur;
}

// sum_{d | n} d^r for n <= cutoff, exact.
std::vector<mpz_class> sigma_table(int r, std::int64_t cutoff) {
    std::vector<mpz_class> sig(std::size_t(cutoff) + 1, mpz_class(0));
    mpz_class dp;
    for (std::int64_t d = 1; d <= cutoff; ++d) {
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
        for (std::int64_t m = d; m <= cutoff; m += d) sig[std::size_t(m)] += dp;
    }
    return sig;
}

struct eisenstein_spec {
    int sigma_power;
    long coefficient;
};

// f/Delta lies in the one-dimensional space M_{k-12}, so each weight is
// Delta times a single Eisenstein series: E4, E6, E8 = E4^2, E10 = E4 E6,
// E14 = E4^2 E6.
eisenstein_spec eisenstein_for_weight(int weight) {
    switch (weight) {
        case 16: return {3, 240};
        case 18: return {5, -504};
        case 20: return {7, 480};
        case 22: return {9, -264};
        case 26: return {13, -24};
        default: throw error(errc::bad_spec, "unsupported level-1 weight " + std::to_string(weight));
    }
}

std::vector<mpz_class> eigenform_exact(int weight, std::int64_t cutoff) {
    auto d24 = eta24_exact(cutoff - 1); // Delta a(n) = d24[n-1]
    std::vector<mpz_class> a(std::size_t(cutoff) + 1, mpz_class(0));
    if (weight == 12) {
        for (std::int64_t n = 1; n <= cutoff; ++n) a[std::size_t(n)] = d24[std::size_t(n - 1)];
        return a;
    }
    auto es = eisenstein_for_weight(weight);
    auto sig = sigma_table(es.sigma_power, cutoff);
    // f = Delta * E: a(n) = Delta(n) + coef * sum_{m<n} Delta(m) sigma(n-m)
    for (std::int64_t n = 1; n <= cutoff; ++n) {
        mpz_class acc = d24[std::size_t(n - 1)];
        for (std::int64_t m = 1; m < n; ++m) {
            mpz_class term = sig[std::size_t(n - m)] * es.coefficient;
            acc += d24[std::size_t(m - 1)] * term;
        }
        a[std::size_t(n)] = acc;
    }
    return a;
}

// a_p only, avoiding the full O(P^2) product.
std::vector<mpz_class> eigenform_prime_coeffs(int weight, const std::vector<std::int64_t>& primes,
                                              std::int64_t cutoff) {
    auto d24 = eta24_exact(cutoff - 1);
    std::vector<mpz_class> out;
    out.reserve(primes.size());
    if (weight == 12) {
        for (auto p : primes) out.push_back(d24[std::size_t(p - 1)]);
        return out;
    }
    auto es = eisenstein_for_weight(weight);
    auto sig = sigma_table(es.sigma_power, cutoff);
    mpz_class acc, term;
    for (auto p : primes) {
        acc = d24[std::size_t(p - 1)];
        for (std::int64_t m = 1; m < p; ++m) {
            term = sig[std::size_t(p - m)] * es.coefficient;
            mpz_addmul(acc.get_mpz_t(), d24[std::size_t(m - 1)].get_mpz_t(), term.get_mpz_t());
        }
        out.push_back(acc);
    }
    return out;
}

// Binary64 eta^24 up to max_index, block-parallel with a fixed accumulation
// order (ascending Jacobi term index per output slot).
std::vector<double> eta24_double(std::int64_t max_index) {
    auto sp = eta3_sparse(max_index);
    std::vector<double> cur(std::size_t(max_index) + 1, 0.0);
    for (auto [i, ci] : sp)
        for (auto [j, cj] : sp) {
            std::int64_t s = i + j;
            if (s > max_index) break;
            cur[std::size_t(s)] += double(ci) * double(cj);
        }
    std::vector<double> nxt(std::size_t(max_index) + 1);
    const std::int64_t block = 1 << 16;
    std::int64_t nblocks = (max_index + block) / block;
    for (int stage = 0; stage < 6; ++stage) {
        std::fill(nxt.begin(), nxt.end(), 0.0);
        parallel_for(0, nblocks, [&](std::int64_t b) {
            std::int64_t lo = b * block;
            std::int64_t hi = std::min<std::int64_t>(max_index + 1, lo + block);
            for (auto [t, c] : sp) {
                std::int64_t i0 = std::max<std::int64_t>(lo, t);
                const double* a = cur.data() + (i0 - t);
                double* y = nxt.data() + i0;
                double cd = double(c);
                for (std::int64_t i = i0; i < hi; ++i) *y++ += cd * *a++;
            }
        }, max_threads());
        std::swap(cur, nxt);
    }
    return cur;
}

std::mutex g_mu;
std::map<int, hecke_table> g_tables;

hecke_table build_table(int weight, std::int64_t cutoff) {
    hecke_table t;
    t.weight = weight;
    t.cutoff = cutoff;
    t.prime = primes_up_to(cutoff);
    double half = (weight - 1) / 2.0;
    if (weight == 12) {
        auto d24 = eta24_double(cutoff - 1);
        for (auto p : t.prime)
            t.lambda.push_back(d24[std::size_t(p - 1)] / std::pow(double(p), half));
    } else {
        auto ap = eigenform_prime_coeffs(weight, t.prime, cutoff);
        for (std::size_t i = 0; i < t.prime.size(); ++i)
            t.lambda.push_back(ap[i].get_d() / std::pow(double(t.prime[i]), half));
    }
    return t;
}

} // namespace

std::int64_t hecke_prime_cutoff_cap(int weight) {
    return weight == 12 ? kLongCap : kExactCap;
}

std::vector<std::string> eigenform_expansion(int weight, std::int64_t cutoff) {
    if (cutoff > kExactCap)
        throw error(errc::cutoff_too_large,
                    "exact q-expansions are capped at " + std::to_string(kExactCap));
    if (cutoff < 1) throw error(errc::bad_spec, "cutoff must be >= 1");
    if (weight != 12) eisenstein_for_weight(weight); // validates the weight
    auto a = eigenform_exact(weight, cutoff);
    std::vector<std::string> out(std::size_t(cutoff) + 1, "0");
    for (std::int64_t n = 1; n <= cutoff; ++n) out[std::size_t(n)] = a[std::size_t(n)].get_str();
    return out;
}

std::vector<std::string> tau_expansion(std::int64_t cutoff) {
    return eigenform_expansion(12, cutoff);
}

hecke_table hecke_eigenvalues_uncached(int weight, std::int64_t cutoff) {
    if (cutoff > hecke_prime_cutoff_cap(weight))
        throw error(errc::cutoff_too_large,
                    "weight " + std::to_string(weight) + " eigenvalues are capped at " +
                        std::to_string(hecke_prime_cutoff_cap(weight)));
    return build_table(weight, cutoff);
}

const hecke_table& hecke_eigenvalues(int weight, std::int64_t cutoff) {
    if (cutoff > hecke_prime_cutoff_cap(weight))
        throw error(errc::cutoff_too_large,
                    "weight " + std::to_string(weight) + " eigenvalues are capped at " +
                        std::to_string(hecke_prime_cutoff_cap(weight)));
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_tables.find(weight);
    if (it == g_tables.end() || it->second.cutoff < cutoff) {
        hecke_table t = build_table(weight, cutoff);
        it = g_tables.insert_or_assign(weight, std::move(t)).first;
    }
    return it->second;
}

} // namespace rsl
