#include "rsl/primes.hpp"

#include <algorithm>
#include <mutex>

namespace rsl {

namespace {
std::mutex g_mu;
std::vector<std::int64_t> g_primes; // ascending, sieved to g_limit
std::int64_t g_limit = 0;

void extend(std::int64_t x) {
    if (x <= g_limit) return;
    std::int64_t lim = std::max<std::int64_t>(x, 2 * g_limit);
    lim = std::max<std::int64_t>(lim, 1 << 16);
    std::vector<bool> comp(std::size_t(lim) + 1, false);
    g_primes.clear();
    for (std::int64_t i = 2; i <= lim; ++i) {
        if (!comp[std::size_t(i)]) {
            g_primes.push_back(i);
            for (std::int64_t j = i * i; j <= lim; j += i) comp[std::size_t(j)] = true;
        }
    }
    g_limit = lim;
}
} // namespace

std::vector<std::int64_t> primes_up_to(std::int64_t x) {
    std::lock_guard<std::mutex> lk(g_mu);
    extend(x);
    auto end = std::upper_bound(g_primes.begin(), g_primes.end(), x);
    return std::vector<std::int64_t>(g_primes.begin(), end);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

} // namespace rsl
