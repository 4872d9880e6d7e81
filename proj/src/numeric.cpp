#include "rsl/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <thread>

#include "rsl/errors.hpp"

namespace rsl {

const char* errc_name(errc e) {
    switch (e) {
        case errc::ramified_prime: return "RamifiedPrime";
        case errc::unsupported: return "Unsupported";
        case errc::non_real_coefficient: return "NonRealCoefficient";
        case errc::cutoff_too_large: return "CutoffTooLarge";
        case errc::bad_spec: return "BadSpec";
        case errc::unsupported_field: return "UnsupportedField";
        case errc::stream_too_short: return "StreamTooShort";
        case errc::divergent_local_factor: return "DivergentLocalFactor";
        case errc::count_mismatch: return "CountMismatch";
        case errc::incomplete_set: return "IncompleteSet";
        case errc::degenerate_region: return "DegenerateRegion";
        case errc::inadmissible_parameters: return "InadmissibleParameters";
        case errc::exhausted_range: return "ExhaustedRange";
        case errc::kappa_unavailable: return "KappaUnavailable";
        case errc::usage: return "Usage";
    }
    return "Error";
}

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n); }

int max_threads() {
    int n = g_max_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void parallel_for(std::int64_t lo, std::int64_t hi,
                  const std::function<void(std::int64_t)>& f, int threads) {
    if (hi <= lo) return;
    if (threads <= 0) threads = max_threads();
    if (threads <= 1 || hi - lo == 1) {
        for (std::int64_t i = lo; i < hi; ++i) f(i);
        return;
    }
    std::atomic<std::int64_t> next{lo};
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= hi) return;
            f(i);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::uint64_t fnv1a(const void* data, std::size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = fnv1a(bytes.data(), bytes.size());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace rsl
