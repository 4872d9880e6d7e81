#ifndef RSL_NUMERIC_HPP
#define RSL_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace rsl {

using cplx = std::complex<double>;

/// Neumaier-compensated accumulator.  All long sums in the library run
/// through this so that reports are reproducible to the last bit and
/// cancellation noise stays well under the contract tolerances.
class comp_sum {
public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// Run f(i) for i in [lo, hi) on `threads` workers; f must only write to
/// i-indexed slots so the result is order-independent.
void parallel_for(std::int64_t lo, std::int64_t hi,
                  const std::function<void(std::int64_t)>& f, int threads);

/// Global worker cap set by the CLI --threads flag (default: 0 = hardware).
void set_max_threads(int n);
int max_threads();

/// FNV-1a 64-bit digest used for run-manifest output hashes.
std::uint64_t fnv1a(const void* data, std::size_t n);
std::string digest_hex(const std::string& bytes);

} // namespace rsl

#endif
