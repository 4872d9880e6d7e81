#include "rsl/stream.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "rsl/coeffs.hpp"
#include "rsl/errors.hpp"

namespace rsl {

coeff_stream prime_power_stream(const representation& rep, std::int64_t cutoff) {
    require_cutoff(rep, cutoff);
    coeff_stream st;
    st.cutoff = cutoff;
    for (const auto& [pnorm, locs] : rep.satake) {
        if (pnorm > cutoff) break;
        for (const auto& loc : locs) {
            rs_local rs = rs_local_of(loc);
            int k_max = 0;
            std::int64_t top = 1;
            while (top <= cutoff / pnorm) { top *= pnorm; ++k_max; }
            auto lam = rs_local_coeffs(rs, k_max);
            cplx std_sum{0, 0};
            for (const cplx& a : loc.alphas) std_sum += a;
            std::int64_t n = 1;
            for (int k = 1; k <= k_max; ++k) {
                n *= pnorm;
                pp_entry e;
                e.norm = n;
                e.pnorm = pnorm;
                e.k = k;
                e.lambda = lam[std::size_t(k)];
                e.vonmangoldt = rs_vonmangoldt(rs, k);
                e.std_lambda_sq = (k == 1) ? std::norm(std_sum) : 0.0;
                st.entries.push_back(e);
            }
        }
    }
    std::sort(st.entries.begin(), st.entries.end(),
              [](const pp_entry& a, const pp_entry& b) {
                  return a.norm != b.norm ? a.norm < b.norm
                                          : std::tie(a.pnorm, a.k) < std::tie(b.pnorm, b.k);
              });
    return st;
}

namespace {
std::mutex g_stream_mu;
std::map<std::string, std::shared_ptr<const coeff_stream>> g_streams;
} // namespace

std::shared_ptr<const coeff_stream> shared_stream(const representation& rep, std::int64_t cutoff) {
    {
        std::lock_guard<std::mutex> lk(g_stream_mu);
        auto it = g_streams.find(rep.label);
        if (it != g_streams.end() && it->second->cutoff >= cutoff) return it->second;
    }
    auto st = std::make_shared<const coeff_stream>(prime_power_stream(rep, cutoff));
    std::lock_guard<std::mutex> lk(g_stream_mu);
    auto& slot = g_streams[rep.label];
    if (!slot || slot->cutoff < st->cutoff) slot = st;
    return slot;
}

prime_ideal_table instance_ideal_table(const representation& rep, std::int64_t cutoff) {
    require_cutoff(rep, cutoff);
    return enumerate_prime_ideals(rep.field, cutoff);
}

std::vector<std::vector<double>> rs_lambda_powers(const representation& rep,
                                                  const prime_ideal_table& table,
                                                  std::int64_t cutoff) {
    std::vector<std::vector<double>> out(table.ideals.size());
    std::map<std::int64_t, std::size_t> seen; // positional match within a norm class
    for (std::size_t i = 0; i < table.ideals.size(); ++i) {
        const auto& id = table.ideals[i];
        auto it = rep.satake.find(id.norm);
        if (it == rep.satake.end())
            throw error(errc::stream_too_short,
                        "no Satake data at norm " + std::to_string(id.norm));
        std::size_t which = seen[id.norm]++;
        const satake_local& loc = it->second.at(which);
        int k_max = 0;
        std::int64_t top = 1;
        while (top <= cutoff / id.norm) { top *= id.norm; ++k_max; }
        out[i] = rs_local_coeffs(rs_local_of(loc), k_max);
    }
    return out;
}

} // namespace rsl
