#ifndef RSL_REPORT_HPP
#define RSL_REPORT_HPP

#include <map>
#include <string>

#include <json.hpp>

namespace rsl {

using json = nlohmann::ordered_json;

/// Standard per-op report envelope {op, instance, params, value, bound,
/// ratio, pass} plus op-specific extras.
json make_report(const std::string& op, const std::string& instance, const json& params,
                 double value, double bound, double ratio, bool pass);

/// Reproducible-run manifest: command, instance, resolved parameters, seed,
/// artifact version and FNV-1a digests of every written file.  Identical
/// manifests must produce byte-identical outputs, so nothing time-dependent
/// goes in here.
struct run_manifest {
    std::string command;
    std::string instance;
    json params;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> output_digests;

    json to_json() const;
};

extern const char* artifact_version;

/// Write a file and record its digest in the manifest.
void emit_file(run_manifest& manifest, const std::string& dir, const std::string& name,
               const std::string& bytes);

} // namespace rsl

#endif
