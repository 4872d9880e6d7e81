#include "rsl/report.hpp"

#include <filesystem>
#include <fstream>

#include "rsl/numeric.hpp"

namespace rsl {

const char* artifact_version = "0.1.0";

json make_report(const std::string& op, const std::string& instance, const json& params,
                 double value, double bound, double ratio, bool pass) {
    json j;
    j["op"] = op;
    j["instance"] = instance;
    j["params"] = params;
    j["value"] = value;
    j["bound"] = bound;
    j["ratio"] = ratio;
    j["pass"] = pass;
    return j;
}

json run_manifest::to_json() const {
    json j;
    j["command"] = command;
    j["instance"] = instance;
    j["params"] = params;
    j["seed"] = seed;
    j["artifact_version"] = artifact_version;
    json outs;
    for (const auto& [name, digest] : output_digests) outs[name] = digest;
    j["outputs"] = outs;
    return j;
}

void emit_file(run_manifest& manifest, const std::string& dir, const std::string& name,
               const std::string& bytes) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + name, std::ios::binary);
    out.write(bytes.data(), std::streamsize(bytes.size()));
    manifest.output_digests[name] = digest_hex(bytes);
}

} // namespace rsl
