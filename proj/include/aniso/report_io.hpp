// Serialization of sweep reports and inequality checks: ordered JSON and CSV
// with embedded config hash and library version, byte-stable across reruns
// of the same configuration.
#pragma once

#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <string>

#include "aniso/sweep_report.hpp"
#include "aniso/version.hpp"

namespace aniso {

// Shortest round-trip decimal; stable across reruns on the same build.
inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// FNV-1a over the canonicalized (sorted key=value) configuration.
inline std::uint64_t config_hash(const std::map<std::string, std::string>& kv) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [k, v] : kv) {
    feed(k);
    feed("=");
    feed(v);
    feed("\n");
  }
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::ordered_json sweep_to_json(const SweepReport& rep,
                                            const std::string& cfg_hash) {
  nlohmann::ordered_json j;
  j["kind"] = rep.kind;
  j["version"] = ANISO_VERSION;
  j["config_hash"] = cfg_hash;
  j["seed"] = rep.seed;
  j["verdict"] = to_string(rep.verdict);
  j["max_ratio"] = rep.max_ratio;
  if (rep.fit.valid) {
    j["fitted_slope"] = rep.fit.slope;
    j["r_squared"] = rep.fit.r_squared;
  }
  nlohmann::ordered_json meta;
  for (const auto& [k, v] : rep.metadata) meta[k] = v;
  j["metadata"] = meta;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : rep.points) {
    nlohmann::ordered_json q;
    q["scale"] = p.scale;
    if (!p.lambda.empty()) q["lambda"] = p.lambda;
    q["lhs"] = p.lhs;
    q["rhs"] = p.rhs;
    q["ratio"] = p.ratio;
    pts.push_back(q);
  }
  j["points"] = pts;
  return j;
}

inline std::string sweep_to_csv(const SweepReport& rep, const std::string& cfg_hash) {
  std::string out;
  out += "# kind=" + rep.kind + " version=" ANISO_VERSION " config_hash=" + cfg_hash +
         " seed=" + std::to_string(rep.seed) + "\n";
  std::size_t n_lambda = 0;
  for (const auto& p : rep.points) n_lambda = std::max(n_lambda, p.lambda.size());
  for (std::size_t a = 0; a < n_lambda; ++a)
    out += "lambda_" + std::to_string(a + 1) + ",";
  if (n_lambda == 0) out += "scale,";
  out += "lhs,rhs,ratio\n";
  for (const auto& p : rep.points) {
    if (n_lambda == 0) {
      out += fmt_double(p.scale) + ",";
    } else {
      for (std::size_t a = 0; a < n_lambda; ++a)
        out += fmt_double(a < p.lambda.size() ? p.lambda[a] : 1.0) + ",";
    }
    out += fmt_double(p.lhs) + "," + fmt_double(p.rhs) + "," + fmt_double(p.ratio) + "\n";
  }
  return out;
}

}  // namespace aniso
