#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "c0/oracle.hpp"

namespace c0 {

inline constexpr const char* kArtifactName = "c0lab";
inline constexpr const char* kArtifactVersion = "0.1.0";

// An invariant subspace given by its generator list.
struct Instance {
  ModelPair pair;
  std::vector<ModelVector> generators;
};

// All the options that influence an invocation; embedded in every report so
// a run is reproducible from its own output.
struct RunConfig {
  std::string command;
  std::optional<ModelPair> theta;  // subject pair, when the command names one
  std::uint64_t seed = 1;
  int trials = 64;
  int budget = 200;
  bool exact_certificate = false;
  std::string format = "json";  // "json" or "text"
};

nlohmann::json to_json(const RunConfig& c);

// Polynomials exchange as arrays of coefficient strings in the scalar
// grammar, ascending by exponent.
nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j, int degree_cap, const std::string& what);

nlohmann::json model_vector_to_json(const ModelVector& v);
nlohmann::json subspace_to_json(const Subspace& m);

// Instance document: {"theta": [n0, n1], "generators": [{"h0": [...], "h1": [...]}, ...]}.
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance(const std::string& path);

nlohmann::json commutant_to_json(const CommutantElement& a);
CommutantElement commutant_from_json(const nlohmann::json& j, const ModelPair& p);

nlohmann::json partition_to_json(const Partition& p);
nlohmann::json jordan_data_to_json(const JordanData& d);
nlohmann::json triple_to_json(const Triple& t);
nlohmann::json verdict_to_json(const Verdict& v, std::uint64_t seed);

// Report envelope: {"artifact": {...}, "config": {...}, "report": {...}}.
nlohmann::json make_report(const RunConfig& config, nlohmann::json body);

// "json" renders compact, "text" renders pretty-printed (lossless); both are
// byte-deterministic for a fixed report.
std::string render_report(const nlohmann::json& report, const std::string& format);

}  // namespace c0
