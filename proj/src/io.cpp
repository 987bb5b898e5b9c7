#include "c0/io.hpp"

#include <fstream>

#include "c0/errors.hpp"

namespace c0 {

using nlohmann::json;

json to_json(const RunConfig& c) {
  json theta = nullptr;
  if (c.theta) theta = {c.theta->n0, c.theta->n1};
  return json{{"command", c.command}, {"theta", theta},
              {"seed", c.seed},       {"trials", c.trials},
              {"budget", c.budget},   {"exact_certificate", c.exact_certificate},
              {"format", c.format}};
}

json poly_to_json(const Poly& f) {
  json arr = json::array();
  for (int k = 0; k <= f.degree(); ++k) arr.push_back(to_string(f.at(k)));
  return arr;
}

Poly poly_from_json(const json& j, int degree_cap, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of coefficient strings");
  if (static_cast<int>(j.size()) > degree_cap)
    throw ParseError(what + " has " + std::to_string(j.size()) + " coefficients, degree cap is " +
                     std::to_string(degree_cap));
  std::vector<GaussianRational> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.push_back(GaussianRational(static_cast<int>(c.get<long>())));
    } else if (c.is_string()) {
      coeffs.push_back(parse_gaussian(c.get<std::string>()));
    } else {
      throw ParseError(what + " coefficients must be strings (or plain integers)");
    }
  }
  return Poly(std::move(coeffs));
}

json model_vector_to_json(const ModelVector& v) {
  return json{{"h0", poly_to_json(v.h0)}, {"h1", poly_to_json(v.h1)}};
}

json subspace_to_json(const Subspace& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(model_vector_to_json(g));
  return json{{"theta", {m.pair().n0, m.pair().n1}}, {"generators", gens}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("generators"))
    throw ParseError("instance must be an object with 'theta' and 'generators'");
  const json& theta = j.at("theta");
  if (!theta.is_array() || theta.size() != 2 || !theta[0].is_number_integer() || !theta[1].is_number_integer())
    throw ParseError("'theta' must be a pair of integers [n0, n1]");
  int n0 = theta[0].get<int>(), n1 = theta[1].get<int>();
  if (n1 < 0 || n0 < n1 || n0 + n1 < 1) throw ParseError("'theta' must satisfy n0 >= n1 >= 0, n0 + n1 >= 1");
  ModelPair p(n0, n1);
  std::vector<ModelVector> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.is_object() || !g.contains("h0") || !g.contains("h1"))
      throw ParseError("each generator must be an object with 'h0' and 'h1'");
    gens.push_back(ModelVector(poly_from_json(g.at("h0"), p.n0, "h0"),
                               poly_from_json(g.at("h1"), p.n1, "h1")));
  }
  return Instance{p, std::move(gens)};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return instance_from_json(j);
}

json commutant_to_json(const CommutantElement& a) {
  return json{{"a00", poly_to_json(a.a00)},
              {"a01low", poly_to_json(a.a01low)},
              {"a10", poly_to_json(a.a10)},
              {"a11", poly_to_json(a.a11)}};
}

CommutantElement commutant_from_json(const json& j, const ModelPair& p) {
  if (!j.is_object()) throw ParseError("commutant symbol must be an object");
  CommutantElement a;
  a.a00 = poly_from_json(j.value("a00", json::array()), p.n0, "a00");
  a.a01low = poly_from_json(j.value("a01low", json::array()), p.n1, "a01low");
  a.a10 = poly_from_json(j.value("a10", json::array()), p.n1, "a10");
  a.a11 = poly_from_json(j.value("a11", json::array()), p.n1, "a11");
  return a;
}

json partition_to_json(const Partition& p) {
  json arr = json::array();
  for (int x : p.parts) arr.push_back(x);
  return arr;
}

json jordan_data_to_json(const JordanData& d) {
  return json{{"alpha", partition_to_json(d.alpha.padded(2))},
              {"beta", partition_to_json(d.beta.padded(2))}};
}

json triple_to_json(const Triple& t) {
  return json{{"theta", {t.theta.n0, t.theta.n1}},
              {"alpha", partition_to_json(t.alpha.padded(2))},
              {"beta", partition_to_json(t.beta.padded(2))}};
}

json verdict_to_json(const Verdict& v, std::uint64_t seed) {
  json j{{"kind", to_string(v.kind)},
         {"witness", v.witness ? commutant_to_json(*v.witness) : json(nullptr)},
         {"reason", v.reason},
         {"trials_used", v.trials_used},
         {"certificate", to_string(v.certificate)},
         {"seed", seed}};
  return j;
}

json make_report(const RunConfig& config, json body) {
  return json{{"artifact", {{"name", kArtifactName}, {"version", kArtifactVersion}}},
              {"config", to_json(config)},
              {"report", std::move(body)}};
}

std::string render_report(const json& report, const std::string& format) {
  if (format == "text") return report.dump(2) + "\n";
  return report.dump() + "\n";
}

}  // namespace c0
