// c0lab: exact laboratory for invariant subspaces of two-block nilpotent
// model operators.  Subcommands compute invariant data, build canonical
// subspaces, decide quasisimilarity, and run the property suites; every
// randomized path is driven by --seed, so identical invocations produce
// byte-identical reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "c0/errors.hpp"
#include "c0/io.hpp"
#include "c0/lr.hpp"
#include "c0/suites.hpp"

namespace {

using nlohmann::json;

const char* error_kind(const c0::Error& e) {
  if (dynamic_cast<const c0::ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const c0::NotDivisible*>(&e)) return "NotDivisible";
  if (dynamic_cast<const c0::NotInvariant*>(&e)) return "NotInvariant";
  if (dynamic_cast<const c0::NotNilpotent*>(&e)) return "NotNilpotent";
  if (dynamic_cast<const c0::NotCyclic*>(&e)) return "NotCyclic";
  if (dynamic_cast<const c0::HypothesisViolated*>(&e)) return "HypothesisViolated";
  if (dynamic_cast<const c0::NotAdmissible*>(&e)) return "NotAdmissible";
  if (dynamic_cast<const c0::RetriesExhausted*>(&e)) return "RetriesExhausted";
  if (dynamic_cast<const c0::ThetaMismatch*>(&e)) return "ThetaMismatch";
  if (dynamic_cast<const c0::FalsificationError*>(&e)) return "FalsificationError";
  if (dynamic_cast<const c0::DomainError*>(&e)) return "DomainError";
  return "Error";
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw c0::ParseError(what + ": '" + piece + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

c0::ModelPair parse_theta(const std::string& text) {
  std::vector<int> v = parse_int_list(text, "--theta");
  if (v.size() != 2) throw c0::ParseError("--theta needs exactly two integers n0,n1");
  return c0::ModelPair(v[0], v[1]);
}

c0::Partition parse_partition(const std::string& text, const std::string& what) {
  return c0::Partition(parse_int_list(text, what));
}

void emit(const std::string& rendered, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << rendered;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  f << rendered;
  if (!f) throw c0::DomainError("cannot write report to '" + output_path + "'");
}

json run_model(const std::string& instance_path, c0::RunConfig& config) {
  c0::Instance inst = c0::load_instance(instance_path);
  config.theta = inst.pair;
  c0::Subspace m = c0::Subspace::canonical_basis(inst.generators, inst.pair);
  c0::JordanData d = c0::invariant_data(m);
  int m0 = c0::coordinate_projection(m, 0);
  int m1 = c0::coordinate_projection(m, 1);
  json body = c0::jordan_data_to_json(d);
  body["theta"] = {inst.pair.n0, inst.pair.n1};
  body["dim"] = m.dim();
  body["basis"] = c0::subspace_to_json(m)["generators"];
  body["projections"] = {m0, m1};
  body["dimension_identity"] = d.alpha.sum() + d.beta.sum() == inst.pair.dim();
  body["hyper_normal"] = m1 <= m0 && inst.pair.n1 - m1 <= inst.pair.n0 - m0;
  return body;
}

json run_canonical(const c0::ModelPair& theta, const c0::Partition& alpha, const c0::Partition& beta) {
  c0::Triple t(theta, alpha, beta);
  c0::Subspace n = c0::canonical_subspace(t);  // throws NotAdmissible with the failed condition
  c0::JordanData d = c0::invariant_data(n);
  json body;
  body["triple"] = c0::triple_to_json(t);
  body["admissible"] = true;
  body["subspace"] = c0::subspace_to_json(n);
  body["verification"] = json{
      {"projections", {c0::coordinate_projection(n, 0), c0::coordinate_projection(n, 1)}},
      {"expected_projections", {theta.n0 - t.a0(), t.b1()}},
      {"data", c0::jordan_data_to_json(d)},
      {"dimension_identity", d.alpha.sum() + d.beta.sum() == theta.dim()}};
  return body;
}

json run_classify(const std::string& a_path, const std::string& b_path, c0::RunConfig& config,
                  int* exit_code) {
  c0::Instance a = c0::load_instance(a_path);
  c0::Instance b = c0::load_instance(b_path);
  if (a.pair != b.pair)
    throw c0::ThetaMismatch("instances live on different pairs: " + a.pair.to_string() + " vs " +
                            b.pair.to_string());
  config.theta = a.pair;
  c0::Subspace ma = c0::Subspace::canonical_basis(a.generators, a.pair);
  c0::Subspace mb = c0::Subspace::canonical_basis(b.generators, b.pair);
  c0::Rng rng(config.seed);
  c0::Verdict v = c0::classify(ma, mb, rng, config.trials, config.exact_certificate);
  json body = c0::verdict_to_json(v, config.seed);
  body["data_a"] = c0::jordan_data_to_json(c0::invariant_data(ma));
  body["data_b"] = c0::jordan_data_to_json(c0::invariant_data(mb));
  switch (v.kind) {
    case c0::VerdictKind::Equivalent: *exit_code = 0; break;
    case c0::VerdictKind::Inequivalent: *exit_code = 3; break;
    case c0::VerdictKind::Falsification: *exit_code = 4; break;
  }
  return body;
}

json run_lr(const std::string& lambda_text, const std::string& mu_text, const std::string& nu_text,
            int scan_bound, int scan_rows) {
  json body;
  bool did_something = false;
  if (!lambda_text.empty()) {
    c0::Partition lambda = parse_partition(lambda_text, "--lambda");
    c0::Partition mu = parse_partition(mu_text, "--mu");
    c0::Partition nu = parse_partition(nu_text, "--nu");
    body["lambda"] = c0::partition_to_json(lambda);
    body["mu"] = c0::partition_to_json(mu);
    body["nu"] = c0::partition_to_json(nu);
    body["coefficient"] = c0::lr_coefficient(lambda, mu, nu);
    did_something = true;
  }
  if (scan_bound > 0) {
    json triples = json::array();
    for (const auto& t : c0::multiplicity_two_triples(scan_bound, scan_rows)) {
      triples.push_back({c0::partition_to_json(t[0]), c0::partition_to_json(t[1]),
                         c0::partition_to_json(t[2])});
    }
    body["scan"] = json{{"bound", scan_bound}, {"rows", scan_rows}, {"multiplicity_two", triples}};
    did_something = true;
  }
  if (!did_something) throw c0::ParseError("lr needs --lambda (with --mu/--nu) and/or --scan-bound");
  return body;
}

json run_enumerate(const c0::ModelPair& p) {
  json triples = json::array();
  for (const c0::Triple& t : c0::admissible_triples(p)) {
    c0::Subspace n = c0::canonical_subspace(t);
    triples.push_back(json{{"triple", c0::triple_to_json(t)},
                           {"dim", n.dim()},
                           {"generators", c0::subspace_to_json(n)["generators"]}});
  }
  json hyper = json::array();
  for (const c0::HyperinvariantDescriptor& d : c0::hyperinvariant_descriptors(p)) {
    c0::Subspace h = c0::hyperinvariant_subspace(d, p);
    hyper.push_back(json{{"p0", d.p0},
                         {"p1", d.p1},
                         {"dim", h.dim()},
                         {"generators", c0::subspace_to_json(h)["generators"]}});
  }
  return json{{"theta", {p.n0, p.n1}},
              {"admissible_triples", triples},
              {"hyperinvariant", hyper}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant-subspace laboratory for two-block nilpotent models"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  c0::RunConfig config;
  std::string output_path;
  app.add_option("--seed", config.seed, "RNG seed; fully determines all randomized behavior")
      ->capture_default_str();
  app.add_option("--trials", config.trials, "witness-search trial cap")->capture_default_str();
  app.add_option("--budget", config.budget, "corpus size for suites")->capture_default_str();
  app.add_flag("--exact-certificate", config.exact_certificate,
               "back inequivalence by a symbolic determinant when feasible");
  app.add_option("--output", output_path, "write the report to this file instead of stdout");
  app.add_option("--format", config.format, "json (compact) or text (pretty)")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* model_cmd = app.add_subcommand("model", "invariant data of an instance file");
  std::string instance_path;
  model_cmd->add_option("instance", instance_path, "instance JSON file")->required();

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical subspace of a data triple");
  std::string theta_text, alpha_text, beta_text;
  canonical_cmd->add_option("--theta", theta_text, "block sizes n0,n1")->required();
  canonical_cmd->add_option("--alpha", alpha_text, "restriction model a0,a1")->required();
  canonical_cmd->add_option("--beta", beta_text, "compression model b0,b1")->required();

  auto* classify_cmd = app.add_subcommand("classify", "quasisimilarity verdict for two instances");
  std::string a_path, b_path;
  classify_cmd->add_option("--instance-a", a_path, "first instance JSON file")->required();
  classify_cmd->add_option("--instance-b", b_path, "second instance JSON file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  std::string suite, verify_theta;
  verify_cmd->add_option("--suite", suite, "which suite to run")
      ->required()
      ->check(CLI::IsMember({"weyl", "classification", "lr", "hyper", "commutant", "splitting"}));
  verify_cmd->add_option("--theta", verify_theta, "restrict to one pair n0,n1");

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  std::string lambda_text, mu_text, nu_text;
  int scan_bound = 0, scan_rows = 2;
  lr_cmd->add_option("--lambda", lambda_text, "outer shape, comma-separated parts");
  lr_cmd->add_option("--mu", mu_text, "inner shape");
  lr_cmd->add_option("--nu", nu_text, "content");
  lr_cmd->add_option("--scan-bound", scan_bound, "list triples with coefficient >= 2 up to |lambda| <= bound");
  lr_cmd->add_option("--scan-rows", scan_rows, "row cap for the scan")->capture_default_str();

  auto* enum_cmd = app.add_subcommand("enumerate", "structured subspace families of a pair");
  std::string enum_theta;
  enum_cmd->add_option("--theta", enum_theta, "block sizes n0,n1")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    json body;
    int exit_code = 0;
    if (model_cmd->parsed()) {
      config.command = "model";
      body = run_model(instance_path, config);
    } else if (canonical_cmd->parsed()) {
      config.command = "canonical";
      c0::ModelPair theta = parse_theta(theta_text);
      config.theta = theta;
      body = run_canonical(theta, parse_partition(alpha_text, "--alpha"),
                           parse_partition(beta_text, "--beta"));
    } else if (classify_cmd->parsed()) {
      config.command = "classify";
      body = run_classify(a_path, b_path, config, &exit_code);
    } else if (verify_cmd->parsed()) {
      config.command = "verify";
      std::optional<c0::ModelPair> pair;
      if (!verify_theta.empty()) {
        pair = parse_theta(verify_theta);
        config.theta = pair;
      }
      bool passed = false;
      body = c0::run_suite(suite, pair, config, &passed);
      exit_code = passed ? 0 : 1;
    } else if (lr_cmd->parsed()) {
      config.command = "lr";
      body = run_lr(lambda_text, mu_text, nu_text, scan_bound, scan_rows);
    } else if (enum_cmd->parsed()) {
      config.command = "enumerate";
      c0::ModelPair theta = parse_theta(enum_theta);
      config.theta = theta;
      body = run_enumerate(theta);
    }
    emit(c0::render_report(c0::make_report(config, std::move(body)), config.format), output_path);
    return exit_code;
  } catch (const c0::Error& e) {
    json err = {{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}
