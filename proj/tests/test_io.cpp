// JSON exchange formats: instances, symbols, verdicts, and the report
// envelope, including the determinism guarantees of the renderer.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "c0/errors.hpp"
#include "c0/io.hpp"

using namespace c0;
using nlohmann::json;

TEST_CASE("polynomial round trip, integer and string coefficients") {
  Poly f({GaussianRational(Rational(1, 2), Rational(0)), GaussianRational(0),
          GaussianRational(Rational(3), Rational(-4))});
  json j = poly_to_json(f);
  CHECK(j.is_array());
  CHECK(j.size() == 3);
  CHECK(poly_from_json(j, 3, "x") == f);

  // Plain integers are accepted alongside strings.
  Poly g = poly_from_json(json::array({1, "1/2", -3}), 5, "x");
  CHECK(g.at(0) == GaussianRational(1));
  CHECK(g.at(1) == GaussianRational(Rational(1, 2), Rational(0)));
  CHECK(g.at(2) == GaussianRational(-3));

  CHECK_THROWS_AS(poly_from_json(json::array({1, 2, 3}), 2, "x"), ParseError);  // over the cap
  CHECK_THROWS_AS(poly_from_json(json::object(), 2, "x"), ParseError);
  CHECK_THROWS_AS(poly_from_json(json::array({true}), 2, "x"), ParseError);
  CHECK_THROWS_AS(poly_from_json(json::array({"1.5"}), 2, "x"), ParseError);  // bad grammar
}

TEST_CASE("instance parsing and validation") {
  json good = {{"theta", {2, 1}},
               {"generators", json::array({json{{"h0", json::array({0, 1})}, {"h1", json::array({1})}}})}};
  Instance inst = instance_from_json(good);
  CHECK(inst.pair == ModelPair(2, 1));
  REQUIRE(inst.generators.size() == 1);
  CHECK(inst.generators[0].h0 == Poly::monomial(1));
  CHECK(inst.generators[0].h1 == Poly::monomial(0));

  CHECK_THROWS_AS(instance_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(instance_from_json(json{{"theta", {2, 1}}}), ParseError);  // no generators
  CHECK_THROWS_AS(instance_from_json(json{{"theta", {1, 2}}, {"generators", json::array()}}),
                  ParseError);  // n0 < n1
  CHECK_THROWS_AS(instance_from_json(json{{"theta", {0, 0}}, {"generators", json::array()}}),
                  ParseError);  // empty pair
  CHECK_THROWS_AS(instance_from_json(json{{"theta", {2, "x"}}, {"generators", json::array()}}),
                  ParseError);
  json bad_gen = good;
  bad_gen["generators"][0].erase("h1");
  CHECK_THROWS_AS(instance_from_json(bad_gen), ParseError);
  json long_poly = good;
  long_poly["generators"][0]["h1"] = json::array({1, 2});  // cap n1 = 1
  CHECK_THROWS_AS(instance_from_json(long_poly), ParseError);
}

TEST_CASE("load_instance reports unreadable and malformed files") {
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), ParseError);
  std::string path = "/tmp/c0_test_io_malformed.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_instance(path), ParseError);
  {
    std::ofstream out(path);
    out << R"({"theta": [2, 1], "generators": [{"h0": ["1"], "h1": []}]})";
  }
  Instance inst = load_instance(path);
  CHECK(inst.pair == ModelPair(2, 1));
  CHECK(inst.generators.size() == 1);
  std::remove(path.c_str());
}

TEST_CASE("commutant symbol round trip") {
  ModelPair p(3, 2);
  CommutantElement a{Poly({GaussianRational(1), GaussianRational(2), GaussianRational(3)}),
                     Poly({GaussianRational(Rational(1, 3), Rational(0))}), Poly::zero(),
                     Poly({GaussianRational(0), GaussianRational(5)})};
  json j = commutant_to_json(a);
  CHECK(commutant_from_json(j, p) == a);
  // Missing fields default to the zero polynomial.
  CHECK(commutant_from_json(json::object(), p) == CommutantElement{});
}

TEST_CASE("partition, data, and triple serialization") {
  CHECK(partition_to_json(Partition{2, 1}) == json::array({2, 1}));
  JordanData d{Partition{3}, Partition{1, 1}};
  json jd = jordan_data_to_json(d);
  CHECK(jd["alpha"] == json::array({3, 0}));
  CHECK(jd["beta"] == json::array({1, 1}));
  json jt = triple_to_json(Triple(ModelPair(3, 2), Partition{2, 1}, Partition{1, 1}));
  CHECK(jt["theta"] == json::array({3, 2}));
  CHECK(jt["alpha"] == json::array({2, 1}));
  CHECK(jt["beta"] == json::array({1, 1}));
}

TEST_CASE("verdict serialization carries the witness or null") {
  Verdict v;
  v.kind = VerdictKind::Inequivalent;
  v.reason = "beta: (1,1) vs (2,0)";
  v.certificate = Certificate::Exact;
  json j = verdict_to_json(v, 42);
  CHECK(j["kind"] == "inequivalent");
  CHECK(j["witness"].is_null());
  CHECK(j["reason"] == "beta: (1,1) vs (2,0)");
  CHECK(j["trials_used"] == 0);
  CHECK(j["certificate"] == "exact");
  CHECK(j["seed"] == 42);
}

TEST_CASE("report envelope and renderer determinism") {
  RunConfig c;
  c.command = "classify";
  c.theta = ModelPair(2, 1);
  c.seed = 7;
  json r = make_report(c, json{{"answer", 1}});
  CHECK(r["artifact"]["name"] == std::string(kArtifactName));
  CHECK(r["artifact"]["version"] == std::string(kArtifactVersion));
  CHECK(r["config"]["command"] == "classify");
  CHECK(r["config"]["theta"] == json::array({2, 1}));
  CHECK(r["config"]["seed"] == 7);
  CHECK(r["report"]["answer"] == 1);

  RunConfig no_theta;
  no_theta.command = "verify";
  CHECK(make_report(no_theta, json::object())["config"]["theta"].is_null());

  std::string compact = render_report(r, "json");
  std::string pretty = render_report(r, "text");
  CHECK(compact == render_report(r, "json"));  // byte-deterministic
  CHECK(pretty == render_report(r, "text"));
  CHECK(compact.back() == '\n');
  CHECK(pretty.back() == '\n');
  CHECK(compact.find('\n') == compact.size() - 1);  // single line
  CHECK(json::parse(pretty) == r);  // pretty form is lossless
  CHECK(json::parse(compact) == r);
}
