#include <doctest.h>

#include <cmath>

#include "lowtail/errors.hpp"
#include "lowtail/generators.hpp"
#include "lowtail/report.hpp"
#include "test_util.hpp"

using namespace lowtail;

namespace {

Instance k4_instance() { return generate_subgraph_count("triangle", 4, ProbSpec{}, WeightSpec{}, 0); }

}  // namespace

TEST_CASE("run_compute on the K4 instance") {
  const Json doc = run_compute(k4_instance(), RunOptions{});
  CHECK(doc["instance"]["k"] == 4);
  CHECK(doc["relation"]["pair_count"] == 6);
  CHECK(doc["summary"]["mu"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(doc["summary"]["delta"].get<double>() == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(doc["bounds"]["i1"]["raw"].get<double>() == doctest::Approx(std::exp(-0.3125)).epsilon(1e-9));
  CHECK(doc["bounds"]["i2a"]["raw"].get<double>() == doctest::Approx(std::exp(-23.0 / 64)).epsilon(1e-9));
  CHECK(doc["bounds"]["lower_bound"].get<double>() ==
        doctest::Approx(std::pow(7.0 / 8.0, 4)).epsilon(1e-9));
  CHECK(doc["bounds"]["grid"].size() == 4);
  CHECK(doc["bounds"]["grid"][3]["i2_phi"]["raw"].get<double>() ==
        doctest::Approx(std::exp(-0.25 / 0.875)).epsilon(1e-9));
}

TEST_CASE("run_compute on a single-event instance") {
  const Instance inst = parse_instance(R"({"n": 1, "p": [0.3], "events": [{"minsets": [[0]]}]})");
  const Json doc = run_compute(inst, RunOptions{});
  CHECK(doc["bounds"]["i1"]["raw"].get<double>() == doctest::Approx(std::exp(-0.3)).epsilon(1e-12));
  CHECK(doc["bounds"]["lower_bound"].get<double>() == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("run_verify on the K4 instance passes everything") {
  const Json doc = run_verify(k4_instance(), RunOptions{});
  CHECK(doc["pass"].get<bool>());
  CHECK(doc["statistical"].get<bool>() == false);
  CHECK(doc["oracle"]["prob_zero"].get<double>() == doctest::Approx(41.0 / 64).epsilon(1e-12));
  for (const Json& entry : doc["checks"]["domination"]) {
    CHECK(entry["pass"].get<bool>());
  }
  CHECK(doc["checks"]["aim"].size() == 6);
  CHECK(doc["checks"]["aim2"]["pass"].get<bool>());
  CHECK(doc["checks"]["axioms"]["pass"].get<bool>());
}

TEST_CASE("weighted instances report the weighted bounds only") {
  Instance inst = generate_subgraph_count("triangle", 4, ProbSpec{}, WeightSpec{}, 0);
  inst = Instance{EventFamily(inst.family.space(), inst.family.events(), std::vector<double>(4, 2.0)),
                  inst.dependency};
  const Json cdoc = run_compute(inst, RunOptions{});
  CHECK(cdoc["bounds"]["i1"].is_null());
  CHECK(cdoc["bounds"]["i1a"].is_null());
  CHECK(cdoc["bounds"]["grid"][0]["i2_phi"].is_null());
  CHECK(cdoc["summary"]["delta_bar"].get<double>() == doctest::Approx(3.5).epsilon(1e-12));

  const Json vdoc = run_verify(inst, RunOptions{});
  CHECK(vdoc["pass"].get<bool>());
}

TEST_CASE("adversarial user relation aborts compute unless forced") {
  // Declare every K4 triangle pair independent.
  Instance inst = k4_instance();
  inst.dependency.mode = DependencyMode::explicit_pairs;
  inst.dependency.pairs = {};

  const Json doc = run_compute(inst, RunOptions{});
  CHECK(doc.contains("aborted"));
  CHECK(!doc.contains("bounds"));
  CHECK(!doc["relation_validation"]["pass"].get<bool>());

  RunOptions forced;
  forced.force = true;
  const Json fdoc = run_compute(inst, forced);
  CHECK(!fdoc.contains("aborted"));
  CHECK(fdoc.contains("bounds"));

  const Json vdoc = run_verify(inst, RunOptions{});
  CHECK(!vdoc["pass"].get<bool>());
  CHECK(!vdoc["relation_validation"]["pass"].get<bool>());
}

TEST_CASE("exact dependency mode attaches refinement and validation") {
  Instance inst = parse_instance(
      R"({"n": 3, "p": [1.0, 0.5, 0.5], "events": [{"minsets": [[0]]}, {"minsets": [[0]]}, {"minsets": [[1], [2]]}],
          "dependency": "exact"})");
  const Json doc = run_compute(inst, RunOptions{});
  CHECK(doc["relation"]["mode"] == "exact-refined");
  // The probability-one coordinate decouples the two copies.
  CHECK(doc["relation"]["pairs_removed"].get<std::uint64_t>() >= 1);
  CHECK(doc.contains("relation_validation"));
  CHECK(doc["relation_validation"]["pass"].get<bool>());
}

TEST_CASE("empty family verifies trivially") {
  const Instance inst = parse_instance(R"({"n": 2, "p": [0.5, 0.5], "events": []})");
  const Json doc = run_verify(inst, RunOptions{});
  CHECK(doc["pass"].get<bool>());
  CHECK(doc["oracle"]["prob_zero"].get<double>() == 1.0);
  CHECK(doc["bounds"]["lower_bound"].get<double>() == 1.0);
  CHECK(doc["bounds"]["i1"]["raw"].get<double>() == 1.0);
}

TEST_CASE("reports are byte-identical across runs") {
  const Instance inst = generate_random_dnf(10, 5, 1, 3, 1, 4, ProbSpec{0.5, true, 0.2, 0.8}, WeightSpec{}, 17);
  RunOptions opts;
  opts.prob.seed = 9;
  const std::string a = render(run_verify(inst, opts), OutputFormat::machine);
  const std::string b = render(run_verify(inst, opts), OutputFormat::machine);
  CHECK(a == b);
  const std::string ta = render(run_compute(inst, opts), OutputFormat::table);
  const std::string tb = render(run_compute(inst, opts), OutputFormat::table);
  CHECK(ta == tb);
}

TEST_CASE("statistical verification when enumeration is infeasible") {
  // Wide support: exact enumeration is out of reach at the default cap.
  const Instance inst =
      generate_random_dnf(40, 8, 2, 3, 3, 4, ProbSpec{0.3, false, 0, 0}, WeightSpec{}, 21);
  REQUIRE(std::popcount(inst.family.joint_support()) > 25);

  RunOptions opts;
  CHECK_THROWS_AS(run_verify(inst, opts), TooLargeForExact);

  opts.prob.mc_samples = 20000;
  opts.prob.seed = 5;
  const Json doc = run_verify(inst, opts);
  CHECK(doc["statistical"].get<bool>());
  CHECK(doc["oracle"].contains("prob_zero_estimate"));
  CHECK(doc["checks"]["aim"].is_string());
  CHECK(doc["pass"].get<bool>());
}

TEST_CASE("run_verify sweep over random families reports no violations") {
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    const std::size_t n = 6 + seed % 9;
    const std::size_t k = 1 + seed % 6;
    const Instance inst =
        generate_random_dnf(n, k, 1, 3, 1, 4, ProbSpec{0.5, true, 0.1, 0.9}, WeightSpec{}, seed);
    const Json doc = run_verify(inst, RunOptions{});
    CHECK(doc["pass"].get<bool>());
  }
}

TEST_CASE("table rendering is readable and complete") {
  const std::string table = render(run_verify(k4_instance(), RunOptions{}), OutputFormat::table);
  CHECK(table.find("mu=0.5") != std::string::npos);
  CHECK(table.find("overall: PASS") != std::string::npos);
  CHECK(table.find("i2a") != std::string::npos);
}
