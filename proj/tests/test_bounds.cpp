#include <doctest.h>

#include <cmath>

#include "lowtail/bounds.hpp"
#include "lowtail/generators.hpp"
#include "lowtail/oracle.hpp"
#include "test_util.hpp"

using namespace lowtail;
using test::upset;

namespace {

Summary plain_summary(double mu, double delta, double eps, std::vector<PerEvent> per_event = {}) {
  Summary s;
  s.mu = mu;
  s.delta = delta;
  s.eps = eps;
  s.delta_bar = mu + delta;
  s.per_event = std::move(per_event);
  return s;
}

}  // namespace

TEST_CASE("phi evaluates the rate function") {
  CHECK(phi(0.0) == 0.0);
  CHECK(phi(-1.0) == 1.0);
  CHECK(phi(-0.5) == doctest::Approx(0.5 - 0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(phi(-1.0000001), std::domain_error);

  // The small-x series hands over smoothly to the closed form.
  for (double x : {1e-9, -1e-9, 9e-9, 2e-8, -2e-8}) {
    const double series = x * x / 2.0 - x * x * x / 6.0;
    CHECK(phi(x) == doctest::Approx(series).epsilon(1e-10));
  }

  // phi(x) >= x^2/2 on [-1, 0].
  for (int i = 0; i <= 1000; ++i) {
    const double x = -1.0 + static_cast<double>(i) / 1000.0;
    CHECK(phi(x) >= x * x / 2.0 - 1e-15);
  }
}

TEST_CASE("summarize on the K4 triangle family") {
  const ProbConfig cfg;
  const EventFamily k4 = test::k4_triangles();
  const Summary s = summarize(k4, build_support_relation(k4), cfg);
  CHECK(s.mu == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.delta == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(s.eps == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(s.delta_bar == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(s.method == Method::exact);
  CHECK(!s.weighted);
}

TEST_CASE("summarize on degenerate families") {
  const ProbConfig cfg;
  const EventFamily single(ProductSpace({0.3}), {upset({{0}})});
  const Summary s = summarize(single, build_support_relation(single), cfg);
  CHECK(s.mu == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(s.delta == 0.0);
  CHECK(s.eps == doctest::Approx(0.3).epsilon(1e-12));

  const EventFamily empty(ProductSpace::uniform(3, 0.5), {});
  const Summary e = summarize(empty, build_support_relation(empty), cfg);
  CHECK(e.mu == 0.0);
  CHECK(e.eps == 0.0);
}

TEST_CASE("unweighted delta_bar reduces to mu plus delta") {
  const ProbConfig cfg;
  for (int round = 0; round < 20; ++round) {
    const Instance inst =
        generate_random_dnf(12, 5, 1, 3, 1, 4, ProbSpec{0.5, true, 0.1, 0.9}, WeightSpec{}, 4000 + round);
    const Summary s = summarize(inst.family, build_support_relation(inst.family), cfg);
    CHECK(s.delta_bar == doctest::Approx(s.mu + s.delta).epsilon(1e-12));
  }
}

TEST_CASE("bound_i1") {
  CHECK(bound_i1(plain_summary(0.5, 0.375, 0.125)) == doctest::Approx(std::exp(-0.3125)).epsilon(1e-12));
  CHECK(bound_i1(plain_summary(0.0, 0.0, 0.0)) == 1.0);
  CHECK(bound_i1(plain_summary(1.0, 0.0, 1.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

  Summary weighted = plain_summary(1.0, 0.0, 0.5);
  weighted.weighted = true;
  CHECK_THROWS_AS(bound_i1(weighted), std::invalid_argument);
  CHECK_THROWS_AS(bound_i1a(weighted), std::invalid_argument);
  CHECK_THROWS_AS(bound_i2(weighted, 0.5), std::invalid_argument);
}

TEST_CASE("bound_i2") {
  const Summary k4 = plain_summary(0.5, 0.375, 0.125);
  const auto [p_mu, q_mu] = bound_i2(k4, 0.5);
  CHECK(p_mu == doctest::Approx(std::exp(-0.25 / 0.875)).epsilon(1e-12));
  CHECK(q_mu == doctest::Approx(std::exp(-0.25 / (2.0 * 0.875))).epsilon(1e-12));

  const auto [p0, q0] = bound_i2(k4, 0.0);
  CHECK(p0 == 1.0);
  CHECK(q0 == 1.0);

  const auto [p1, q1] = bound_i2(plain_summary(1.0, 0.0, 0.5), 1.0);
  CHECK(p1 == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(q1 == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));

  CHECK_THROWS_AS(bound_i2(k4, -0.01), std::domain_error);
  CHECK_THROWS_AS(bound_i2(k4, 0.51), std::domain_error);

  const auto [pz, qz] = bound_i2(plain_summary(0.0, 0.0, 0.0), 0.0);
  CHECK(pz == 1.0);
  CHECK(qz == 1.0);

  // Nonincreasing in t, and the phi form never exceeds the quadratic form.
  double prev_p = 2.0, prev_q = 2.0;
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.5 * static_cast<double>(i) / 100.0;
    const auto [p, q] = bound_i2(k4, t);
    CHECK(p <= q + 1e-15);
    CHECK(p <= prev_p + 1e-15);
    CHECK(q <= prev_q + 1e-15);
    prev_p = p;
    prev_q = q;
  }
}

TEST_CASE("bound_i1a") {
  const ProbConfig cfg;
  const EventFamily k4 = test::k4_triangles();
  const Summary s = summarize(k4, build_support_relation(k4), cfg);
  const double expected = std::pow(7.0 / 8.0, 4) * std::exp(0.375 / 1.75);
  CHECK(bound_i1a(s) == doctest::Approx(expected).epsilon(1e-12));

  // With delta = 0 the bound collapses onto the sharpness floor.
  Summary indep = plain_summary(0.5, 0.0, 0.3, {{0.3, 1.0}, {0.2, 1.0}});
  CHECK(bound_i1a(indep) == doctest::Approx(lower_bound(indep)).epsilon(1e-14));

  Summary certain = plain_summary(1.0, 0.0, 1.0, {{1.0, 1.0}});
  CHECK(bound_i1a(certain) == 0.0);
}

TEST_CASE("bound_i2a on worked examples") {
  const ProbConfig cfg;

  // K4 triangles: all pairs dependent, so the expectation sum telescopes to
  // Pr(X > 0) = 23/64.
  const EventFamily k4 = test::k4_triangles();
  const I2aResult r = bound_i2a(k4, build_support_relation(k4), cfg);
  CHECK(r.sum_expectations == doctest::Approx(23.0 / 64).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(std::exp(-23.0 / 64)).epsilon(1e-12));
  CHECK(r.method == Method::exact);

  const EventFamily single(ProductSpace({0.3}), {upset({{0}})});
  CHECK(bound_i2a(single, build_support_relation(single), cfg).value ==
        doctest::Approx(std::exp(-0.3)).epsilon(1e-12));

  const EventFamily two(ProductSpace({0.2, 0.2}), {upset({{0}}), upset({{1}})});
  CHECK(bound_i2a(two, build_support_relation(two), cfg).value ==
        doctest::Approx(std::exp(-0.4)).epsilon(1e-12));

  // Weights cancel for an isolated event, and the weighted K4 variant still
  // dominates the exact hitting probability.
  const EventFamily wone(ProductSpace({0.2}), {upset({{0}})}, {3.0});
  CHECK(bound_i2a(wone, build_support_relation(wone), cfg).value ==
        doctest::Approx(std::exp(-0.2)).epsilon(1e-12));
  const EventFamily k4w(k4.space(), k4.events(), std::vector<double>(4, 2.0));
  const double wk4 = bound_i2a(k4w, build_support_relation(k4w), cfg).value;
  CHECK(wk4 >= 41.0 / 64 - 1e-12);
  // Equal weights cancel inside every ratio, so the bound matches the
  // unweighted value.
  CHECK(wk4 == doctest::Approx(std::exp(-23.0 / 64)).epsilon(1e-12));
}

TEST_CASE("bound_i2e") {
  // Unit weights: identical to bound_i2.
  const Summary k4 = plain_summary(0.5, 0.375, 0.125);
  for (double t : {0.0, 0.1, 0.3, 0.5}) {
    const auto i2 = bound_i2(k4, t);
    const auto i2e = bound_i2e(k4, t);
    CHECK(i2e.first == doctest::Approx(i2.first).epsilon(1e-12));
    CHECK(i2e.second == doctest::Approx(i2.second).epsilon(1e-12));
  }

  // Single event of weight c: at t = c p the phi form is exp(-p).
  const double c = 3.0, p = 0.2;
  Summary one;
  one.mu = c * p;
  one.delta = 0.0;
  one.eps = p;
  one.delta_bar = c * c * p;
  one.weighted = true;
  one.per_event = {{p, c}};
  CHECK(bound_i2e(one, c * p).first == doctest::Approx(std::exp(-p)).epsilon(1e-12));

  // K4 triangles with every weight 2.
  const ProbConfig cfg;
  const EventFamily k4w(test::k4_triangles().space(), test::k4_triangles().events(),
                        std::vector<double>(4, 2.0));
  const Summary sw = summarize(k4w, build_support_relation(k4w), cfg);
  CHECK(sw.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sw.delta_bar == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(bound_i2e(sw, 1.0).first == doctest::Approx(std::exp(-1.0 / 3.5)).epsilon(1e-12));

  // The weighted distribution confirms the bound at t = mu.
  const ExactDistribution dist = enumerate_distribution(k4w);
  CHECK(dist.lower_tail(0.0) == doctest::Approx(41.0 / 64).epsilon(1e-12));
  CHECK(dist.lower_tail(0.0) <= bound_i2e(sw, 1.0).first + 1e-9);
}

TEST_CASE("lower_bound") {
  const ProbConfig cfg;
  const EventFamily k4 = test::k4_triangles();
  const Summary s = summarize(k4, build_support_relation(k4), cfg);
  CHECK(lower_bound(s) == doctest::Approx(std::pow(7.0 / 8.0, 4)).epsilon(1e-12));
  CHECK(lower_bound(s) <= 41.0 / 64);

  // Independent events achieve the floor exactly.
  const EventFamily two(ProductSpace({0.2, 0.7}), {upset({{0}}), upset({{1}})});
  const Summary st = summarize(two, build_support_relation(two), cfg);
  const ExactDistribution dist = enumerate_distribution(two);
  CHECK(lower_bound(st) == doctest::Approx(dist.prob_zero()).epsilon(1e-12));

  Summary certain = plain_summary(1.0, 0.0, 1.0, {{1.0, 1.0}});
  CHECK(lower_bound(certain) == 0.0);
}

TEST_CASE("bound report structure") {
  const ProbConfig cfg;
  const EventFamily k4 = test::k4_triangles();
  const BoundReport report = make_bound_report(k4, build_support_relation(k4), kDefaultTGrid, cfg);
  REQUIRE(report.i1.has_value());
  REQUIRE(report.i1a.has_value());
  CHECK(report.i1->raw >= report.i1->clamped);
  CHECK(report.grid.size() == 4);
  for (const GridRow& row : report.grid) {
    CHECK(row.has_i2);
    CHECK(row.i2_phi.raw <= row.i2_quad.raw + 1e-15);
    CHECK(row.i2_phi.raw == doctest::Approx(row.i2e_phi.raw).epsilon(1e-12));
    CHECK(row.i2_phi.clamped <= 1.0);
  }

  const EventFamily k4w(k4.space(), k4.events(), std::vector<double>(4, 2.0));
  const BoundReport wreport = make_bound_report(k4w, build_support_relation(k4w), kDefaultTGrid, cfg);
  CHECK(!wreport.i1.has_value());
  CHECK(!wreport.i1a.has_value());
  CHECK(!wreport.grid[0].has_i2);
  CHECK(wreport.i2a.raw <= 1.0);
}
