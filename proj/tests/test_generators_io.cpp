#include "support.hpp"

#include "helly/combinatorics.hpp"
#include "helly/experiment.hpp"
#include "helly/instance_io.hpp"
#include "helly/piercing.hpp"

#include <doctest.h>
#include <omp.h>

using namespace helly;
using namespace helly::test;

TEST_CASE("generation is deterministic") {
  GenSpec spec;
  spec.d = 3;
  spec.n = 6;
  spec.presence = 0.6;
  spec.seed = 42;
  spec.stream = 9;
  const auto a = gen_instance(spec);
  const auto b = gen_instance(spec);
  CHECK(serialize_instance(a) == serialize_instance(b));
  spec.stream = 10;
  CHECK(serialize_instance(gen_instance(spec)) != serialize_instance(a));
}

TEST_CASE("generator options") {
  GenSpec spec;
  spec.d = 2;
  spec.n = 8;
  spec.presence = 1.0;
  spec.points_per_level = {10};
  const auto inst = gen_instance(spec);
  for (const auto& s : inst.sets) CHECK(s.level_count() == 2);
  spec.n = 0;
  const auto none = gen_instance(spec);
  CHECK(none.sets.empty());
  CHECK(none.ground->size() == 20);
  spec.points_per_level = {20};
  CHECK_THROWS_AS(gen_instance(spec), InputError);
  spec.points_per_level = {4};
  spec.presence = 1.5;
  CHECK_THROWS_AS(gen_instance(spec), InputError);
}

TEST_CASE("counter rng streams are independent of draw order") {
  CounterRng a(5, 1);
  CounterRng b(5, 1);
  std::vector<long long> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(a.uniform(0, 6));
  for (int i = 0; i < 100; ++i) CHECK(b.uniform(0, 6) == xs[static_cast<std::size_t>(i)]);
  for (auto x : xs) CHECK((x >= 0 && x <= 6));
}

TEST_CASE("lower-bound constructions") {
  const auto p1 = ground({{0, 1}});
  const auto h1 = gen_helly_lower_bound(p1);
  REQUIRE(h1.size() == 2);
  CHECK(h1[0].points() == std::vector<Point>{pt(0, 1)});
  CHECK(h1[1].points() == std::vector<Point>{pt(1, 1)});
  CHECK(!helly_check(h1, 1, 1).verdict);

  const auto p2 = ground({{0, 1, 2}, {0, 1, 2}});
  const auto h2 = gen_helly_lower_bound(p2);
  REQUIRE(h2.size() == 4);
  for_each_combination(4, 3, [&](const std::vector<std::size_t>& c) {
    CHECK(!intersect_all(Family{h2[c[0]], h2[c[1]], h2[c[2]]}).trace.empty());
    return true;
  });
  CHECK(intersect_all(h2).trace.empty());

  const auto r1 = gen_radon_lower_bound(p1);
  CHECK(r1 == std::vector<Point>{pt(0, 1), pt(1, 1)});
  CHECK(!radon_partition(p1, r1));
  const auto r2 = gen_radon_lower_bound(p2);
  CHECK(r2.size() == 4);
  CHECK(!radon_partition(p2, r2));

  CHECK_THROWS_AS(gen_helly_lower_bound(ground({{0}, {0, 1}})), InputError);
  const Designated custom{{Rat(1), Rat(2)}, {Rat(0), Rat(2)}};
  const auto hc = gen_helly_lower_bound(p2, custom);
  CHECK(hc[0].points() == std::vector<Point>{pt(1, 1), pt(0, 2), pt(1, 2), pt(2, 2)});
}

TEST_CASE("conditioned generation") {
  GenSpec spec;
  spec.d = 1;
  spec.n = 4;
  spec.families = 2;
  spec.max_width = 9;
  Predicate nested;
  nested.kind = Predicate::Kind::colorful_helly;
  const auto a = gen_conditioned(spec, nested, 5000);
  REQUIRE(a.instance);
  CHECK(predicate_holds(*a.instance, nested));
  const auto fams = a.instance->colour_families();
  CHECK(pq_check(fams, 2, 2, PqKind::colorful_second).holds);
  const auto b = gen_conditioned(spec, nested, 5000);
  CHECK(serialize_instance(*a.instance) == serialize_instance(*b.instance));

  GenSpec apart;
  apart.d = 1;
  apart.n = 3;
  apart.points_per_level = {3};
  apart.max_width = 0;
  const auto impossible = gen_conditioned(apart, parse_predicate("k-intersect-rich:1"), 50);
  CHECK(!impossible.instance);
  CHECK(impossible.draws == 50);
  CHECK_THROWS_AS(parse_predicate("bogus"), InputError);
  CHECK(parse_predicate("pq:3:2:colorful-first").pq_kind == PqKind::colorful_first);
}

TEST_CASE("instance documents") {
  const auto doc = nlohmann::json::parse(R"({"d": 1, "points": [["0", 1], ["1/2", 1]],
      "sets": [{"levels": [{"level": 1, "lo": "0", "hi": "0.5"}]}]})");
  const auto parsed = parse_instance(doc);
  REQUIRE(parsed.instance.sets.size() == 1);
  CHECK(parsed.instance.sets[0].size() == 2);
  CHECK(parsed.instance.names[0] == "C1");

  auto bad = doc;
  bad["sets"][0]["name"] = "A";
  bad["sets"][0]["levels"][0]["lo"] = "1";
  try {
    parse_instance(bad);
    FAIL("lo > hi accepted");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("\"A\"") != std::string::npos);
    CHECK(msg.find("level 1") != std::string::npos);
    CHECK(msg.find("$.sets[0].levels[0]") != std::string::npos);
  }

  auto extra = doc;
  extra["colour"] = "red";
  CHECK_THROWS_AS(parse_instance(extra), InputError);
  ParseOptions lenient;
  lenient.lenient = true;
  CHECK(parse_instance(extra, lenient).warnings.size() == 1);

  auto floaty = doc;
  floaty["points"][0][0] = 0.25;
  CHECK_THROWS_AS(parse_instance(floaty), InputError);
  CHECK_THROWS_AS(parse_instance_text("{"), InputError);
}

TEST_CASE("instances round-trip") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    GenSpec spec;
    spec.d = 1 + static_cast<int>(s % 3);
    spec.n = 5;
    spec.presence = 0.7;
    spec.families = s % 2 ? 0 : 5;
    spec.stream = s;
    const auto inst = gen_instance(spec);
    const auto text = serialize_instance(inst).dump();
    const auto back = parse_instance_text(text).instance;
    CHECK(*back.ground == *inst.ground);
    REQUIRE(back.sets.size() == inst.sets.size());
    for (std::size_t j = 0; j < inst.sets.size(); ++j) CHECK(back.sets[j].runs() == inst.sets[j].runs());
    CHECK(back.families == inst.families);
    CHECK(serialize_instance(back).dump() == text);
  }
}

TEST_CASE("suite reports do not depend on the thread count") {
  SuiteConfig cfg;
  cfg.suite = "collapse";
  cfg.trials = 60;
  cfg.seed = 3;
  const int threads = omp_get_max_threads();
  const auto a = run_suite(cfg);
  omp_set_num_threads(1);
  const auto b = run_suite(cfg);
  omp_set_num_threads(threads);
  CHECK(report_fingerprint(a) == report_fingerprint(b));
  CHECK(report_csv(a) == report_csv(b));
  cfg.seed = 4;
  CHECK(report_fingerprint(run_suite(cfg)) != report_fingerprint(a));
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suite(cfg), InputError);
  cfg.suite = "collapse";
  cfg.dims = {4};
  CHECK_THROWS_AS(run_suite(cfg), InputError);
}
