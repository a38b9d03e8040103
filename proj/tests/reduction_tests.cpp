#include <doctest.h>

#include "ufg3lin/catalog.hpp"
#include "ufg3lin/reduction.hpp"

using namespace ufg3lin;

namespace {

struct Fixture {
  GroupBundle bundle = builtin_group("S3");
  MaxTSAInstance tsa;
  std::vector<int> bits;
  UFGLabelCover lc;

  Fixture(int r = 1, int t = 1, uint64_t seed = 11) {
    auto planted = random_satisfiable_tsa(20, std::max(4, 2 * r), seed);
    tsa = planted.first;
    bits = planted.second;
    lc = parallel_repeat(tsa, r, t, 4, 4, derive_seed(seed, "repeat"));
  }
};

}  // namespace

TEST_CASE("a single sampled constraint uses three distinct variables") {
  Fixture fx;
  auto red = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Perfect, 0.0,
                            1, 5);
  CHECK(red.instance.n_vars == 3);
  REQUIRE(red.instance.constraints.size() == 1);
  const auto& cst = red.instance.constraints[0];
  CHECK(cst.i1 != cst.i2);
  CHECK(cst.i1 != cst.i3);
  CHECK(cst.i2 != cst.i3);
  CHECK(red.registry.key_of(cst.i1).kind == VarKind::FoldedW);
  CHECK(red.registry.key_of(cst.i2).kind == VarKind::FreeW);
  CHECK(red.registry.key_of(cst.i3).kind == VarKind::ClassicalV);
}

TEST_CASE("imperfect sampling with eps = 0 equals the perfect sampler") {
  Fixture fx;
  auto a = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Perfect, 0.0,
                          100, 77);
  auto b = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Imperfect, 0.0,
                          100, 77);
  REQUIRE(a.instance.constraints.size() == b.instance.constraints.size());
  for (size_t i = 0; i < a.instance.constraints.size(); ++i) {
    CHECK(a.instance.constraints[i].i1 == b.instance.constraints[i].i1);
    CHECK(a.instance.constraints[i].i2 == b.instance.constraints[i].i2);
    CHECK(a.instance.constraints[i].i3 == b.instance.constraints[i].i3);
    CHECK(a.instance.constraints[i].c == b.instance.constraints[i].c);
  }
}

TEST_CASE("scope structure ignores the b vector, right-hand sides do not") {
  Fixture fx;
  UFGLabelCover flipped = fx.lc;
  for (auto& cst : flipped.source) cst.b ^= 1;
  auto a = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Perfect, 0.0,
                          300, 9);
  auto b = build_instance(flipped, *fx.bundle.group, GadgetMode::Perfect, 0.0,
                          300, 9);
  CHECK(factor_graph_fingerprint(a.instance) ==
        factor_graph_fingerprint(b.instance));
  CHECK(a.instance.n_vars == b.instance.n_vars);
  int rhs_diffs = 0;
  for (size_t i = 0; i < a.instance.constraints.size(); ++i) {
    CHECK(a.instance.constraints[i].i1 == b.instance.constraints[i].i1);
    CHECK(a.instance.constraints[i].i2 == b.instance.constraints[i].i2);
    CHECK(a.instance.constraints[i].i3 == b.instance.constraints[i].i3);
    rhs_diffs += a.instance.constraints[i].c != b.instance.constraints[i].c;
  }
  CHECK(rhs_diffs > 0);
}

TEST_CASE("fingerprints separate different seeds") {
  Fixture fx;
  std::set<uint64_t> prints;
  for (uint64_t s = 0; s < 20; ++s) {
    auto red = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Perfect,
                              0.0, 50, s);
    prints.insert(factor_graph_fingerprint(red.instance));
  }
  CHECK(prints.size() == 20);
}

TEST_CASE("perfect mode: dictator tables satisfy every constraint") {
  Fixture fx;
  auto [sl, sr] = lift_assignment(fx.lc, fx.bits);
  auto red = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Perfect, 0.0,
                            500, 3);
  Assignment sigma = dictator_assignment(red, fx.lc, *fx.bundle.group, sl, sr);
  CHECK(evaluate(red.instance, sigma) == 1.0);
  CHECK(dictator_strategy_value(fx.lc, *fx.bundle.group, sl, sr,
                                GadgetMode::Perfect, 0.0, 2000, 8) == 1.0);
}

TEST_CASE("imperfect mode: dictator pass rate is 1 - eps + eps/|G|") {
  Fixture fx;
  auto [sl, sr] = lift_assignment(fx.lc, fx.bits);
  const double eps = 0.1;
  const int samples = 20000;
  double value = dictator_strategy_value(fx.lc, *fx.bundle.group, sl, sr,
                                         GadgetMode::Imperfect, eps, samples, 6);
  double expected = 1.0 - eps + eps / 6.0;
  double sigma = std::sqrt(expected * (1 - expected) / samples);
  CHECK(std::abs(value - expected) <= 3 * sigma);
}

TEST_CASE("eps = 1 makes the dictator pass rate collapse to 1/|G|") {
  Fixture fx;
  auto [sl, sr] = lift_assignment(fx.lc, fx.bits);
  const int samples = 20000;
  double value = dictator_strategy_value(fx.lc, *fx.bundle.group, sl, sr,
                                         GadgetMode::Imperfect, 1.0, samples, 4);
  double expected = 1.0 / 6.0;
  double sigma = std::sqrt(expected * (1 - expected) / samples);
  CHECK(std::abs(value - expected) <= 3 * sigma);
}

TEST_CASE("labelings violating the extractor word are rejected") {
  Fixture fx;
  auto [sl, sr] = lift_assignment(fx.lc, fx.bits);
  // Force some w onto a label whose extractor word cannot match its b word.
  std::vector<Label> sr_bad = sr;
  for (size_t w = 0; w < sr_bad.size(); ++w) {
    Label ell = sr_bad[w];
    if (fx.lc.pattern_word(ell ^ 1) != fx.lc.b_word(static_cast<int>(w))) {
      sr_bad[w] = ell ^ 1;
      break;
    }
  }
  CHECK_THROWS_AS(dictator_strategy_value(fx.lc, *fx.bundle.group, sl, sr_bad,
                                          GadgetMode::Perfect, 0.0, 5000, 2),
                  Error);
}

TEST_CASE("replaying a seed reproduces the instance byte for byte") {
  Fixture fx;
  auto a = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Imperfect, 0.3,
                          200, 123);
  auto b = build_instance(fx.lc, *fx.bundle.group, GadgetMode::Imperfect, 0.3,
                          200, 123);
  CHECK(a.instance.n_vars == b.instance.n_vars);
  REQUIRE(a.instance.constraints.size() == b.instance.constraints.size());
  for (size_t i = 0; i < a.instance.constraints.size(); ++i) {
    CHECK(a.instance.constraints[i].i1 == b.instance.constraints[i].i1);
    CHECK(a.instance.constraints[i].c == b.instance.constraints[i].c);
  }
}
