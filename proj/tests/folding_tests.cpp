#include <doctest.h>

#include "ufg3lin/catalog.hpp"
#include "ufg3lin/folding.hpp"

using namespace ufg3lin;

namespace {

PatternFamily random_patterns(int R, int r, Rng& rng) {
  PatternFamily pf;
  pf.r = r;
  pf.R = R;
  pf.pattern.resize(static_cast<size_t>(R));
  for (auto& w : pf.pattern)
    w = static_cast<uint32_t>(rng.below(uint64_t(1) << r));
  return pf;
}

std::vector<Elem> random_tuple(const Group& g, int R, Rng& rng) {
  std::vector<Elem> x(static_cast<size_t>(R));
  for (auto& e : x) e = static_cast<Elem>(rng.below(g.order()));
  return x;
}

// Applies a pattern-indexed left factor: (F o x)_d = F(pattern(d)) x_d.
std::vector<Elem> apply_factor(const Group& g, const std::map<uint32_t, Elem>& F,
                               const std::vector<Elem>& x,
                               const PatternFamily& pf) {
  std::vector<Elem> out(x.size());
  for (size_t d = 0; d < x.size(); ++d)
    out[d] = g.mul(F.at(pf.pattern[d]), x[d]);
  return out;
}

}  // namespace

TEST_CASE("canonicalize is idempotent and constant on equivalence classes") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  Rng rng(derive_seed(3, "canon-tests"));
  for (int trial = 0; trial < 200; ++trial) {
    PatternFamily pf = random_patterns(4, 2, rng);
    std::vector<Elem> x = random_tuple(g, 4, rng);
    CanonicalForm cf = canonicalize(g, x, pf);

    // idempotence: the representative canonicalizes to itself
    CanonicalForm cf2 = canonicalize(g, cf.representative, pf);
    CHECK(cf2.representative == cf.representative);

    // witness relation: x_d = witness(pattern(d)) . rep_d
    for (int d = 0; d < pf.R; ++d)
      CHECK(x[static_cast<size_t>(d)] ==
            g.mul(cf.witness.at(pf.pattern[d]),
                  cf.representative[static_cast<size_t>(d)]));

    // class constancy: shifting by any pattern factor keeps the representative
    std::map<uint32_t, Elem> F;
    for (uint32_t w : pf.attained_words())
      F[w] = static_cast<Elem>(rng.below(g.order()));
    CanonicalForm cf3 = canonicalize(g, apply_factor(g, F, x, pf), pf);
    CHECK(cf3.representative == cf.representative);
  }
}

TEST_CASE("functional folding: f(F o x) = F(b) f(x) for attained b") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  Rng rng(derive_seed(5, "fold-prop"));
  for (int rep = 0; rep < 10; ++rep) {
    PatternFamily pf = random_patterns(3, 2, rng);
    uint32_t b = pf.pattern[rng.below(3)];
    FoldedFunction f = FoldedFunction::random_table(g, FoldKind::Functional,
                                                    pf, b, 3, rng.next());
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Elem> x = random_tuple(g, 3, rng);
      std::map<uint32_t, Elem> F;
      for (uint32_t w = 0; w < 4; ++w)
        F[w] = static_cast<Elem>(rng.below(g.order()));
      CHECK(f.query(apply_factor(g, F, x, pf)) == g.mul(F.at(b), f.query(x)));
    }
  }
}

TEST_CASE("classical right folding: f(x c) = f(x) c") {
  auto bundle = builtin_group("Q8");
  const Group& g = *bundle.group;
  Rng rng(derive_seed(6, "classical-prop"));
  PatternFamily pf = random_patterns(3, 1, rng);
  FoldedFunction f = FoldedFunction::random_table(g, FoldKind::ClassicalRight,
                                                  pf, 0, 3, rng.next());
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Elem> x = random_tuple(g, 3, rng);
    Elem c = static_cast<Elem>(rng.below(g.order()));
    CHECK(f.query(tuple_right_scale(g, x, c)) == g.mul(f.query(x), c));
  }
}

TEST_CASE("lazy tables agree with themselves and respect the folding") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  Rng rng(derive_seed(8, "lazy-prop"));
  PatternFamily pf = random_patterns(6, 2, rng);
  uint32_t b = pf.pattern[0];
  FoldedFunction f =
      FoldedFunction::lazy(g, FoldKind::Functional, pf, b, 6, 777);
  FoldedFunction f2 =
      FoldedFunction::lazy(g, FoldKind::Functional, pf, b, 6, 777);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> x = random_tuple(g, 6, rng);
    CHECK(f.query(x) == f2.query(x));  // same seed, independent instances
    std::map<uint32_t, Elem> F;
    for (uint32_t w = 0; w < 4; ++w)
      F[w] = static_cast<Elem>(rng.below(g.order()));
    CHECK(f.query(apply_factor(g, F, x, pf)) == g.mul(F.at(b), f.query(x)));
  }
}

TEST_CASE("eager tables reject unknown keys, lazy tables do not") {
  auto bundle = builtin_group("Z2");
  const Group& g = *bundle.group;
  PatternFamily pf;
  pf.r = 1;
  pf.R = 2;
  pf.pattern = {0, 1};
  FoldedFunction f =
      FoldedFunction::random_table(g, FoldKind::Free, pf, 0, 2, 1);
  CHECK_THROWS_AS(f.query({0, 1, 0}), Error);  // wrong arity
}

TEST_CASE("dictator table vanishing: sign coefficient at the trivial irrep") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;
  PatternFamily pf;
  pf.r = 2;
  pf.R = 3;
  pf.pattern = {0b01, 0b10, 0b01};
  const int ell = 2;
  const uint32_t b = pf.pattern[ell];
  FoldedFunction f =
      FoldedFunction::random_table(g, FoldKind::Functional, pf, b, 3, 4);
  // overwrite every canonical entry with the dictator at ell
  for (long idx = 0; idx < domain_size(g, 3); ++idx) {
    CanonicalForm cf = canonicalize(g, index_to_tuple(g, 3, idx), pf);
    f.set(cf.representative, cf.representative[ell]);
  }
  // dictator with pattern(ell) = b reads through the fold exactly
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Elem> x(3);
    for (auto& e : x) e = static_cast<Elem>(rng.below(g.order()));
    CHECK(f.query(x) == x[ell]);
  }
  int sign_idx = -1;
  for (int i = 0; i < cat.size(); ++i)
    if (cat[i].dim == 1 && i != cat.trivial_index()) sign_idx = i;
  VanishingReport vr = check_vanishing(
      cat, f, sign_idx, 0, 0, VanishingLemma::TrivialCoefficient);
  CHECK(vr.pass());
  CHECK(vr.max_non_asserted > 0.01);
}

TEST_CASE("all four vanishing claims hold on random folded tables") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;
  int sign_idx = -1, std_idx = -1;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat[i].dim == 2) std_idx = i;
    else if (i != cat.trivial_index()) sign_idx = i;
  }
  Rng rng(derive_seed(10, "vanishing-tests"));
  for (int rep = 0; rep < 5; ++rep) {
    PatternFamily pf = random_patterns(3, 2, rng);
    uint32_t b = pf.pattern[rng.below(3)];
    FoldedFunction f = FoldedFunction::random_table(g, FoldKind::Functional,
                                                    pf, b, 3, rng.next());
    CHECK(check_vanishing(cat, f, sign_idx, 0, 0,
                          VanishingLemma::TrivialCoefficient)
              .pass());
    CHECK(check_vanishing(cat, f, std_idx, 0, 1,
                          VanishingLemma::DimOneCoefficients)
              .pass());
    CHECK(check_vanishing(cat, f, sign_idx, 0, 0,
                          VanishingLemma::OffPatternNontrivial)
              .pass());
    CHECK(check_vanishing(cat, f, std_idx, 1, 0,
                          VanishingLemma::OffPatternHighDim)
              .pass());
  }
}

TEST_CASE("vanishing preconditions are enforced") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;
  Rng rng(12);
  PatternFamily pf = random_patterns(2, 1, rng);
  FoldedFunction functional = FoldedFunction::random_table(
      g, FoldKind::Functional, pf, pf.pattern[0], 2, 1);
  FoldedFunction classical = FoldedFunction::random_table(
      g, FoldKind::ClassicalRight, pf, pf.pattern[0], 2, 1);
  int sign_idx = -1;
  for (int i = 0; i < cat.size(); ++i)
    if (cat[i].dim == 1 && i != cat.trivial_index()) sign_idx = i;
  // trivial rho rejected for the nontrivial-coefficient claims
  CHECK_THROWS_AS(check_vanishing(cat, functional, cat.trivial_index(), 0, 0,
                                  VanishingLemma::TrivialCoefficient),
                  Error);
  // dim-1 rho rejected where dim >= 2 is required
  CHECK_THROWS_AS(check_vanishing(cat, functional, sign_idx, 0, 0,
                                  VanishingLemma::DimOneCoefficients),
                  Error);
  // classically folded table rejected for the pattern-based claims
  CHECK_THROWS_AS(check_vanishing(cat, classical, sign_idx, 0, 0,
                                  VanishingLemma::OffPatternNontrivial),
                  Error);
}
