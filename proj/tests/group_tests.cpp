#include <doctest.h>

#include <array>
#include <queue>

#include "ufg3lin/catalog.hpp"
#include "ufg3lin/group.hpp"

using namespace ufg3lin;

namespace {

// Independent S3 oracle: permutations in the fixed element order, composed
// as (a o b)(i) = a(b(i)).
using Perm = std::array<int, 3>;
const std::array<Perm, 6> kS3 = {{
    {0, 1, 2},  // e
    {1, 0, 2},  // (12)
    {2, 1, 0},  // (13)
    {0, 2, 1},  // (23)
    {1, 2, 0},  // (123)
    {2, 0, 1},  // (132)
}};

Perm compose(const Perm& a, const Perm& b) {
  return {a[b[0]], a[b[1]], a[b[2]]};
}

int perm_index(const Perm& p) {
  for (size_t i = 0; i < kS3.size(); ++i)
    if (kS3[i] == p) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("S3 multiplication table matches the permutation oracle") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  REQUIRE(g.order() == 6);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      CHECK(g.mul(a, b) == perm_index(compose(kS3[a], kS3[b])));
}

TEST_CASE("group axioms hold on every builtin") {
  for (const auto& name : builtin_names()) {
    auto bundle = builtin_group(name);
    const Group& g = *bundle.group;
    Elem e = g.identity();
    for (Elem a = 0; a < g.order(); ++a) {
      CHECK(g.mul(e, a) == a);
      CHECK(g.mul(a, e) == a);
      CHECK(g.mul(a, g.inv(a)) == e);
      CHECK(g.mul(g.inv(a), a) == e);
    }
  }
}

TEST_CASE("invalid tables are rejected") {
  // 2x2 table with no identity row/column
  std::vector<std::vector<Elem>> no_id = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(Group("bad", no_id), Error);
  // non-associative magma on 3 elements with identity 0
  std::vector<std::vector<Elem>> non_assoc = {
      {0, 1, 2}, {1, 0, 2}, {2, 2, 1}};
  CHECK_THROWS_AS(Group("bad", non_assoc), Error);
  // ragged table
  std::vector<std::vector<Elem>> ragged = {{0, 1}, {1}};
  CHECK_THROWS_AS(Group("bad", ragged), Error);
}

TEST_CASE("commutator subgroup matches a closure oracle") {
  for (const auto& name : builtin_names()) {
    auto bundle = builtin_group(name);
    const Group& g = *bundle.group;
    // independent oracle: seed with all commutators, close under product
    std::set<Elem> want;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        want.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<Elem> next = want;
      for (Elem a : want)
        for (Elem b : want)
          if (next.insert(g.mul(a, b)).second) grew = true;
      want = next;
    }
    CHECK(commutator_subgroup(g).members == want);
  }
}

TEST_CASE("S3 commutator subgroup is the 3-cycle subgroup") {
  auto bundle = builtin_group("S3");
  Subgroup c = commutator_subgroup(*bundle.group);
  CHECK(c.members == std::set<Elem>{0, 4, 5});  // e, (123), (132)
}

TEST_CASE("abelianization invariant factors of the builtins") {
  auto factors = [](const std::string& name) {
    return abelianize(*builtin_group(name).group).invariant_factors;
  };
  CHECK(factors("Z2") == std::vector<int>{2});
  CHECK(factors("Z4") == std::vector<int>{4});
  CHECK(factors("Z6") == std::vector<int>{6});
  CHECK(factors("S3") == std::vector<int>{2});
  CHECK(factors("D4") == std::vector<int>{2, 2});
  CHECK(factors("Q8") == std::vector<int>{2, 2});
}

TEST_CASE("abelianization projection is a homomorphism with kernel [G,G]") {
  for (const auto& name : builtin_names()) {
    auto bundle = builtin_group(name);
    const Group& g = *bundle.group;
    AbelianDecomposition dec = abelianize(g);
    Subgroup comm = commutator_subgroup(g);
    // later factors divide earlier ones
    for (size_t i = 1; i < dec.invariant_factors.size(); ++i)
      CHECK(dec.invariant_factors[i - 1] % dec.invariant_factors[i] == 0);
    long quotient = 1;
    for (int m : dec.invariant_factors) quotient *= m;
    CHECK(quotient * comm.size() == g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      bool zero = true;
      for (int v : dec.project[a]) zero = zero && v == 0;
      CHECK(zero == comm.contains(a));
      for (Elem b = 0; b < g.order(); ++b)
        for (size_t i = 0; i < dec.invariant_factors.size(); ++i)
          CHECK((dec.project[a][i] + dec.project[b][i]) %
                    dec.invariant_factors[i] ==
                dec.project[g.mul(a, b)][i]);
    }
    // lift is a section of project
    std::vector<int> word(dec.invariant_factors.size(), 0);
    for (;;) {
      CHECK(dec.project[dec.lift_word(word)] == word);
      size_t pos = word.size();
      while (pos > 0 && ++word[pos - 1] == dec.invariant_factors[pos - 1])
        word[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

TEST_CASE("tuple operations act coordinatewise") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  std::vector<Elem> x = {1, 4, 0}, y = {2, 3, 5};
  auto xy = tuple_mul(g, x, y);
  for (size_t i = 0; i < x.size(); ++i) CHECK(xy[i] == g.mul(x[i], y[i]));
  auto xi = tuple_inv(g, x);
  for (size_t i = 0; i < x.size(); ++i)
    CHECK(g.mul(x[i], xi[i]) == g.identity());
  CHECK(tuple_left_scale(g, 4, x)[1] == g.mul(4, x[1]));
  CHECK(tuple_right_scale(g, x, 4)[2] == g.mul(x[2], 4));
  CHECK_THROWS_AS(tuple_mul(g, x, {0, 1}), Error);
}

TEST_CASE("group JSON round trip") {
  auto bundle = builtin_group("Q8");
  std::string text = group_to_json(*bundle.group, bundle.catalog.get());
  auto back = load_group(text);
  CHECK(back.group->mult_table() == bundle.group->mult_table());
  REQUIRE(back.catalog != nullptr);
  CHECK(back.catalog->size() == bundle.catalog->size());
}
