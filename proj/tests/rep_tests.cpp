#include <doctest.h>

#include <algorithm>

#include "ufg3lin/catalog.hpp"
#include "ufg3lin/rep.hpp"
#include "ufg3lin/rng.hpp"

using namespace ufg3lin;

namespace {

FnTable random_fn(const Group& g, int n, Rng& rng) {
  FnTable f(static_cast<size_t>(domain_size(g, n)));
  for (auto& v : f) v = Cplx(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
  return f;
}

std::vector<int> sorted_dims(const IrrepCatalog& cat) {
  std::vector<int> dims;
  for (const auto& rho : cat.irreps()) dims.push_back(rho.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

TEST_CASE("irrep dimension profiles of the builtins") {
  CHECK(sorted_dims(*builtin_group("S3").catalog) == std::vector<int>{1, 1, 2});
  CHECK(sorted_dims(*builtin_group("D4").catalog) ==
        std::vector<int>{1, 1, 1, 1, 2});
  CHECK(sorted_dims(*builtin_group("Q8").catalog) ==
        std::vector<int>{1, 1, 1, 1, 2});
  CHECK(sorted_dims(*builtin_group("Z6").catalog) ==
        std::vector<int>{1, 1, 1, 1, 1, 1});
  for (const auto& name : builtin_names()) {
    auto bundle = builtin_group(name);
    int sum = 0;
    for (const auto& rho : bundle.catalog->irreps()) sum += rho.dim * rho.dim;
    CHECK(sum == bundle.group->order());
  }
}

TEST_CASE("S3 character table has the known values") {
  auto bundle = builtin_group("S3");
  const IrrepCatalog& cat = *bundle.catalog;
  // element order: e, (12), (13), (23), (123), (132)
  std::vector<std::vector<double>> want = {
      {1, 1, 1, 1, 1, 1},        // trivial
      {1, -1, -1, -1, 1, 1},     // sign
      {2, 0, 0, 0, -1, -1},      // standard
  };
  for (const auto& row : want) {
    bool found = false;
    for (int i = 0; i < cat.size(); ++i) {
      bool match = true;
      for (Elem x = 0; x < 6; ++x)
        match = match && std::abs(cat[i].character(x) - row[x]) < kTol;
      found = found || match;
    }
    CHECK(found);
  }
}

TEST_CASE("Q8 two-dimensional character is 2,-2,0,...") {
  auto bundle = builtin_group("Q8");
  const IrrepCatalog& cat = *bundle.catalog;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat[i].dim != 2) continue;
    CHECK(std::abs(cat[i].character(0) - 2.0) < kTol);   // 1
    CHECK(std::abs(cat[i].character(1) + 2.0) < kTol);   // -1
    for (Elem x = 2; x < 8; ++x) CHECK(std::abs(cat[i].character(x)) < kTol);
  }
}

TEST_CASE("character sums satisfy the delta identity") {
  for (const auto& name : builtin_names())
    CHECK(character_table(*builtin_group(name).catalog).dim_sum_deviation <
          kTol);
}

TEST_CASE("transform of the identity-point mass is I/|G|") {
  auto bundle = builtin_group("D4");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;
  FnTable delta(static_cast<size_t>(g.order()), 0.0);
  delta[g.identity()] = 1.0;
  for (const auto& alpha : all_product_irreps(cat, 1)) {
    Matrix fh = fourier_transform(cat, delta, 1, alpha).matrix;
    Matrix want = Matrix::Identity(fh.rows(), fh.cols()) /
                  static_cast<double>(g.order());
    CHECK((fh - want).cwiseAbs().maxCoeff() < kTol);
  }
}

TEST_CASE("inversion, Parseval and convolution on random functions") {
  Rng rng(derive_seed(2024, "rep-tests"));
  for (const auto& name : {"Z6", "S3", "Q8"}) {
    auto bundle = builtin_group(name);
    const IrrepCatalog& cat = *bundle.catalog;
    for (int n : {1, 2}) {
      auto alphas = all_product_irreps(cat, n);
      for (int k = 0; k < 5; ++k) {
        FnTable f = random_fn(*bundle.group, n, rng);
        FnTable h = random_fn(*bundle.group, n, rng);

        std::vector<FourierCoefficient> cf, product;
        for (const auto& a : alphas) {
          cf.push_back(fourier_transform(cat, f, n, a));
          FourierCoefficient p = cf.back();
          p.matrix = p.matrix * fourier_transform(cat, h, n, a).matrix;
          product.push_back(p);
        }
        FnTable back = inverse_fourier(cat, n, cf);
        for (size_t i = 0; i < f.size(); ++i)
          CHECK(std::abs(f[i] - back[i]) < kTol);

        CHECK(parseval_check(cat, f, n).gap < kTol);

        // convolution theorem through the independent path: multiply the
        // transforms and invert, compare against the direct convolution
        FnTable conv = convolve(cat, f, h, n);
        FnTable via_fourier = inverse_fourier(cat, n, product);
        for (size_t i = 0; i < conv.size(); ++i)
          CHECK(std::abs(conv[i] - via_fourier[i]) < kTol);
      }
    }
  }
}

TEST_CASE("convolving with the scaled point mass is the identity") {
  auto bundle = builtin_group("S3");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;
  Rng rng(7);
  FnTable f = random_fn(g, 1, rng);
  FnTable delta(static_cast<size_t>(g.order()), 0.0);
  delta[g.identity()] = static_cast<double>(g.order());
  FnTable conv = convolve(cat, f, delta, 1);
  for (size_t i = 0; i < f.size(); ++i) CHECK(std::abs(f[i] - conv[i]) < kTol);
}

TEST_CASE("pullback along the identity map returns alpha itself") {
  auto bundle = builtin_group("S3");
  const IrrepCatalog& cat = *bundle.catalog;
  ProductIrrep alpha;
  alpha.components = {2, 0, 1};
  std::vector<int> pi = {0, 1, 2};
  auto cons = pullback_decompose(cat, alpha, pi, 3);
  int positive = 0;
  for (const auto& c : cons)
    if (c.multiplicity > 0) {
      ++positive;
      CHECK(c.tau.components == alpha.components);
      CHECK(c.multiplicity == 1);
    }
  CHECK(positive == 1);
}

TEST_CASE("pullback of std x std along a constant map is 1 + sign + std") {
  auto bundle = builtin_group("S3");
  const IrrepCatalog& cat = *bundle.catalog;
  int std_idx = -1, sign_idx = -1;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat[i].dim == 2) std_idx = i;
    else if (i != cat.trivial_index()) sign_idx = i;
  }
  ProductIrrep alpha;
  alpha.components = {std_idx, std_idx};
  std::vector<int> pi = {0, 0};
  auto cons = pullback_decompose(cat, alpha, pi, 1);
  int total_dim = 0;
  for (const auto& c : cons) {
    total_dim += c.multiplicity * c.tau.dim(cat);
    if (c.multiplicity == 0) continue;
    int comp = c.tau.components[0];
    CHECK(c.multiplicity == 1);
    CHECK((comp == cat.trivial_index() || comp == sign_idx || comp == std_idx));
  }
  CHECK(total_dim == alpha.dim(cat));
}

TEST_CASE("containment chains hold on random projections") {
  auto bundle = builtin_group("S3");
  const IrrepCatalog& cat = *bundle.catalog;
  Rng rng(derive_seed(11, "containment-tests"));
  for (int trial = 0; trial < 100; ++trial) {
    int R = 2 + static_cast<int>(rng.below(2));
    int L = 1 + static_cast<int>(rng.below(2));
    ProductIrrep alpha;
    alpha.components.resize(static_cast<size_t>(R));
    for (auto& c : alpha.components)
      c = static_cast<int>(rng.below(static_cast<uint64_t>(cat.size())));
    std::vector<int> pi(static_cast<size_t>(R));
    for (auto& p : pi) p = static_cast<int>(rng.below(static_cast<uint64_t>(L)));
    for (auto mode : {ContainmentMode::Plain, ContainmentMode::Tilde})
      CHECK(verify_containments(cat, alpha, pi, L, mode).ok());
  }
}

TEST_CASE("t-sets of a concrete projection") {
  auto bundle = builtin_group("S3");
  const IrrepCatalog& cat = *bundle.catalog;
  int std_idx = -1, sign_idx = -1;
  for (int i = 0; i < cat.size(); ++i) {
    if (cat[i].dim == 2) std_idx = i;
    else if (i != cat.trivial_index()) sign_idx = i;
  }
  // alpha = (std, sign, trivial), pi = (0, 0, 1): coordinate 0 of [L] is hit
  // by two nontrivial components, coordinate 1 only by a trivial one.
  ProductIrrep alpha;
  alpha.components = {std_idx, sign_idx, cat.trivial_index()};
  std::vector<int> pi = {0, 0, 1};
  TSets ts = t_sets(cat, alpha, pi);
  CHECK(ts.T_pi == std::set<int>{0});
  CHECK(ts.T_pi_uq == std::set<int>{});       // 0 is hit twice
  CHECK(ts.tilde_T_pi == std::set<int>{0});   // std is dim >= 2
}

TEST_CASE("errors: oversized tensor and missing coefficients") {
  auto bundle = builtin_group("Q8");
  const IrrepCatalog& cat = *bundle.catalog;
  int two = -1;
  for (int i = 0; i < cat.size(); ++i)
    if (cat[i].dim == 2) two = i;
  ProductIrrep alpha;
  alpha.components.assign(7, two);  // dim 128 > materialization cap
  std::vector<Elem> x(7, 0);
  CHECK_THROWS_AS(alpha.evaluate(cat, x), Error);

  FnTable f(static_cast<size_t>(cat.group().order()), 1.0);
  auto coeffs = std::vector<FourierCoefficient>{};
  CHECK_THROWS_AS(inverse_fourier(cat, 1, coeffs), Error);
}
