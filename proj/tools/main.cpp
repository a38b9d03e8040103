// Command-line front end: batch self-tests and generators over the library,
// emitting deterministic JSON reports. Exit status is 0 iff every assertion
// in the run passed. All randomness comes from --seed; identical config and
// seed produce byte-identical reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ufg3lin/catalog.hpp"
#include "ufg3lin/folding.hpp"
#include "ufg3lin/labelcover.hpp"
#include "ufg3lin/reduction.hpp"
#include "ufg3lin/rep.hpp"
#include "ufg3lin/solvers.hpp"

using json = nlohmann::ordered_json;
using namespace ufg3lin;

namespace {

void emit(const json& report, const std::string& out) {
  std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::BadFile, "cannot write " + out);
    f << text;
  }
}

FnTable random_fn(const Group& g, int n, Rng& rng) {
  FnTable f(static_cast<size_t>(domain_size(g, n)));
  for (auto& v : f) v = Cplx(2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
  return f;
}

// --- group verify -----------------------------------------------------------

json cmd_group_verify(const std::string& name, bool& pass) {
  auto bundle = resolve_group(name);  // the constructor is the validator
  const Group& g = *bundle.group;
  Subgroup comm = commutator_subgroup(g);
  json rep;
  rep["command"] = "group verify";
  rep["group"] = g.name();
  rep["order"] = g.order();
  rep["identity"] = g.identity();
  rep["commutator_size"] = comm.size();
  rep["abelian"] = comm.size() == 1;
  rep["has_irreps"] = bundle.catalog != nullptr;
  rep["pass"] = true;
  pass = true;
  return rep;
}

// --- group abelianize --------------------------------------------------------

json cmd_group_abelianize(const std::string& name, bool& pass) {
  auto bundle = resolve_group(name);
  const Group& g = *bundle.group;
  AbelianDecomposition dec = abelianize(g);
  Subgroup comm = commutator_subgroup(g);
  long quotient = 1;
  for (int m : dec.invariant_factors) quotient *= m;
  bool order_ok = quotient * comm.size() == g.order();
  // project must be a homomorphism with kernel exactly the commutators
  bool hom_ok = true, kernel_ok = true;
  for (Elem a = 0; a < g.order() && hom_ok; ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const auto& pa = dec.project[a];
      const auto& pb = dec.project[b];
      const auto& pab = dec.project[g.mul(a, b)];
      for (size_t i = 0; i < dec.invariant_factors.size(); ++i)
        if ((pa[i] + pb[i]) % dec.invariant_factors[i] != pab[i]) {
          hom_ok = false;
          break;
        }
      if (!hom_ok) break;
    }
  for (Elem a = 0; a < g.order(); ++a) {
    bool zero = true;
    for (int r : dec.project[a]) zero = zero && r == 0;
    if (zero != comm.contains(a)) kernel_ok = false;
  }
  json rep;
  rep["command"] = "group abelianize";
  rep["group"] = g.name();
  rep["invariant_factors"] = dec.invariant_factors;
  rep["commutator_size"] = comm.size();
  rep["order_check"] = order_ok;
  rep["homomorphism_check"] = hom_ok;
  rep["kernel_check"] = kernel_ok;
  pass = order_ok && hom_ok && kernel_ok;
  rep["pass"] = pass;
  return rep;
}

// --- rep selftest ------------------------------------------------------------

double catalog_deviation(const IrrepCatalog& cat) {
  const Group& g = cat.group();
  double dev = 0;
  for (const Irrep& rho : cat.irreps()) {
    for (Elem a = 0; a < g.order(); ++a) {
      dev = std::max(dev, (rho.at(a) * rho.at(a).adjoint() -
                           Matrix::Identity(rho.dim, rho.dim))
                              .cwiseAbs()
                              .maxCoeff());
      for (Elem b = 0; b < g.order(); ++b)
        dev = std::max(dev, (rho.at(g.mul(a, b)) - rho.at(a) * rho.at(b))
                                .cwiseAbs()
                                .maxCoeff());
    }
  }
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < cat.size(); ++j) {
      Cplx ip = 0;
      for (Elem x = 0; x < g.order(); ++x)
        ip += cat[i].character(x) * std::conj(cat[j].character(x));
      ip /= static_cast<double>(g.order());
      dev = std::max(dev, std::abs(ip - Cplx(i == j ? 1.0 : 0.0)));
    }
  return dev;
}

json cmd_rep_selftest(const std::string& name, int functions, int trials,
                      uint64_t seed, bool& pass) {
  auto bundle = resolve_group(name);
  if (!bundle.catalog)
    throw Error(ErrorCode::CatalogIncomplete,
                "group " + name + " has no irrep table");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;

  double axiom_dev = catalog_deviation(cat);
  double char_sum_dev = character_table(cat).dim_sum_deviation;

  Rng rng(derive_seed(seed, "rep-selftest"));
  double inv_dev = 0, parseval_dev = 0, conv_dev = 0;
  for (int n = 1; n <= 2; ++n) {
    auto alphas = all_product_irreps(cat, n);
    for (int k = 0; k < functions; ++k) {
      FnTable f = random_fn(g, n, rng);
      std::vector<FourierCoefficient> coeffs;
      coeffs.reserve(alphas.size());
      for (const auto& a : alphas)
        coeffs.push_back(fourier_transform(cat, f, n, a));
      FnTable back = inverse_fourier(cat, n, coeffs);
      for (size_t i = 0; i < f.size(); ++i)
        inv_dev = std::max(inv_dev, std::abs(f[i] - back[i]));
      parseval_dev = std::max(parseval_dev, parseval_check(cat, f, n).gap);
      FnTable h = random_fn(g, n, rng);
      FnTable conv = convolve(cat, f, h, n);
      for (const auto& a : alphas) {
        Matrix lhs = fourier_transform(cat, conv, n, a).matrix;
        Matrix rhs = fourier_transform(cat, f, n, a).matrix *
                     fourier_transform(cat, h, n, a).matrix;
        conv_dev = std::max(conv_dev, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  }

  int violations = 0, checked = 0;
  Rng crng(derive_seed(seed, "containments"));
  for (int k = 0; k < trials; ++k) {
    int R = 2 + static_cast<int>(crng.below(2));  // R in {2,3}
    int L = 1 + static_cast<int>(crng.below(2));  // L in {1,2}
    ProductIrrep alpha;
    alpha.components.resize(static_cast<size_t>(R));
    for (auto& c : alpha.components)
      c = static_cast<int>(crng.below(static_cast<uint64_t>(cat.size())));
    std::vector<int> pi(static_cast<size_t>(R));
    for (auto& p : pi) p = static_cast<int>(crng.below(static_cast<uint64_t>(L)));
    for (ContainmentMode mode : {ContainmentMode::Plain, ContainmentMode::Tilde}) {
      auto cr = verify_containments(cat, alpha, pi, L, mode);
      checked += cr.constituents_checked;
      violations += static_cast<int>(cr.violations.size());
    }
  }

  json rep;
  rep["command"] = "rep selftest";
  rep["group"] = g.name();
  rep["functions_per_arity"] = functions;
  rep["axiom_deviation"] = axiom_dev;
  rep["character_sum_deviation"] = char_sum_dev;
  rep["inversion_deviation"] = inv_dev;
  rep["parseval_deviation"] = parseval_dev;
  rep["convolution_deviation"] = conv_dev;
  rep["containment_trials"] = trials;
  rep["containment_constituents"] = checked;
  rep["containment_violations"] = violations;
  pass = axiom_dev < kTol && char_sum_dev < kTol && inv_dev < kTol &&
         parseval_dev < kTol && conv_dev < kTol && violations == 0;
  rep["pass"] = pass;
  return rep;
}

// --- fold selftest -----------------------------------------------------------

json cmd_fold_selftest(const std::string& name, int R, int r, int count,
                       uint64_t seed, bool& pass) {
  auto bundle = resolve_group(name);
  if (!bundle.catalog)
    throw Error(ErrorCode::CatalogIncomplete,
                "group " + name + " has no irrep table");
  const Group& g = *bundle.group;
  const IrrepCatalog& cat = *bundle.catalog;
  int dim1_nontrivial = -1, high_dim = -1;
  for (int i = 0; i < cat.size(); ++i) {
    if (i != cat.trivial_index() && cat[i].dim == 1 && dim1_nontrivial < 0)
      dim1_nontrivial = i;
    if (cat[i].dim >= 2 && high_dim < 0) high_dim = i;
  }
  if (dim1_nontrivial < 0) dim1_nontrivial = high_dim;

  Rng rng(derive_seed(seed, "fold-selftest"));
  pass = true;
  json runs = json::array();
  for (int k = 0; k < count; ++k) {
    PatternFamily pf;
    pf.r = r;
    pf.R = R;
    pf.pattern.resize(static_cast<size_t>(R));
    for (auto& w : pf.pattern)
      w = static_cast<uint32_t>(rng.below(uint64_t(1) << r));
    uint32_t b = pf.pattern[rng.below(static_cast<uint64_t>(R))];  // attained
    FoldedFunction f = FoldedFunction::random_table(
        g, FoldKind::Functional, pf, b, R, rng.next());

    json lemmas = json::array();
    for (VanishingLemma lemma :
         {VanishingLemma::TrivialCoefficient, VanishingLemma::DimOneCoefficients,
          VanishingLemma::OffPatternNontrivial, VanishingLemma::OffPatternHighDim}) {
      bool needs_high = lemma == VanishingLemma::DimOneCoefficients ||
                        lemma == VanishingLemma::OffPatternHighDim;
      int rho = needs_high ? high_dim : dim1_nontrivial;
      if (rho < 0) continue;  // group lacks a suitable irrep
      int d = cat[rho].dim;
      int p = static_cast<int>(rng.below(static_cast<uint64_t>(d)));
      int q = static_cast<int>(rng.below(static_cast<uint64_t>(d)));
      VanishingReport vr = check_vanishing(cat, f, rho, p, q, lemma);
      json jl;
      jl["lemma"] = static_cast<int>(lemma);
      jl["rho"] = vr.rho_label;
      jl["asserted_zero"] = vr.asserted_count;
      jl["max_asserted"] = vr.max_asserted;
      jl["max_non_asserted"] = vr.max_non_asserted;
      bool ok = vr.pass() && vr.max_non_asserted > 0.01;
      jl["pass"] = ok;
      pass = pass && ok;
      lemmas.push_back(jl);
    }
    runs.push_back({{"iteration", k}, {"b", b}, {"lemmas", lemmas}});
  }

  json rep;
  rep["command"] = "fold selftest";
  rep["group"] = g.name();
  rep["R"] = R;
  rep["r"] = r;
  rep["count"] = count;
  rep["runs"] = runs;
  rep["pass"] = pass;
  return rep;
}

// --- lc gen / check ----------------------------------------------------------

UFGLabelCover make_game(int n_vars, int m, int r, int t, int count_w,
                        int edges_per_w, uint64_t seed,
                        std::vector<int>* bits_out) {
  auto [tsa, bits] = random_satisfiable_tsa(n_vars, m, derive_seed(seed, "tsa"));
  if (bits_out) *bits_out = bits;
  return parallel_repeat(tsa, r, t, count_w, edges_per_w,
                         derive_seed(seed, "repeat"));
}

json cmd_lc_gen(int n_vars, int m, int r, int t, int count_w, int edges_per_w,
                uint64_t seed, const std::string& save_tsa, bool& pass) {
  std::vector<int> bits;
  UFGLabelCover lc = make_game(n_vars, m, r, t, count_w, edges_per_w, seed, &bits);
  auto [sl, sr] = lift_assignment(lc, bits);
  double val = lc_value(lc, sl, sr);
  if (!save_tsa.empty()) {
    MaxTSAInstance tsa;
    tsa.n_vars = n_vars;
    tsa.constraints = lc.source;
    tsa.save(save_tsa);
  }
  json rep;
  rep["command"] = "lc gen";
  rep["r"] = r;
  rep["t"] = t;
  rep["w_vertices"] = lc.W.size();
  rep["edges"] = lc.edges.size();
  rep["R"] = lc.R_size();
  rep["L"] = lc.L_size();
  rep["lifted_value"] = val;
  pass = val == 1.0;
  rep["pass"] = pass;
  return rep;
}

json cmd_lc_smoothness(int r, int t, const std::vector<int>& set_sizes,
                       int edges, bool image_mode, int image_trials,
                       uint64_t seed, bool& pass) {
  UFGLabelCover lc = make_game(40, std::max(8, 4 * r), r, t, 1, edges, seed,
                               nullptr);
  Rng rng(derive_seed(seed, "subsets"));
  pass = true;
  json checks = json::array();
  for (int s : set_sizes) {
    std::set<Label> chosen;
    while (static_cast<int>(chosen.size()) < s)
      chosen.insert(rng.below(lc.R_size()));
    std::vector<Label> S(chosen.begin(), chosen.end());
    SmoothnessReport sm = smoothness_check(lc, S, 0);
    json jc;
    jc["set_size"] = s;
    jc["empirical"] = sm.empirical;
    jc["bound"] = sm.bound;
    jc["sigma"] = sm.sigma;
    jc["pass"] = sm.pass();
    pass = pass && sm.pass();
    if (image_mode) {
      ImageBoundReport ib = image_bound_check(lc, 0.25, s, image_trials,
                                              derive_seed(seed, "image"));
      jc["image_empirical"] = ib.empirical;
      jc["image_bound"] = ib.bound;
      jc["image_exact_zero_branch"] = ib.exact_zero_branch;
      jc["image_pass"] = ib.pass();
      pass = pass && ib.pass();
    }
    checks.push_back(jc);
  }
  json rep;
  rep["command"] = "lc check-smoothness";
  rep["r"] = r;
  rep["t"] = t;
  rep["edges"] = edges;
  rep["checks"] = checks;
  rep["pass"] = pass;
  return rep;
}

// --- reduce ------------------------------------------------------------------

GadgetMode parse_mode(const std::string& mode) {
  if (mode == "perfect") return GadgetMode::Perfect;
  if (mode == "imperfect") return GadgetMode::Imperfect;
  throw Error(ErrorCode::UsageError, "mode must be perfect or imperfect");
}

void save_registry(const VariableRegistry& reg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadFile, "cannot write " + path);
  static const char* kKind[] = {"folded", "free", "classical"};
  for (int i = 0; i < reg.size(); ++i) {
    const VarKey& k = reg.key_of(i);
    out << i << ' ' << kKind[static_cast<int>(k.kind)] << ' ' << k.vertex;
    for (Elem e : k.key) out << ' ' << e;
    out << '\n';
  }
}

json cmd_reduce_gen(const std::string& group, int r, int t,
                    const std::string& mode, double eps, int m, uint64_t seed,
                    const std::string& out_inst, const std::string& out_reg,
                    bool& pass) {
  auto bundle = resolve_group(group);
  const Group& g = *bundle.group;
  UFGLabelCover lc = make_game(20, std::max(4, 2 * r), r, t, 4, 4, seed, nullptr);
  ReductionOutput red =
      build_instance(lc, g, parse_mode(mode), eps, m, derive_seed(seed, "inst"));
  if (!out_inst.empty()) red.instance.save(out_inst);
  if (!out_reg.empty()) save_registry(red.registry, out_reg);
  json rep;
  rep["command"] = "reduce gen";
  rep["group"] = g.name();
  rep["mode"] = mode;
  rep["m"] = m;
  rep["n_vars"] = red.instance.n_vars;
  rep["fingerprint"] = factor_graph_fingerprint(red.instance);
  pass = true;
  rep["pass"] = pass;
  return rep;
}

json cmd_reduce_completeness(const std::string& group, int r, int t,
                             const std::string& mode, double eps, int samples,
                             uint64_t seed, bool& pass) {
  auto bundle = resolve_group(group);
  const Group& g = *bundle.group;
  std::vector<int> bits;
  UFGLabelCover lc = make_game(20, std::max(4, 2 * r), r, t, 4, 4, seed, &bits);
  auto [sl, sr] = lift_assignment(lc, bits);
  GadgetMode gm = parse_mode(mode);
  double value = dictator_strategy_value(lc, g, sl, sr, gm, eps, samples,
                                         derive_seed(seed, "dict"));
  double expected = gm == GadgetMode::Perfect
                        ? 1.0
                        : 1.0 - eps + eps / static_cast<double>(g.order());
  double sigma = std::sqrt(expected * (1 - expected) /
                           static_cast<double>(samples));
  pass = gm == GadgetMode::Perfect ? value == 1.0
                                   : std::abs(value - expected) <= 3 * sigma;
  json rep;
  rep["command"] = "reduce check-completeness";
  rep["group"] = g.name();
  rep["mode"] = mode;
  rep["eps"] = eps;
  rep["samples"] = samples;
  rep["value"] = value;
  rep["expected"] = expected;
  rep["sigma"] = sigma;
  rep["pass"] = pass;
  return rep;
}

json cmd_reduce_factor_graph(const std::string& group, int r, int t, int m,
                             int pairs, uint64_t seed, bool& pass) {
  auto bundle = resolve_group(group);
  const Group& g = *bundle.group;
  UFGLabelCover lc = make_game(20, std::max(4, 2 * r), r, t, 4, 4, seed, nullptr);
  Rng brng(derive_seed(seed, "b-vectors"));
  pass = true;
  json jpairs = json::array();
  for (int p = 0; p < pairs; ++p) {
    UFGLabelCover a = lc, b = lc;
    for (size_t i = 0; i < lc.source.size(); ++i) {
      a.source[i].b = static_cast<int>(brng.below(2));
      b.source[i].b = static_cast<int>(brng.below(2));
    }
    // force b != b' on a constraint some sampled w-vertex reads
    int used = lc.W[0][0];
    b.source[static_cast<size_t>(used)].b =
        a.source[static_cast<size_t>(used)].b ^ 1;
    uint64_t s = derive_seed(seed, "inst");
    auto ra = build_instance(a, g, GadgetMode::Perfect, 0.0, m, s);
    auto rb = build_instance(b, g, GadgetMode::Perfect, 0.0, m, s);
    bool fp_equal = factor_graph_fingerprint(ra.instance) ==
                    factor_graph_fingerprint(rb.instance);
    int rhs_diffs = 0;
    for (size_t i = 0; i < ra.instance.constraints.size(); ++i)
      rhs_diffs += ra.instance.constraints[i].c != rb.instance.constraints[i].c;
    bool ok = fp_equal && rhs_diffs > 0;
    jpairs.push_back({{"pair", p},
                      {"fingerprints_equal", fp_equal},
                      {"rhs_differences", rhs_diffs},
                      {"pass", ok}});
    pass = pass && ok;
  }
  json rep;
  rep["command"] = "reduce check-factor-graph";
  rep["group"] = g.name();
  rep["m"] = m;
  rep["pairs"] = jpairs;
  rep["pass"] = pass;
  return rep;
}

// --- solve -------------------------------------------------------------------

json cmd_solve(const std::string& path, const std::string& solver, int restarts,
               uint64_t seed, bool& pass) {
  auto bundle = resolve_group(Max3LinInstance::group_name_of(path));
  Max3LinInstance inst = Max3LinInstance::load(path, *bundle.group);
  json rep;
  rep["command"] = "solve";
  rep["solver"] = solver;
  rep["group"] = bundle.group->name();
  rep["n_vars"] = inst.n_vars;
  rep["m"] = inst.constraints.size();
  if (solver == "brute") {
    rep["value"] = brute_force(inst).value;
  } else if (solver == "random") {
    rep["value"] = random_baseline(inst, restarts, seed).value;
  } else if (solver == "abelian") {
    AbelianSolveResult res = abelian_solve(inst, seed);
    rep["value"] = res.value;
    rep["system_consistent"] = res.system_consistent;
    rep["fallback"] = res.fallback;
  } else {
    throw Error(ErrorCode::UsageError, "solver must be brute, random or abelian");
  }
  pass = true;
  rep["pass"] = pass;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-3-LIN over finite groups: generators, self-tests, solvers"};
  app.require_subcommand(1);

  std::string group = "S3", out, mode = "perfect", instance_path, solver = "brute";
  std::string save_tsa, out_reg;
  uint64_t seed = 1;
  int functions = 20, trials = 50, R = 3, r = 1, t = 1, count = 10;
  int n_vars = 20, m = 100, count_w = 4, edges_per_w = 4;
  int edges = 500, samples = 10000, pairs = 1, restarts = 1, image_trials = 200;
  bool image_mode = false;
  double eps = 0.1;
  std::vector<int> set_sizes{2, 3, 4};

  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", seed, "random seed");
    c->add_option("--out", out, "report file (default stdout)");
  };

  CLI::App* grp = app.add_subcommand("group", "group table commands");
  grp->require_subcommand(1);
  CLI::App* gv = grp->add_subcommand("verify", "validate group axioms");
  gv->add_option("--group", group, "builtin name or JSON file");
  add_common(gv);
  CLI::App* ga = grp->add_subcommand("abelianize", "invariant factors of G/[G,G]");
  ga->add_option("--group", group);
  add_common(ga);

  CLI::App* rp = app.add_subcommand("rep", "representation theory commands");
  rp->require_subcommand(1);
  CLI::App* rs = rp->add_subcommand("selftest", "Fourier and containment checks");
  rs->add_option("--group", group);
  rs->add_option("--functions", functions, "random functions per arity");
  rs->add_option("--containment-trials", trials);
  add_common(rs);

  CLI::App* fd = app.add_subcommand("fold", "folding commands");
  fd->require_subcommand(1);
  CLI::App* fs = fd->add_subcommand("selftest", "coefficient vanishing checks");
  fs->add_option("--group", group);
  fs->add_option("--R", R, "tuple length");
  fs->add_option("--r", r, "extractor count");
  fs->add_option("--count", count, "random tables");
  add_common(fs);

  CLI::App* lc = app.add_subcommand("lc", "label cover commands");
  lc->require_subcommand(1);
  CLI::App* lg = lc->add_subcommand("gen", "parallel repetition game");
  lg->add_option("--n-vars", n_vars);
  lg->add_option("--m", m, "source constraints");
  lg->add_option("--r", r);
  lg->add_option("--t", t);
  lg->add_option("--count-w", count_w);
  lg->add_option("--edges-per-w", edges_per_w);
  lg->add_option("--save-tsa", save_tsa, "write the source instance");
  add_common(lg);
  CLI::App* ls = lc->add_subcommand("check-smoothness", "projection collision bounds");
  ls->add_option("--r", r);
  ls->add_option("--t", t);
  ls->add_option("--set-sizes", set_sizes);
  ls->add_option("--edges", edges);
  ls->add_flag("--image-bound", image_mode, "also check the image size bound");
  ls->add_option("--image-trials", image_trials);
  add_common(ls);

  CLI::App* rd = app.add_subcommand("reduce", "gadget reduction commands");
  rd->require_subcommand(1);
  CLI::App* rg = rd->add_subcommand("gen", "emit a Max-3-LIN instance");
  rg->add_option("--group", group);
  rg->add_option("--r", r);
  rg->add_option("--t", t);
  rg->add_option("--mode", mode, "perfect|imperfect");
  rg->add_option("--eps", eps);
  rg->add_option("--m", m);
  rg->add_option("--instance", instance_path, "instance output file");
  rg->add_option("--registry", out_reg, "variable registry sidecar");
  add_common(rg);
  CLI::App* rc = rd->add_subcommand("check-completeness", "dictator pass rate");
  rc->add_option("--group", group);
  rc->add_option("--r", r);
  rc->add_option("--t", t);
  rc->add_option("--mode", mode);
  rc->add_option("--eps", eps);
  rc->add_option("--samples", samples);
  add_common(rc);
  CLI::App* rf = rd->add_subcommand("check-factor-graph", "b-independence of scopes");
  rf->add_option("--group", group);
  rf->add_option("--r", r);
  rf->add_option("--t", t);
  rf->add_option("--m", m);
  rf->add_option("--pairs", pairs);
  add_common(rf);

  CLI::App* sv = app.add_subcommand("solve", "run a solver on an instance file");
  sv->add_option("--instance", instance_path)->required();
  sv->add_option("--solver", solver, "brute|random|abelian");
  sv->add_option("--restarts", restarts);
  add_common(sv);

  CLI11_PARSE(app, argc, argv);

  bool pass = false;
  try {
    json rep;
    if (gv->parsed()) rep = cmd_group_verify(group, pass);
    else if (ga->parsed()) rep = cmd_group_abelianize(group, pass);
    else if (rs->parsed()) rep = cmd_rep_selftest(group, functions, trials, seed, pass);
    else if (fs->parsed()) rep = cmd_fold_selftest(group, R, r, count, seed, pass);
    else if (lg->parsed())
      rep = cmd_lc_gen(n_vars, m, r, t, count_w, edges_per_w, seed, save_tsa, pass);
    else if (ls->parsed())
      rep = cmd_lc_smoothness(r, t, set_sizes, edges, image_mode, image_trials,
                              seed, pass);
    else if (rg->parsed())
      rep = cmd_reduce_gen(group, r, t, mode, eps, m, seed, instance_path,
                           out_reg, pass);
    else if (rc->parsed())
      rep = cmd_reduce_completeness(group, r, t, mode, eps, samples, seed, pass);
    else if (rf->parsed())
      rep = cmd_reduce_factor_graph(group, r, t, m, pairs, seed, pass);
    else if (sv->parsed())
      rep = cmd_solve(instance_path, solver, restarts, seed, pass);
    emit(rep, out);
  } catch (const std::exception& e) {
    json rep;
    rep["error"] = e.what();
    rep["pass"] = false;
    emit(rep, out);
    return 1;
  }
  return pass ? 0 : 1;
}
