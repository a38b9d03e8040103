#include "ufg3lin/labelcover.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ufg3lin {

void MaxTSAInstance::validate() const {
  for (const TSAConstraint& c : constraints) {
    std::set<int> distinct;
    for (int v : c.vars) {
      if (v < 0 || v >= n_vars)
        throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
      distinct.insert(v);
    }
    if (distinct.size() != 5)
      throw Error(ErrorCode::BadFile, "constraint variables not distinct");
  }
}

MaxTSAInstance MaxTSAInstance::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadFile, "cannot open " + path);
  MaxTSAInstance inst;
  if (!(in >> inst.n_vars))
    throw Error(ErrorCode::BadFile, "missing n_vars header");
  TSAConstraint c;
  while (in >> c.vars[0] >> c.vars[1] >> c.vars[2] >> c.vars[3] >> c.vars[4] >>
         c.b)
    inst.constraints.push_back(c);
  inst.validate();
  return inst;
}

void MaxTSAInstance::save(const std::string& path) const {
  std::ofstream out(path);
  out << n_vars << "\n";
  for (const TSAConstraint& c : constraints) {
    for (int v : c.vars) out << v << " ";
    out << c.b << "\n";
  }
}

std::pair<MaxTSAInstance, std::vector<int>> random_satisfiable_tsa(
    int n_vars, int m, uint64_t seed) {
  if (n_vars < 5)
    throw Error(ErrorCode::ParameterOutOfRange, "need at least 5 variables");
  Rng rng(derive_seed(seed, "tsa"));
  std::vector<int> bits(n_vars);
  for (int& b : bits) b = static_cast<int>(rng.below(2));
  MaxTSAInstance inst;
  inst.n_vars = n_vars;
  for (int i = 0; i < m; ++i) {
    TSAConstraint c;
    // Five distinct variables by partial shuffle.
    std::set<int> used;
    for (int k = 0; k < 5; ++k) {
      int v;
      do {
        v = static_cast<int>(rng.below(n_vars));
      } while (used.count(v));
      used.insert(v);
      c.vars[k] = v;
    }
    std::array<int, 5> x;
    for (int k = 0; k < 5; ++k) x[k] = bits[c.vars[k]];
    c.b = tsa_value(x);
    inst.constraints.push_back(c);
  }
  return {std::move(inst), std::move(bits)};
}

Label UFGLabelCover::project(const VVertex& vv, Label ell) const {
  Label out = 0;
  int shift = 0;
  size_t ri = 0;
  for (int j = 0; j < r; ++j) {
    bool reduced = ri < vv.reduced_slots.size() && vv.reduced_slots[ri] == j;
    if (reduced) {
      out |= ((ell >> (5 * j + vv.chosen_var[ri])) & 1) << shift;
      shift += 1;
      ++ri;
    } else {
      out |= ((ell >> (5 * j)) & 0x1f) << shift;
      shift += 5;
    }
  }
  return out;
}

UFGLabelCover parallel_repeat(const MaxTSAInstance& tsa, int r, int t,
                              int count_w, int edges_per_w, uint64_t seed) {
  if (r < 1 || t < 0 || t > r || count_w < 1 || edges_per_w < 1)
    throw Error(ErrorCode::ParameterOutOfRange, "bad repetition parameters");
  if (tsa.constraints.empty())
    throw Error(ErrorCode::ParameterOutOfRange, "empty TSA instance");
  if (5 * r >= 62)
    throw Error(ErrorCode::ParameterOutOfRange, "label width exceeds 62 bits");
  tsa.validate();

  UFGLabelCover lc;
  lc.r = r;
  lc.t = t;
  lc.seed = seed;
  lc.source = tsa.constraints;
  lc.source_n_vars = tsa.n_vars;

  // The sampling stream never consults the b bits, so two instances sharing a
  // factor graph yield identical W, V, E.
  Rng rng(derive_seed(seed, "parallel-repeat"));
  const int m = static_cast<int>(tsa.constraints.size());
  for (int wi = 0; wi < count_w; ++wi) {
    std::vector<int> iw(r);
    for (int j = 0; j < r; ++j) iw[j] = static_cast<int>(rng.below(m));
    lc.W.push_back(std::move(iw));
    lc.edges_of_w.emplace_back();
    for (int ei = 0; ei < edges_per_w; ++ei) {
      VVertex vv;
      // t distinct reduced slots.
      std::vector<int> slots(r);
      for (int j = 0; j < r; ++j) slots[j] = j;
      for (int k = 0; k < t; ++k) {
        int pick = k + static_cast<int>(rng.below(r - k));
        std::swap(slots[k], slots[pick]);
      }
      vv.reduced_slots.assign(slots.begin(), slots.begin() + t);
      std::sort(vv.reduced_slots.begin(), vv.reduced_slots.end());
      for (int k = 0; k < t; ++k)
        vv.chosen_var.push_back(static_cast<int>(rng.below(5)));
      int v_id = static_cast<int>(lc.V.size());
      lc.V.push_back(std::move(vv));
      lc.edges_of_w[wi].push_back(static_cast<int>(lc.edges.size()));
      lc.edges.push_back(LCEdge{wi, v_id});
    }
  }
  return lc;
}

double lc_value(const UFGLabelCover& lc, const std::vector<Label>& sigma_L,
                const std::vector<Label>& sigma_R) {
  if (sigma_L.size() != lc.V.size() || sigma_R.size() != lc.W.size())
    throw Error(ErrorCode::LengthMismatch, "assignment sizes do not match");
  long satisfied = 0;
  for (const LCEdge& e : lc.edges) {
    Label ell = sigma_R[e.w];
    if (lc.project(lc.V[e.v], ell) != sigma_L[e.v]) continue;
    bool ok = true;
    for (int j = 0; j < lc.r && ok; ++j)
      ok = lc.extractor(j, ell) == (lc.source[lc.W[e.w][j]].b & 1);
    if (ok) ++satisfied;
  }
  return static_cast<double>(satisfied) / lc.edges.size();
}

std::pair<std::vector<Label>, std::vector<Label>> lift_assignment(
    const UFGLabelCover& lc, const std::vector<int>& bits) {
  std::vector<Label> sigma_R(lc.W.size());
  for (size_t w = 0; w < lc.W.size(); ++w) {
    Label ell = 0;
    for (int j = 0; j < lc.r; ++j) {
      const TSAConstraint& c = lc.source[lc.W[w][j]];
      for (int k = 0; k < 5; ++k)
        ell |= Label(bits[c.vars[k]] & 1) << (5 * j + k);
    }
    sigma_R[w] = ell;
  }
  std::vector<Label> sigma_L(lc.V.size());
  for (const LCEdge& e : lc.edges)
    sigma_L[e.v] = lc.project(lc.V[e.v], sigma_R[e.w]);
  return {std::move(sigma_L), std::move(sigma_R)};
}

SmoothnessReport smoothness_check(const UFGLabelCover& lc,
                                  const std::vector<Label>& S, int w) {
  if (S.empty())
    throw Error(ErrorCode::ParameterOutOfRange, "S must be nonempty");
  if (w < 0 || w >= static_cast<int>(lc.W.size()))
    throw Error(ErrorCode::IndexOutOfRange, "w out of range");
  SmoothnessReport rep;
  int collisions = 0;
  for (int e : lc.edges_of_w[w]) {
    std::set<Label> image;
    bool collide = false;
    for (Label s : S)
      if (!image.insert(lc.project_edge(e, s)).second) collide = true;
    if (collide) ++collisions;
    ++rep.edges_used;
  }
  rep.empirical = static_cast<double>(collisions) / rep.edges_used;
  rep.bound = static_cast<double>(S.size()) * S.size() * lc.t / lc.r;
  rep.sigma = std::sqrt(rep.empirical * (1 - rep.empirical) / rep.edges_used);
  return rep;
}

ImageBoundReport image_bound_check(const UFGLabelCover& lc, double d0,
                                   int set_size, int trials, uint64_t seed) {
  if (set_size < 1 || trials < 1)
    throw Error(ErrorCode::ParameterOutOfRange, "bad image-bound parameters");
  Rng rng(derive_seed(seed, "image-bound"));
  ImageBoundReport rep;
  rep.trials = trials;
  rep.bound = std::pow(static_cast<double>(set_size), -d0);
  rep.exact_zero_branch =
      static_cast<double>(set_size) >= std::pow(16.0, 4.0 * lc.t / 3.0);
  const double threshold = std::pow(static_cast<double>(set_size), d0);
  int bad = 0;
  for (int i = 0; i < trials; ++i) {
    int w = static_cast<int>(rng.below(lc.W.size()));
    std::set<Label> S;
    while (static_cast<int>(S.size()) < set_size)
      S.insert(rng.below(lc.R_size()));
    const auto& ew = lc.edges_of_w[w];
    int e = ew[rng.below(ew.size())];
    std::set<Label> image;
    for (Label s : S) image.insert(lc.project_edge(e, s));
    if (static_cast<double>(image.size()) < threshold) ++bad;
  }
  rep.empirical = static_cast<double>(bad) / trials;
  rep.sigma = std::sqrt(rep.empirical * (1 - rep.empirical) / trials);
  return rep;
}

}  // namespace ufg3lin
