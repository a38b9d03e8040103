#include "ufg3lin/reduction.hpp"

namespace ufg3lin {

int VariableRegistry::id(const VarKey& k) {
  auto it = index_.find(k);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(keys_.size());
  index_.emplace(k, idx);
  keys_.push_back(k);
  return idx;
}

const VarKey& VariableRegistry::key_of(int idx) const {
  if (idx < 0 || idx >= static_cast<int>(keys_.size()))
    throw Error(ErrorCode::IndexOutOfRange,
                "variable index " + std::to_string(idx) + " not registered");
  return keys_[static_cast<size_t>(idx)];
}

PatternFamily extractor_patterns(const UFGLabelCover& lc) {
  if (lc.R_size() > 1'000'000)
    throw Error(ErrorCode::DomainTooLarge,
                "label set too large to materialize long-code tuples");
  PatternFamily pf;
  pf.r = lc.r;
  pf.R = static_cast<int>(lc.R_size());
  pf.pattern.resize(static_cast<size_t>(pf.R));
  for (int d = 0; d < pf.R; ++d)
    pf.pattern[static_cast<size_t>(d)] = lc.pattern_word(static_cast<Label>(d));
  return pf;
}

namespace {

// One raw draw of the gadget test: everything the sampler produces before
// scopes are registered. Only `rhs` depends on the b-vector.
struct SampledGadget {
  int e = 0;
  std::vector<Elem> x, y, z;
  std::vector<Elem> xbar, ybar;
  Elem F = 0;  // canonicalization witness at the b word of w
  Elem c = 0;  // first coordinate of y
  Elem rhs = 0;
};

SampledGadget sample_gadget(const UFGLabelCover& lc, const Group& g,
                            const PatternFamily& pf, GadgetMode mode,
                            double eps, Rng& rng) {
  const int R = pf.R;
  const int L = static_cast<int>(lc.L_size());
  const auto q = static_cast<uint64_t>(g.order());
  SampledGadget s;
  s.e = static_cast<int>(rng.below(lc.edges.size()));
  s.x.resize(static_cast<size_t>(R));
  for (auto& xi : s.x) xi = static_cast<Elem>(rng.below(q));
  s.y.resize(static_cast<size_t>(L));
  for (auto& yi : s.y) yi = static_cast<Elem>(rng.below(q));
  // z_i = x_i^-1 * eta_i * y(pi_e(i))^-1, with eta omitted in perfect mode.
  s.z.resize(static_cast<size_t>(R));
  for (int i = 0; i < R; ++i) {
    Elem zi = g.inv(s.x[static_cast<size_t>(i)]);
    if (mode == GadgetMode::Imperfect && eps > 0 && rng.bernoulli(eps))
      zi = g.mul(zi, static_cast<Elem>(rng.below(q)));
    Label img = lc.project_edge(s.e, static_cast<Label>(i));
    s.z[static_cast<size_t>(i)] = g.mul(zi, g.inv(s.y[img]));
  }
  CanonicalForm cf = canonicalize(g, s.x, pf);
  s.xbar = std::move(cf.representative);
  s.c = s.y[0];
  s.ybar = tuple_right_scale(g, s.y, g.inv(s.c));
  // Nothing above consulted b; it enters only here, through the witness.
  int w = lc.edges[static_cast<size_t>(s.e)].w;
  s.F = cf.witness_at(lc.b_word(w), g.identity());
  s.rhs = g.mul(g.inv(s.F), g.inv(s.c));
  return s;
}

}  // namespace

ReductionOutput build_instance(const UFGLabelCover& lc, const Group& g,
                               GadgetMode mode, double eps, int m,
                               uint64_t seed) {
  if (m < 1) throw Error(ErrorCode::ParameterOutOfRange, "need m >= 1");
  if (eps < 0 || eps > 1)
    throw Error(ErrorCode::ParameterOutOfRange, "eps outside [0, 1]");
  PatternFamily pf = extractor_patterns(lc);
  Rng rng(derive_seed(seed, "gadget-sampler"));
  ReductionOutput out;
  out.instance.group = &g;
  out.instance.constraints.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    SampledGadget s = sample_gadget(lc, g, pf, mode, eps, rng);
    int w = lc.edges[static_cast<size_t>(s.e)].w;
    int vf = out.registry.id({VarKind::FoldedW, w, s.xbar});
    int vg = out.registry.id({VarKind::FreeW, w, s.z});
    int vh = out.registry.id({VarKind::ClassicalV, s.e, s.ybar});
    out.instance.constraints.push_back({vf, vg, vh, s.rhs});
  }
  out.instance.n_vars = out.registry.size();
  out.instance.validate();
  return out;
}

uint64_t factor_graph_fingerprint(const Max3LinInstance& inst) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a over the scope serialization
  auto mix = [&h](uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(inst.n_vars));
  mix(inst.constraints.size());
  for (const auto& cst : inst.constraints) {
    mix(static_cast<uint64_t>(cst.i1));
    mix(static_cast<uint64_t>(cst.i2));
    mix(static_cast<uint64_t>(cst.i3));
  }
  return h;
}

namespace {

Label dictator_coordinate(const UFGLabelCover& lc,
                          const std::vector<Label>& sigma_L,
                          const std::vector<Label>& sigma_R, VarKind kind,
                          int vertex) {
  switch (kind) {
    case VarKind::FoldedW:
    case VarKind::FreeW: {
      if (vertex < 0 || vertex >= static_cast<int>(sigma_R.size()))
        throw Error(ErrorCode::IndexOutOfRange, "w vertex outside labeling");
      Label ell = sigma_R[static_cast<size_t>(vertex)];
      if (kind == VarKind::FoldedW && lc.pattern_word(ell) != lc.b_word(vertex))
        throw Error(ErrorCode::InvalidDictator,
                    "dictator coordinate of w-vertex " + std::to_string(vertex) +
                        " has extractor word != b word");
      return ell;
    }
    case VarKind::ClassicalV: {
      // vertex is an edge index; the v-label is the w-label's projection.
      if (vertex < 0 || vertex >= static_cast<int>(lc.edges.size()))
        throw Error(ErrorCode::IndexOutOfRange, "edge index outside game");
      int w = lc.edges[static_cast<size_t>(vertex)].w;
      if (w >= static_cast<int>(sigma_R.size()))
        throw Error(ErrorCode::IndexOutOfRange, "w vertex outside labeling");
      Label u = sigma_L.empty()
                    ? lc.project_edge(vertex, sigma_R[static_cast<size_t>(w)])
                    : sigma_L[static_cast<size_t>(vertex)];
      return u;
    }
  }
  throw Error(ErrorCode::UsageError, "unreachable");
}

}  // namespace

Assignment dictator_assignment(const ReductionOutput& red,
                               const UFGLabelCover& lc, const Group& g,
                               const std::vector<Label>& sigma_L,
                               const std::vector<Label>& sigma_R) {
  Assignment sigma(static_cast<size_t>(red.registry.size()));
  for (int i = 0; i < red.registry.size(); ++i) {
    const VarKey& k = red.registry.key_of(i);
    Label coord =
        dictator_coordinate(lc, sigma_L, sigma_R, k.kind, k.vertex);
    if (coord >= k.key.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "dictator coordinate exceeds table arity");
    sigma[static_cast<size_t>(i)] = k.key[coord];
  }
  return sigma;
}

double dictator_strategy_value(const UFGLabelCover& lc, const Group& g,
                               const std::vector<Label>& sigma_L,
                               const std::vector<Label>& sigma_R,
                               GadgetMode mode, double eps, int samples,
                               uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::ParameterOutOfRange, "need samples >= 1");
  if (eps < 0 || eps > 1)
    throw Error(ErrorCode::ParameterOutOfRange, "eps outside [0, 1]");
  PatternFamily pf = extractor_patterns(lc);
  Rng rng(derive_seed(seed, "gadget-sampler"));
  long passed = 0;
  for (int k = 0; k < samples; ++k) {
    SampledGadget s = sample_gadget(lc, g, pf, mode, eps, rng);
    int w = lc.edges[static_cast<size_t>(s.e)].w;
    Label ell = dictator_coordinate(lc, sigma_L, sigma_R, VarKind::FoldedW, w);
    Label u =
        dictator_coordinate(lc, sigma_L, sigma_R, VarKind::ClassicalV, s.e);
    // Table values through the folding query semantics: the folded w-table
    // contributes F * xbar_ell, the classical v-table contributes ybar_u * c.
    Elem fw = g.mul(s.F, s.xbar[ell]);
    Elem gw = s.z[ell];
    Elem hv = g.mul(s.ybar[u], s.c);
    if (g.mul(g.mul(fw, gw), hv) == g.identity()) ++passed;
  }
  return static_cast<double>(passed) / static_cast<double>(samples);
}

}  // namespace ufg3lin
