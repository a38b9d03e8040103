#include "ufg3lin/folding.hpp"

#include <algorithm>

namespace ufg3lin {

CanonicalForm canonicalize(const Group& g, const std::vector<Elem>& x,
                           const PatternFamily& patterns) {
  if (static_cast<int>(x.size()) != patterns.R ||
      static_cast<int>(patterns.pattern.size()) != patterns.R)
    throw Error(ErrorCode::LengthMismatch, "tuple length != pattern length");
  CanonicalForm out;
  // Witness of a class is x at the least coordinate of the class.
  for (int d = 0; d < patterns.R; ++d) {
    uint32_t w = patterns.pattern[d];
    if (!out.witness.count(w)) out.witness[w] = x[d];
  }
  out.representative.resize(patterns.R);
  for (int d = 0; d < patterns.R; ++d)
    out.representative[d] = g.mul(g.inv(out.witness[patterns.pattern[d]]), x[d]);
  return out;
}

FoldedFunction FoldedFunction::random_table(const Group& g, FoldKind kind,
                                            PatternFamily patterns, uint32_t b,
                                            int R, uint64_t seed) {
  FoldedFunction f(g, kind, std::move(patterns), b, R);
  Rng rng(derive_seed(seed, "folded-table"));
  const long size = domain_size(g, R);
  for (long idx = 0; idx < size; ++idx) {
    std::vector<Elem> x = index_to_tuple(g, R, idx);
    std::vector<Elem> key;
    switch (kind) {
      case FoldKind::Functional:
        key = canonicalize(g, x, f.patterns_).representative;
        break;
      case FoldKind::ClassicalRight:
        key = tuple_right_scale(g, x, g.inv(x[0]));
        break;
      case FoldKind::Free:
        key = x;
        break;
    }
    if (!f.table_.count(key))
      f.table_[key] = static_cast<Elem>(rng.below(g.order()));
  }
  return f;
}

FoldedFunction FoldedFunction::lazy(const Group& g, FoldKind kind,
                                    PatternFamily patterns, uint32_t b, int R,
                                    uint64_t seed) {
  FoldedFunction f(g, kind, std::move(patterns), b, R);
  f.lazy_ = true;
  f.seed_ = seed;
  return f;
}

Elem FoldedFunction::value_at_key(const std::vector<Elem>& key) const {
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  if (!lazy_)
    throw Error(ErrorCode::MissingEntry, "no entry for canonical key");
  std::vector<unsigned char> bytes;
  bytes.reserve(key.size() * 4);
  for (Elem e : key) {
    for (int b8 = 0; b8 < 4; ++b8)
      bytes.push_back(static_cast<unsigned char>((e >> (8 * b8)) & 0xff));
  }
  return static_cast<Elem>(hash_key(seed_, bytes.data(), bytes.size()) %
                           static_cast<uint64_t>(group_->order()));
}

Elem FoldedFunction::query(const std::vector<Elem>& x) const {
  const Group& g = *group_;
  if (static_cast<int>(x.size()) != R_)
    throw Error(ErrorCode::LengthMismatch, "query tuple has wrong length");
  switch (kind_) {
    case FoldKind::Functional: {
      // f(x) = F(b) f(xbar), with F extended by identity at unattained words.
      CanonicalForm canon = canonicalize(g, x, patterns_);
      Elem fb = canon.witness_at(b_, g.identity());
      return g.mul(fb, value_at_key(canon.representative));
    }
    case FoldKind::ClassicalRight: {
      // f(x) = f(x . x1^-1) . x1
      Elem c = x[0];
      std::vector<Elem> key = tuple_right_scale(g, x, g.inv(c));
      return g.mul(value_at_key(key), c);
    }
    case FoldKind::Free:
      return value_at_key(x);
  }
  throw Error(ErrorCode::UsageError, "unreachable fold kind");
}

void FoldedFunction::set(const std::vector<Elem>& canonical_key, Elem value) {
  table_[canonical_key] = value;
}

VanishingReport check_vanishing(const IrrepCatalog& cat,
                                const FoldedFunction& f, int rho_index, int p,
                                int q, VanishingLemma lemma) {
  const Group& g = cat.group();
  const Irrep& rho = cat[rho_index];
  const bool needs_dim2 = (lemma == VanishingLemma::DimOneCoefficients ||
                           lemma == VanishingLemma::OffPatternHighDim);
  if (needs_dim2 && rho.dim < 2)
    throw Error(ErrorCode::UsageError, "lemma needs dim(rho) >= 2");
  if (!needs_dim2 && rho_index == cat.trivial_index())
    throw Error(ErrorCode::UsageError, "lemma needs a nontrivial rho");
  const bool needs_functional = (lemma == VanishingLemma::OffPatternNontrivial ||
                                 lemma == VanishingLemma::OffPatternHighDim);
  if (needs_functional && f.kind() != FoldKind::Functional)
    throw Error(ErrorCode::UsageError, "lemma needs a functionally folded f");

  const int R = f.domain_arity();
  const long size = domain_size(g, R);
  FnTable table(size);
  for (long idx = 0; idx < size; ++idx)
    table[idx] = rho.at(f.query(index_to_tuple(g, R, idx)))(p, q);

  const PatternFamily& pats = f.patterns();
  VanishingReport rep;
  rep.lemma = lemma;
  rep.rho_label = rho.label;
  rep.p = p;
  rep.q = q;
  for (const ProductIrrep& alpha : all_product_irreps(cat, R)) {
    bool asserted = false;
    switch (lemma) {
      case VanishingLemma::TrivialCoefficient:
        asserted = alpha.is_trivial(cat);
        break;
      case VanishingLemma::DimOneCoefficients:
        asserted = alpha.dim(cat) == 1;
        break;
      case VanishingLemma::OffPatternNontrivial: {
        asserted = true;
        for (int d = 0; d < R; ++d)
          if (alpha.components[d] != cat.trivial_index() &&
              pats.pattern[d] == f.b())
            asserted = false;
        break;
      }
      case VanishingLemma::OffPatternHighDim: {
        asserted = true;
        for (int d = 0; d < R; ++d)
          if (cat[alpha.components[d]].dim >= 2 && pats.pattern[d] == f.b())
            asserted = false;
        break;
      }
    }
    double norm =
        std::sqrt(fourier_transform(cat, table, R, alpha).matrix.squaredNorm());
    if (asserted) {
      ++rep.asserted_count;
      rep.max_asserted = std::max(rep.max_asserted, norm);
    } else {
      ++rep.other_count;
      rep.max_non_asserted = std::max(rep.max_non_asserted, norm);
    }
  }
  return rep;
}

}  // namespace ufg3lin
