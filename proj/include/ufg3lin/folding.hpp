// Functionally and classically folded long-code tables: equivalence classes,
// canonical representatives, query semantics, and the vanishing checks on
// Fourier coefficients of folded functions.
//
// A pattern family assigns to each coordinate d of [R] the word
// (p_1(d),...,p_r(d)); two tuples are equivalent when they differ by a
// pattern-dependent left factor F. A functionally folded table stores one
// value per canonical representative and extends queries by the factor F
// evaluated at the word b.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ufg3lin/group.hpp"
#include "ufg3lin/rep.hpp"
#include "ufg3lin/rng.hpp"

namespace ufg3lin {

struct PatternFamily {
  int r = 0;  // number of extractors
  int R = 0;  // tuple length
  // pattern[d] packs (p_1(d),...,p_r(d)) with p_i in bit i-1.
  std::vector<uint32_t> pattern;

  std::set<uint32_t> attained_words() const {
    return {pattern.begin(), pattern.end()};
  }
};

struct CanonicalForm {
  std::vector<Elem> representative;
  // Determined values of F, one per attained word; words not attained by any
  // coordinate are extended by the identity at query time.
  std::map<uint32_t, Elem> witness;

  Elem witness_at(uint32_t word, Elem identity) const {
    auto it = witness.find(word);
    return it == witness.end() ? identity : it->second;
  }
};

// Left-normalizes each pattern class at its least coordinate: the witness of
// a class is x at that coordinate, and the representative carries identity
// there. Canonicalization is idempotent and constant on equivalence classes.
CanonicalForm canonicalize(const Group& g, const std::vector<Elem>& x,
                           const PatternFamily& patterns);

enum class FoldKind { Functional, ClassicalRight, Free };

class FoldedFunction {
 public:
  // Eager table over an enumerable domain; values drawn uniformly per key.
  static FoldedFunction random_table(const Group& g, FoldKind kind,
                                     PatternFamily patterns, uint32_t b,
                                     int R, uint64_t seed);
  // Lazy table: values are derived from (seed, key) on demand, so domains may
  // be astronomically large and concurrent first touches agree.
  static FoldedFunction lazy(const Group& g, FoldKind kind,
                             PatternFamily patterns, uint32_t b, int R,
                             uint64_t seed);

  FoldKind kind() const { return kind_; }
  int domain_arity() const { return R_; }
  uint32_t b() const { return b_; }
  const PatternFamily& patterns() const { return patterns_; }
  size_t stored_keys() const { return table_.size(); }

  // Folding-aware lookup; see the kind-specific semantics in the .cpp.
  Elem query(const std::vector<Elem>& x) const;

  // Overrides the value at a canonical key (dictator tables in tests).
  void set(const std::vector<Elem>& canonical_key, Elem value);

 private:
  FoldedFunction(const Group& g, FoldKind kind, PatternFamily patterns,
                 uint32_t b, int R)
      : group_(&g), kind_(kind), patterns_(std::move(patterns)), b_(b), R_(R) {}
  Elem value_at_key(const std::vector<Elem>& key) const;

  const Group* group_;
  FoldKind kind_;
  PatternFamily patterns_;
  uint32_t b_ = 0;
  int R_ = 0;
  bool lazy_ = false;
  uint64_t seed_ = 0;
  std::map<std::vector<Elem>, Elem> table_;
};

enum class VanishingLemma {
  TrivialCoefficient = 1,   // folded f, rho nontrivial: ghat(1) = 0
  DimOneCoefficients = 2,   // folded f, dim(rho) >= 2: ghat(alpha) = 0 for dim-1 alpha
  OffPatternNontrivial = 3, // functional f: ghat(alpha) = 0 when no nontrivial
                            // coordinate of alpha attains b
  OffPatternHighDim = 4,    // functional f, dim(rho) >= 2: same with dim >= 2
};

struct VanishingReport {
  VanishingLemma lemma;
  std::string rho_label;
  int p = 0, q = 0;
  int asserted_count = 0;
  int other_count = 0;
  double max_asserted = 0.0;      // max HS norm among asserted-zero coefficients
  double max_non_asserted = 0.0;  // non-degeneracy witness
  bool pass() const { return max_asserted < kTol; }
};

// Tabulates g(x) = rho(f(x))_{pq} over the whole domain through query
// semantics and checks the coefficient-vanishing claim named by the lemma.
VanishingReport check_vanishing(const IrrepCatalog& cat,
                                const FoldedFunction& f, int rho_index, int p,
                                int q, VanishingLemma lemma);

}  // namespace ufg3lin
