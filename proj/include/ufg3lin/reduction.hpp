// Gadget samplers turning a UFG Label Cover game plus a group into Max-3-LIN
// constraints over long-code tables, with lazy variable registration,
// factor-graph fingerprinting, and dictator-strategy evaluation.
//
// Each sampled constraint touches three tables: the functionally folded
// w-table at the canonical form of x, the free w-table at z, and the
// classically right-folded v-table at the normalized y. The three variables
// live in disjoint namespaces so a scope never self-collides. Everything the
// sampler draws is independent of the b-vector; b enters only through the
// right-hand side, which is what makes the factor graph universal.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ufg3lin/folding.hpp"
#include "ufg3lin/labelcover.hpp"
#include "ufg3lin/solvers.hpp"

namespace ufg3lin {

enum class GadgetMode { Perfect, Imperfect };

enum class VarKind : int { FoldedW = 0, FreeW = 1, ClassicalV = 2 };

struct VarKey {
  VarKind kind = VarKind::FoldedW;
  int vertex = 0;  // w index for the w-side tables, edge index for the v side
  std::vector<Elem> key;

  bool operator<(const VarKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (vertex != o.vertex) return vertex < o.vertex;
    return key < o.key;
  }
};

class VariableRegistry {
 public:
  // Dense index of the key, assigned lazily in first-touch order.
  int id(const VarKey& k);
  const VarKey& key_of(int idx) const;
  int size() const { return static_cast<int>(keys_.size()); }

 private:
  std::map<VarKey, int> index_;
  std::vector<VarKey> keys_;
};

struct GadgetConstraint {
  int var_f = 0;  // folded w-table at canonical x
  int var_g = 0;  // free w-table at z
  int var_h = 0;  // classical v-table at normalized y
  Elem rhs = 0;   // F(b word of w)^-1 * c^-1, c = first coordinate of y
};

struct ReductionOutput {
  Max3LinInstance instance;
  VariableRegistry registry;
};

// m sampled gadget constraints; deterministic from seed; scopes independent
// of the b-vector of the game. In Imperfect mode each coordinate of the noise
// tuple is the identity with probability 1-eps, uniform otherwise.
ReductionOutput build_instance(const UFGLabelCover& lc, const Group& g,
                               GadgetMode mode, double eps, int m,
                               uint64_t seed);

// Digest of the ordered scope list (variable count + index triples); the
// right-hand sides are deliberately excluded.
uint64_t factor_graph_fingerprint(const Max3LinInstance& inst);

// Assignment induced by dictator tables at the labeling (sigma_L, sigma_R):
// folded w-entries read coordinate sigma_R[w] of their key, free w-entries
// likewise, classical v-entries read coordinate sigma_L projected for that
// edge. Throws InvalidDictator when the extractor word of sigma_R[w]
// disagrees with the b word of some registered w-variable.
Assignment dictator_assignment(const ReductionOutput& red,
                               const UFGLabelCover& lc, const Group& g,
                               const std::vector<Label>& sigma_L,
                               const std::vector<Label>& sigma_R);

// Samples `samples` fresh constraints and evaluates them under the dictator
// tables of the labeling, going through the folding query semantics. Returns
// the pass fraction. Throws InvalidDictator on a w whose dictator coordinate
// has extractor word != b word.
double dictator_strategy_value(const UFGLabelCover& lc, const Group& g,
                               const std::vector<Label>& sigma_L,
                               const std::vector<Label>& sigma_R,
                               GadgetMode mode, double eps, int samples,
                               uint64_t seed);

// The extractor words of all labels, as a folding pattern family over [R].
PatternFamily extractor_patterns(const UFGLabelCover& lc);

}  // namespace ufg3lin
