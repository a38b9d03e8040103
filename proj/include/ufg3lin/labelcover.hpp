// Max-TSA instances and their smooth parallel repetition into projection
// games with predicate extractors (UFG Label Cover), plus value evaluation
// and empirical smoothness checks.
//
// Assignment words ell in [R] encode variable bits little-endian by
// (constraint slot, variable slot): bit 5*j + k is variable k of slot j.
// Shared variables across repeated constraints are not merged; consistency is
// the provers' burden. Projections are evaluated functionally by extracting
// the bits visible to the second prover and are exactly 16^t-to-1.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ufg3lin/common.hpp"
#include "ufg3lin/rng.hpp"

namespace ufg3lin {

struct TSAConstraint {
  std::array<int, 5> vars;
  int b = 0;
};

struct MaxTSAInstance {
  int n_vars = 0;
  std::vector<TSAConstraint> constraints;

  void validate() const;
  static MaxTSAInstance load(const std::string& path);
  void save(const std::string& path) const;
};

// x1 + x2 + x3 + x4*x5 over bits.
inline int tsa_value(const std::array<int, 5>& x) {
  return (x[0] ^ x[1] ^ x[2] ^ (x[3] & x[4])) & 1;
}
inline bool tsa_eval(const std::array<int, 5>& x, int b) {
  return tsa_value(x) == (b & 1);
}

// Satisfiable instance from a planted assignment (returned alongside).
std::pair<MaxTSAInstance, std::vector<int>> random_satisfiable_tsa(
    int n_vars, int m, uint64_t seed);

using Label = uint64_t;

struct LCEdge {
  int w = 0;
  int v = 0;
};

// Question descriptor for the second prover: which slots are reduced to a
// single chosen variable; the remaining slots are sent whole.
struct VVertex {
  std::vector<int> reduced_slots;  // sorted, size t
  std::vector<int> chosen_var;     // in [0,5), one per reduced slot
};

class UFGLabelCover {
 public:
  int r = 0, t = 0;
  uint64_t seed = 0;
  std::vector<std::vector<int>> W;    // I_w: r constraint indices per vertex
  std::vector<VVertex> V;             // one per edge, by construction
  std::vector<LCEdge> edges;
  std::vector<std::vector<int>> edges_of_w;
  std::vector<TSAConstraint> source;  // repeated TSA constraints (carry b)
  int source_n_vars = 0;

  Label R_size() const { return Label(1) << (5 * r); }
  Label L_size() const { return Label(1) << (t + 5 * (r - t)); }

  // Extractor p_j: TSA value of the bits of slot j. Independent of w; the
  // satisfaction check compares against b at the constraint I_w(j).
  int extractor(int j, Label ell) const {
    std::array<int, 5> x;
    for (int k = 0; k < 5; ++k) x[k] = (ell >> (5 * j + k)) & 1;
    return tsa_value(x);
  }
  // Packed word (p_1(ell),...,p_r(ell)); p_j in bit j.
  uint32_t pattern_word(Label ell) const {
    uint32_t w = 0;
    for (int j = 0; j < r; ++j) w |= uint32_t(extractor(j, ell)) << j;
    return w;
  }
  // b word for a w-vertex: (b_{I_w(1)},...,b_{I_w(r)}).
  uint32_t b_word(int w) const {
    uint32_t word = 0;
    for (int j = 0; j < r; ++j)
      word |= uint32_t(source[W[w][j]].b & 1) << j;
    return word;
  }

  // pi_e: keeps the chosen bit of each reduced slot and all five bits of the
  // remaining slots, packed slot by slot.
  Label project(const VVertex& v, Label ell) const;
  Label project_edge(int e, Label ell) const { return project(V[edges[e].v], ell); }
};

UFGLabelCover parallel_repeat(const MaxTSAInstance& tsa, int r, int t,
                              int count_w, int edges_per_w, uint64_t seed);

// Fraction of edges satisfying both the projection constraint and all r
// extractor equations.
double lc_value(const UFGLabelCover& lc, const std::vector<Label>& sigma_L,
                const std::vector<Label>& sigma_R);

// Lifts a satisfying TSA assignment to (sigma_L, sigma_R) of value 1.
std::pair<std::vector<Label>, std::vector<Label>> lift_assignment(
    const UFGLabelCover& lc, const std::vector<int>& bits);

struct SmoothnessReport {
  double empirical = 0;  // E over edges of w of the collision indicator
  double bound = 0;      // |S|^2 t / r
  double sigma = 0;      // binomial standard error
  int edges_used = 0;
  bool pass() const { return empirical <= bound + 3 * sigma; }
};
// Collision indicator C(S, pi_e): two distinct members of S project equally.
SmoothnessReport smoothness_check(const UFGLabelCover& lc,
                                  const std::vector<Label>& S, int w);

struct ImageBoundReport {
  double empirical = 0;  // Pr over sampled (w, e) of |pi_e(S)| < |S|^d0
  double bound = 0;      // |S|^-d0
  double sigma = 0;
  int trials = 0;
  bool exact_zero_branch = false;  // |S| >= 16^(4t/3): image >= |S|/16^t
  bool pass() const {
    return exact_zero_branch ? empirical == 0.0
                             : empirical <= bound + 3 * sigma;
  }
};
// Empirical check of the image lower-bound probability with exponent d0,
// sampling random subsets of the given size.
ImageBoundReport image_bound_check(const UFGLabelCover& lc, double d0,
                                            int set_size, int trials,
                                            uint64_t seed);

}  // namespace ufg3lin
