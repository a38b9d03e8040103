// Max-3-LIN instances over a group, with three solvers: exact brute force,
// random baseline, and the abelianization approximation (solve the linear
// system in G/[G,G], then lift each variable uniformly within its coset).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ufg3lin/group.hpp"
#include "ufg3lin/rng.hpp"

namespace ufg3lin {

struct Max3LinConstraint {
  int i1 = 0, i2 = 0, i3 = 0;  // pairwise distinct variable indices
  Elem c = 0;
};

struct Max3LinInstance {
  const Group* group = nullptr;
  int n_vars = 0;
  std::vector<Max3LinConstraint> constraints;

  void validate() const;
  void save(const std::string& path) const;
  // Loading needs the group resolved by the caller (the file names it).
  static Max3LinInstance load(const std::string& path, const Group& g);
  static std::string group_name_of(const std::string& path);
};

using Assignment = std::vector<Elem>;

// Fraction of constraints with x_{i1} x_{i2} x_{i3} = c.
double evaluate(const Max3LinInstance& inst, const Assignment& sigma);

struct BruteForceResult {
  double value = 0;
  Assignment witness;  // lexicographically first optimum
};
// Exact maximum by enumeration; throws DomainTooLarge past the evaluation cap.
BruteForceResult brute_force(const Max3LinInstance& inst,
                             long cap = kBruteForceCap);

struct RandomBaselineResult {
  double value = 0;
  Assignment witness;
};
RandomBaselineResult random_baseline(const Max3LinInstance& inst, int restarts,
                                     uint64_t seed);

struct AbelianSolveResult {
  Assignment assignment;
  double value = 0;
  bool system_consistent = false;
  bool fallback = false;  // infeasible abelianization; random restarts used
};
AbelianSolveResult abelian_solve(const Max3LinInstance& inst, uint64_t seed);

// Instance with a planted satisfying assignment (returned alongside).
std::pair<Max3LinInstance, Assignment> planted_instance(const Group& g,
                                                        int n_vars, int m,
                                                        uint64_t seed);
Max3LinInstance random_instance(const Group& g, int n_vars, int m,
                                uint64_t seed);

}  // namespace ufg3lin
