// Finite groups as explicit multiplication tables.
//
// A Group owns its multiplication table, identity and inverse tables; all
// algebra in the project runs through element indices into these tables.
// Groups are immutable after construction and safe to share across threads.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ufg3lin/common.hpp"

namespace ufg3lin {

using Elem = int;  // element index in [0, order)

class Group {
 public:
  // Validates associativity (exhaustive), identity and inverses.
  Group(std::string name, std::vector<std::vector<Elem>> mult);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mult_.size()); }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return mult_[a][b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::vector<std::vector<Elem>>& mult_table() const { return mult_; }

 private:
  std::string name_;
  std::vector<std::vector<Elem>> mult_;
  Elem identity_ = -1;
  std::vector<Elem> inv_;
};

struct Subgroup {
  const Group* owner = nullptr;
  std::set<Elem> members;

  bool contains(Elem g) const { return members.count(g) != 0; }
  int size() const { return static_cast<int>(members.size()); }
};

// Quotient G/[G,G] expressed as a product of cyclic groups Z_{m1} x ... x Z_{mk}
// with m_{i+1} | m_i. project() is a surjective homomorphism with kernel
// exactly [G,G]; lift() returns one representative per coset word.
struct AbelianDecomposition {
  const Group* owner = nullptr;
  std::vector<int> invariant_factors;
  // project[g] = residue vector of g, length invariant_factors.size().
  std::vector<std::vector<int>> project;
  // lift[flat coset word] = representative element index. Words are flattened
  // in mixed radix with invariant_factors as digits, first factor slowest.
  std::vector<Elem> lift;

  int flatten(const std::vector<int>& word) const {
    int idx = 0;
    for (size_t i = 0; i < invariant_factors.size(); ++i)
      idx = idx * invariant_factors[i] + word[i];
    return idx;
  }
  Elem lift_word(const std::vector<int>& word) const { return lift[flatten(word)]; }
};

// Smallest subgroup containing all g^-1 h^-1 g h, computed by closure of the
// generating set.
Subgroup commutator_subgroup(const Group& g);

// Subgroup generated by a set of elements.
Subgroup generated_subgroup(const Group& g, const std::vector<Elem>& gens);

AbelianDecomposition abelianize(const Group& g);

// Coordinate-wise operations on tuples over G^n.
std::vector<Elem> tuple_mul(const Group& g, const std::vector<Elem>& x,
                            const std::vector<Elem>& y);
std::vector<Elem> tuple_inv(const Group& g, const std::vector<Elem>& x);
std::vector<Elem> tuple_left_scale(const Group& g, Elem c,
                                   const std::vector<Elem>& x);
std::vector<Elem> tuple_right_scale(const Group& g, const std::vector<Elem>& x,
                                    Elem c);

}  // namespace ufg3lin
