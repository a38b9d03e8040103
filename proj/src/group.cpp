#include "ufg3lin/group.hpp"

#include <algorithm>
#include <numeric>

namespace ufg3lin {

Group::Group(std::string name, std::vector<std::vector<Elem>> mult)
    : name_(std::move(name)), mult_(std::move(mult)) {
  const int n = static_cast<int>(mult_.size());
  if (n == 0) throw Error(ErrorCode::BadFile, "empty multiplication table");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::BadFile, "multiplication table is not square");
    for (Elem e : row)
      if (e < 0 || e >= n)
        throw Error(ErrorCode::BadFile, "table entry out of range");
  }

  // Two-sided identity.
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g)
      ok = mult_[e][g] == g && mult_[g][e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

  // Two-sided inverses.
  inv_.assign(n, -1);
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h) {
      if (mult_[g][h] == identity_ && mult_[h][g] == identity_) {
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0)
      throw Error(ErrorCode::NoInverse,
                  "element " + std::to_string(g) + " has no inverse");
  }

  // Exhaustive associativity check; groups here stay tiny.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw Error(ErrorCode::NotAssociative,
                      "triple (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ") is not associative");
}

Subgroup generated_subgroup(const Group& g, const std::vector<Elem>& gens) {
  Subgroup h;
  h.owner = &g;
  h.members.insert(g.identity());
  std::vector<Elem> frontier{g.identity()};
  std::set<Elem> genset(gens.begin(), gens.end());
  for (Elem x : gens) genset.insert(g.inv(x));
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem s : genset) {
      Elem y = g.mul(x, s);
      if (h.members.insert(y).second) frontier.push_back(y);
    }
  }
  return h;
}

Subgroup commutator_subgroup(const Group& g) {
  std::vector<Elem> commutators;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      commutators.push_back(
          g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return generated_subgroup(g, commutators);
}

namespace {

// Explicit quotient group Q = G/N for normal N, plus the coset map G -> Q.
struct Quotient {
  std::vector<std::vector<Elem>> mult;
  std::vector<Elem> coset_of;          // G element -> Q element
  std::vector<Elem> representative;    // Q element -> one G element
};

Quotient build_quotient(const Group& g, const Subgroup& n) {
  Quotient q;
  q.coset_of.assign(g.order(), -1);
  for (Elem x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] >= 0) continue;
    int id = static_cast<int>(q.representative.size());
    q.representative.push_back(x);
    for (Elem h : n.members) q.coset_of[g.mul(x, h)] = id;
  }
  const int m = static_cast<int>(q.representative.size());
  q.mult.assign(m, std::vector<Elem>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      q.mult[a][b] = q.coset_of[g.mul(q.representative[a], q.representative[b])];
  return q;
}

int element_order(const std::vector<std::vector<Elem>>& mult, Elem e, Elem x) {
  int k = 1;
  Elem y = x;
  while (y != e) {
    y = mult[y][x];
    ++k;
  }
  return k;
}

// Builds a homomorphism phi: Q -> Z_m with phi(a) = 1, where a has maximal
// order m in the abelian group Q. Extends coordinate by coordinate: for q
// outside the current domain H with q^s the first power landing in H, any v
// with s*v = phi(q^s) (mod m) extends phi; such v exists because the order of
// phi(q^s) divides m/s.
std::vector<int> extend_to_hom(const std::vector<std::vector<Elem>>& mult,
                               Elem e, Elem a, int m) {
  const int n = static_cast<int>(mult.size());
  std::vector<int> phi(n, -1);
  // phi on <a>.
  Elem y = e;
  for (int k = 0; k < m; ++k) {
    phi[y] = k;
    y = mult[y][a];
  }
  for (Elem q = 0; q < n; ++q) {
    if (phi[q] >= 0) continue;
    int s = 1;
    Elem p = q;
    while (phi[p] < 0) {
      p = mult[p][q];
      ++s;
    }
    int target = phi[p];  // need s*v == target (mod m)
    int v = -1;
    for (int cand = 0; cand < m; ++cand) {
      if ((static_cast<long long>(s) * cand) % m == target) {
        v = cand;
        break;
      }
    }
    if (v < 0)
      throw Error(ErrorCode::BadFile, "homomorphism extension failed");
    // Close the domain under the new element.
    std::vector<Elem> known;
    for (Elem x = 0; x < n; ++x)
      if (phi[x] >= 0) known.push_back(x);
    Elem pw = q;
    int val = v;
    for (int k = 1; k < s; ++k) {
      for (Elem x : known) {
        Elem nx = mult[x][pw];
        if (phi[nx] < 0) phi[nx] = (phi[x] + val) % m;
      }
      pw = mult[pw][q];
      val = (val + v) % m;
    }
  }
  return phi;
}

// Invariant factors and projection of an abelian group given by its table.
void decompose_abelian(const std::vector<std::vector<Elem>>& mult, Elem e,
                       std::vector<int>& factors,
                       std::vector<std::vector<int>>& proj) {
  const int n = static_cast<int>(mult.size());
  proj.assign(n, {});
  if (n == 1) return;
  // Maximal-order element gives the largest invariant factor.
  int m = 1;
  Elem a = e;
  for (Elem x = 0; x < n; ++x) {
    int o = element_order(mult, e, x);
    if (o > m) {
      m = o;
      a = x;
    }
  }
  std::vector<int> phi = extend_to_hom(mult, e, a, m);
  factors.push_back(m);

  // Kernel of phi carries the remaining factors; recurse on it.
  std::vector<Elem> kernel;
  std::vector<int> kernel_index(n, -1);
  for (Elem x = 0; x < n; ++x)
    if (phi[x] == 0) {
      kernel_index[x] = static_cast<int>(kernel.size());
      kernel.push_back(x);
    }
  const int kn = static_cast<int>(kernel.size());
  std::vector<std::vector<Elem>> kmult(kn, std::vector<Elem>(kn));
  for (int i = 0; i < kn; ++i)
    for (int j = 0; j < kn; ++j)
      kmult[i][j] = kernel_index[mult[kernel[i]][kernel[j]]];
  std::vector<int> kfactors;
  std::vector<std::vector<int>> kproj;
  decompose_abelian(kmult, kernel_index[e], kfactors, kproj);

  // a^-phi(x) * x lies in the kernel; combine coordinates.
  Elem ainv = e;
  for (Elem y = 0; y < n; ++y)
    if (mult[a][y] == e) {
      ainv = y;
      break;
    }
  for (Elem x = 0; x < n; ++x) {
    Elem shift = e;
    for (int k = 0; k < phi[x]; ++k) shift = mult[shift][ainv];
    Elem kx = mult[shift][x];
    proj[x].push_back(phi[x]);
    const auto& rest = kproj[kernel_index[kx]];
    proj[x].insert(proj[x].end(), rest.begin(), rest.end());
  }
  factors.insert(factors.end(), kfactors.begin(), kfactors.end());
}

}  // namespace

AbelianDecomposition abelianize(const Group& g) {
  Subgroup comm = commutator_subgroup(g);
  Quotient q = build_quotient(g, comm);

  AbelianDecomposition dec;
  dec.owner = &g;
  std::vector<std::vector<int>> qproj;
  Elem qe = q.coset_of[g.identity()];
  decompose_abelian(q.mult, qe, dec.invariant_factors, qproj);

  dec.project.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) dec.project[x] = qproj[q.coset_of[x]];

  int total = 1;
  for (int m : dec.invariant_factors) total *= m;
  dec.lift.assign(total, -1);
  for (Elem x = 0; x < g.order(); ++x) {
    int idx = dec.flatten(dec.project[x]);
    if (dec.lift[idx] < 0) dec.lift[idx] = x;
  }
  return dec;
}

namespace {
void check_same_length(const std::vector<Elem>& x, const std::vector<Elem>& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::LengthMismatch, "tuple lengths differ");
}
}  // namespace

std::vector<Elem> tuple_mul(const Group& g, const std::vector<Elem>& x,
                            const std::vector<Elem>& y) {
  check_same_length(x, y);
  std::vector<Elem> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = g.mul(x[i], y[i]);
  return out;
}

std::vector<Elem> tuple_inv(const Group& g, const std::vector<Elem>& x) {
  std::vector<Elem> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = g.inv(x[i]);
  return out;
}

std::vector<Elem> tuple_left_scale(const Group& g, Elem c,
                                   const std::vector<Elem>& x) {
  std::vector<Elem> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = g.mul(c, x[i]);
  return out;
}

std::vector<Elem> tuple_right_scale(const Group& g, const std::vector<Elem>& x,
                                    Elem c) {
  std::vector<Elem> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = g.mul(x[i], c);
  return out;
}

}  // namespace ufg3lin
