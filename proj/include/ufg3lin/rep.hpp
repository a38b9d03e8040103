// Unitary irreducible representations and non-abelian Fourier analysis on G
// and G^n, pullback decomposition along projections, and T-set containments.
//
// Catalogs are immutable once validated; all transforms are pure, so callers
// may parallelize over irreps.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <set>
#include <string>
#include <vector>

#include "ufg3lin/common.hpp"
#include "ufg3lin/group.hpp"

namespace ufg3lin {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

struct Irrep {
  std::string label;
  int dim = 0;
  std::vector<Matrix> matrices;  // one dim x dim matrix per group element

  const Matrix& at(Elem g) const { return matrices[g]; }
  Cplx character(Elem g) const { return matrices[g].trace(); }
};

class IrrepCatalog {
 public:
  // Validates homomorphism, unitarity, irreducibility (<chi,chi> = 1),
  // pairwise character orthogonality and sum dim^2 = |G|.
  IrrepCatalog(const Group* owner, std::vector<Irrep> irreps);

  const Group& group() const { return *owner_; }
  int size() const { return static_cast<int>(irreps_.size()); }
  const Irrep& operator[](int i) const { return irreps_[i]; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  int trivial_index() const { return trivial_; }
  int find(const std::string& label) const;

 private:
  const Group* owner_;
  std::vector<Irrep> irreps_;
  int trivial_ = -1;
};

// Tensor product of per-coordinate irreps, representing an irrep of G^n.
// Kept as component indices; the full matrix is materialized only on demand
// and only while the dimension stays small.
struct ProductIrrep {
  std::vector<int> components;  // irrep index per coordinate

  int dim(const IrrepCatalog& cat) const;
  // |alpha| = number of nontrivial components.
  int support_count(const IrrepCatalog& cat) const;
  // Tensor-product evaluation at a tuple. Throws DomainTooLarge if dim > 64.
  Matrix evaluate(const IrrepCatalog& cat, const std::vector<Elem>& x) const;
  Cplx character(const IrrepCatalog& cat, const std::vector<Elem>& x) const;
  bool is_trivial(const IrrepCatalog& cat) const;
};

struct FourierCoefficient {
  ProductIrrep irrep;
  Matrix matrix;
};

struct TSets {
  std::set<int> T, T_pi, T_pi_uq;
  std::set<int> tilde_T, tilde_T_pi, tilde_T_pi_uq;
};

// Complex-valued function tables on G^n. Point index is mixed radix with
// coordinate 0 least significant.
using FnTable = std::vector<Cplx>;

long domain_size(const Group& g, int n);  // throws DomainTooLarge past the cap
std::vector<Elem> index_to_tuple(const Group& g, int n, long idx);
long tuple_to_index(const Group& g, const std::vector<Elem>& x);

// All |Irrep(G)|^n product irreps of G^n, in mixed-radix order.
std::vector<ProductIrrep> all_product_irreps(const IrrepCatalog& cat, int n);

// E_x [ f(x) alpha(x) ].
FourierCoefficient fourier_transform(const IrrepCatalog& cat, const FnTable& f,
                                     int n, const ProductIrrep& alpha);

// f(x) = sum_alpha dim(alpha) <fhat(alpha), alpha(x)>. Expects one
// coefficient per irrep of G^n; throws MissingIrrep otherwise.
FnTable inverse_fourier(const IrrepCatalog& cat, int n,
                        const std::vector<FourierCoefficient>& coeffs);

struct ParsevalReport {
  double lhs = 0;  // ||f||^2 in L2(G^n)
  double rhs = 0;  // sum dim(alpha) ||fhat(alpha)||_HS^2
  double gap = 0;
};
ParsevalReport parseval_check(const IrrepCatalog& cat, const FnTable& f, int n);

// (f*g)(x) = E_y [ f(y) g(y^-1 x) ].
FnTable convolve(const IrrepCatalog& cat, const FnTable& f, const FnTable& g,
                 int n);

struct CharacterTableReport {
  std::vector<std::vector<Cplx>> table;  // [irrep][element]
  double dim_sum_deviation = 0;  // worst |sum_rho dim chi(g) - expected|
};
// Tabulates characters and verifies sum_rho dim(rho) chi_rho(g) = |G| at the
// identity and 0 elsewhere.
CharacterTableReport character_table(const IrrepCatalog& cat);

// Decomposition of alpha o pi~ into irreps of G^L with multiplicities,
// computed through character inner products only.
struct Constituent {
  ProductIrrep tau;
  int multiplicity = 0;
};
std::vector<Constituent> pullback_decompose(const IrrepCatalog& cat,
                                            const ProductIrrep& alpha,
                                            const std::vector<int>& pi, int L);

TSets t_sets(const IrrepCatalog& cat, const ProductIrrep& alpha,
             const std::vector<int>& pi);

enum class ContainmentMode { Plain, Tilde };

struct ContainmentReport {
  int constituents_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// For every positive-multiplicity constituent tau of alpha o pi~, asserts
// T_pi^uq(alpha) subset T(tau) subset T_pi(alpha) (or the tilde chain).
ContainmentReport verify_containments(const IrrepCatalog& cat,
                                      const ProductIrrep& alpha,
                                      const std::vector<int>& pi, int L,
                                      ContainmentMode mode);

}  // namespace ufg3lin
