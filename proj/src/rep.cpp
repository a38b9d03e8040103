#include "ufg3lin/rep.hpp"

#include <algorithm>
#include <cmath>

namespace ufg3lin {

namespace {

double hs_norm_sq(const Matrix& a) { return a.squaredNorm(); }

Cplx l2_inner(const Group& g, const std::vector<Cplx>& f1,
              const std::vector<Cplx>& f2) {
  Cplx s = 0;
  for (int x = 0; x < g.order(); ++x) s += f1[x] * std::conj(f2[x]);
  return s / static_cast<double>(g.order());
}

}  // namespace

IrrepCatalog::IrrepCatalog(const Group* owner, std::vector<Irrep> irreps)
    : owner_(owner), irreps_(std::move(irreps)) {
  const Group& g = *owner_;
  int dim_sq_sum = 0;
  for (const Irrep& rho : irreps_) {
    if (static_cast<int>(rho.matrices.size()) != g.order())
      throw Error(ErrorCode::CatalogIncomplete,
                  "irrep " + rho.label + " lacks matrices");
    for (Elem a = 0; a < g.order(); ++a) {
      const Matrix& m = rho.at(a);
      if (m.rows() != rho.dim || m.cols() != rho.dim)
        throw Error(ErrorCode::BadFile, "irrep " + rho.label + " bad shape");
      // Unitarity.
      Matrix err = m * m.adjoint() - Matrix::Identity(rho.dim, rho.dim);
      if (err.norm() > 1e-8)
        throw Error(ErrorCode::BadFile, "irrep " + rho.label + " not unitary");
      // Homomorphism.
      for (Elem b = 0; b < g.order(); ++b) {
        if ((rho.at(a) * rho.at(b) - rho.at(g.mul(a, b))).norm() > 1e-8)
          throw Error(ErrorCode::BadFile,
                      "irrep " + rho.label + " is not a homomorphism");
      }
    }
    // Irreducibility: <chi, chi> = 1.
    std::vector<Cplx> chi(g.order());
    for (Elem a = 0; a < g.order(); ++a) chi[a] = rho.character(a);
    if (std::abs(l2_inner(g, chi, chi) - Cplx(1.0)) > 1e-8)
      throw Error(ErrorCode::BadFile, "irrep " + rho.label + " reducible");
    dim_sq_sum += rho.dim * rho.dim;
  }
  if (dim_sq_sum != g.order())
    throw Error(ErrorCode::CatalogIncomplete,
                "sum of dim^2 is " + std::to_string(dim_sq_sum) +
                    ", expected " + std::to_string(g.order()));
  // Pairwise character orthogonality; also locates the trivial irrep.
  for (int i = 0; i < size(); ++i) {
    std::vector<Cplx> ci(g.order()), cj(g.order());
    for (Elem a = 0; a < g.order(); ++a) ci[a] = irreps_[i].character(a);
    for (int j = i + 1; j < size(); ++j) {
      for (Elem a = 0; a < g.order(); ++a) cj[a] = irreps_[j].character(a);
      if (std::abs(l2_inner(g, ci, cj)) > 1e-8)
        throw Error(ErrorCode::BadFile, "characters of " + irreps_[i].label +
                                            " and " + irreps_[j].label +
                                            " not orthogonal");
    }
    bool trivial = irreps_[i].dim == 1;
    for (Elem a = 0; a < g.order() && trivial; ++a)
      trivial = std::abs(irreps_[i].at(a)(0, 0) - Cplx(1.0)) < 1e-8;
    if (trivial) trivial_ = i;
  }
  if (trivial_ < 0)
    throw Error(ErrorCode::CatalogIncomplete, "no trivial irrep in catalog");
}

int IrrepCatalog::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (irreps_[i].label == label) return i;
  throw Error(ErrorCode::MissingIrrep, "no irrep labeled " + label);
}

int ProductIrrep::dim(const IrrepCatalog& cat) const {
  int d = 1;
  for (int c : components) d *= cat[c].dim;
  return d;
}

int ProductIrrep::support_count(const IrrepCatalog& cat) const {
  int n = 0;
  for (int c : components)
    if (c != cat.trivial_index()) ++n;
  return n;
}

bool ProductIrrep::is_trivial(const IrrepCatalog& cat) const {
  return support_count(cat) == 0;
}

Matrix ProductIrrep::evaluate(const IrrepCatalog& cat,
                              const std::vector<Elem>& x) const {
  if (x.size() != components.size())
    throw Error(ErrorCode::LengthMismatch, "tuple length != irrep arity");
  if (dim(cat) > 64)
    throw Error(ErrorCode::DomainTooLarge,
                "tensor dimension above materialization cap");
  Matrix acc = Matrix::Ones(1, 1);
  for (size_t d = 0; d < components.size(); ++d) {
    const Matrix& m = cat[components[d]].at(x[d]);
    Matrix next(acc.rows() * m.rows(), acc.cols() * m.cols());
    for (int i = 0; i < acc.rows(); ++i)
      for (int j = 0; j < acc.cols(); ++j)
        next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) =
            acc(i, j) * m;
    acc = std::move(next);
  }
  return acc;
}

Cplx ProductIrrep::character(const IrrepCatalog& cat,
                             const std::vector<Elem>& x) const {
  Cplx c = 1.0;
  for (size_t d = 0; d < components.size(); ++d)
    c *= cat[components[d]].character(x[d]);
  return c;
}

long domain_size(const Group& g, int n) {
  long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= g.order();
    if (size > kDomainCap)
      throw Error(ErrorCode::DomainTooLarge,
                  "|G|^n exceeds the enumeration cap");
  }
  return size;
}

std::vector<Elem> index_to_tuple(const Group& g, int n, long idx) {
  std::vector<Elem> x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = static_cast<Elem>(idx % g.order());
    idx /= g.order();
  }
  return x;
}

long tuple_to_index(const Group& g, const std::vector<Elem>& x) {
  long idx = 0;
  for (size_t i = x.size(); i-- > 0;) idx = idx * g.order() + x[i];
  return idx;
}

std::vector<ProductIrrep> all_product_irreps(const IrrepCatalog& cat, int n) {
  long count = 1;
  for (int i = 0; i < n; ++i) count *= cat.size();
  std::vector<ProductIrrep> out;
  out.reserve(count);
  for (long idx = 0; idx < count; ++idx) {
    ProductIrrep p;
    p.components.resize(n);
    long rem = idx;
    for (int i = 0; i < n; ++i) {
      p.components[i] = static_cast<int>(rem % cat.size());
      rem /= cat.size();
    }
    out.push_back(std::move(p));
  }
  return out;
}

FourierCoefficient fourier_transform(const IrrepCatalog& cat, const FnTable& f,
                                     int n, const ProductIrrep& alpha) {
  const Group& g = cat.group();
  const long size = domain_size(g, n);
  if (static_cast<long>(f.size()) != size)
    throw Error(ErrorCode::DomainMismatch, "function table has wrong size");
  const int d = alpha.dim(cat);
  Matrix acc = Matrix::Zero(d, d);
  for (long idx = 0; idx < size; ++idx)
    acc += f[idx] * alpha.evaluate(cat, index_to_tuple(g, n, idx));
  return FourierCoefficient{alpha, acc / static_cast<double>(size)};
}

FnTable inverse_fourier(const IrrepCatalog& cat, int n,
                        const std::vector<FourierCoefficient>& coeffs) {
  const Group& g = cat.group();
  long expected = 1;
  for (int i = 0; i < n; ++i) expected *= cat.size();
  if (static_cast<long>(coeffs.size()) != expected)
    throw Error(ErrorCode::MissingIrrep,
                "need one coefficient per irrep of G^n");
  const long size = domain_size(g, n);
  FnTable f(size, Cplx(0));
  for (const FourierCoefficient& c : coeffs) {
    const double dim = c.irrep.dim(cat);
    for (long idx = 0; idx < size; ++idx) {
      Matrix ax = c.irrep.evaluate(cat, index_to_tuple(g, n, idx));
      // <fhat, alpha(x)> = tr(fhat * alpha(x)^*)
      f[idx] += dim * (c.matrix * ax.adjoint()).trace();
    }
  }
  return f;
}

ParsevalReport parseval_check(const IrrepCatalog& cat, const FnTable& f,
                              int n) {
  const long size = domain_size(cat.group(), n);
  ParsevalReport rep;
  for (const Cplx& v : f) rep.lhs += std::norm(v);
  rep.lhs /= static_cast<double>(size);
  for (const ProductIrrep& alpha : all_product_irreps(cat, n)) {
    FourierCoefficient c = fourier_transform(cat, f, n, alpha);
    rep.rhs += alpha.dim(cat) * hs_norm_sq(c.matrix);
  }
  rep.gap = std::abs(rep.lhs - rep.rhs);
  return rep;
}

FnTable convolve(const IrrepCatalog& cat, const FnTable& f, const FnTable& g,
                 int n) {
  const Group& grp = cat.group();
  const long size = domain_size(grp, n);
  if (static_cast<long>(f.size()) != size ||
      static_cast<long>(g.size()) != size)
    throw Error(ErrorCode::DomainMismatch, "convolution domains differ");
  FnTable out(size, Cplx(0));
  for (long ix = 0; ix < size; ++ix) {
    std::vector<Elem> x = index_to_tuple(grp, n, ix);
    Cplx acc = 0;
    for (long iy = 0; iy < size; ++iy) {
      std::vector<Elem> y = index_to_tuple(grp, n, iy);
      std::vector<Elem> yinv_x = tuple_mul(grp, tuple_inv(grp, y), x);
      acc += f[iy] * g[tuple_to_index(grp, yinv_x)];
    }
    out[ix] = acc / static_cast<double>(size);
  }
  return out;
}

CharacterTableReport character_table(const IrrepCatalog& cat) {
  const Group& g = cat.group();
  CharacterTableReport rep;
  rep.table.resize(cat.size());
  for (int i = 0; i < cat.size(); ++i) {
    rep.table[i].resize(g.order());
    for (Elem a = 0; a < g.order(); ++a) rep.table[i][a] = cat[i].character(a);
  }
  for (Elem a = 0; a < g.order(); ++a) {
    Cplx sum = 0;
    for (int i = 0; i < cat.size(); ++i)
      sum += static_cast<double>(cat[i].dim) * rep.table[i][a];
    Cplx expected = (a == g.identity()) ? Cplx(g.order()) : Cplx(0);
    rep.dim_sum_deviation =
        std::max(rep.dim_sum_deviation, std::abs(sum - expected));
  }
  return rep;
}

std::vector<Constituent> pullback_decompose(const IrrepCatalog& cat,
                                            const ProductIrrep& alpha,
                                            const std::vector<int>& pi,
                                            int L) {
  const Group& g = cat.group();
  const int R = static_cast<int>(alpha.components.size());
  if (static_cast<int>(pi.size()) != R)
    throw Error(ErrorCode::LengthMismatch, "pi arity != alpha arity");
  for (int v : pi)
    if (v < 0 || v >= L)
      throw Error(ErrorCode::IndexOutOfRange, "pi value out of [L]");
  domain_size(g, L);

  // chi_{alpha o pi~}(y) factors per output coordinate, so each candidate
  // multiplicity is a product of single-coordinate character inner products.
  std::vector<Constituent> out;
  int dim_total = 0;
  for (const ProductIrrep& tau : all_product_irreps(cat, L)) {
    Cplx mult = 1.0;
    for (int l = 0; l < L && std::abs(mult) > 1e-12; ++l) {
      Cplx coord = 0;
      for (Elem y = 0; y < g.order(); ++y) {
        Cplx prod = 1.0;
        for (int d = 0; d < R; ++d)
          if (pi[d] == l) prod *= cat[alpha.components[d]].character(y);
        coord += prod * std::conj(cat[tau.components[l]].character(y));
      }
      mult *= coord / static_cast<double>(g.order());
    }
    double rounded = std::round(mult.real());
    if (std::abs(mult - Cplx(rounded)) > kMultTol)
      throw Error(ErrorCode::BadFile, "non-integer multiplicity");
    int m = static_cast<int>(rounded);
    if (m > 0) {
      dim_total += m * tau.dim(cat);
      out.push_back(Constituent{tau, m});
    }
  }
  if (dim_total != alpha.dim(cat))
    throw Error(ErrorCode::BadFile, "pullback dimension accounting failed");
  return out;
}

TSets t_sets(const IrrepCatalog& cat, const ProductIrrep& alpha,
             const std::vector<int>& pi) {
  TSets s;
  const int R = static_cast<int>(alpha.components.size());
  for (int d = 0; d < R; ++d) {
    if (alpha.components[d] != cat.trivial_index()) s.T.insert(d);
    if (cat[alpha.components[d]].dim >= 2) s.tilde_T.insert(d);
  }
  auto project = [&](const std::set<int>& t, std::set<int>& img,
                     std::set<int>& uq) {
    for (int d : t) img.insert(pi[d]);
    for (int d : t) {
      bool unique = true;
      for (int d2 : t)
        if (d2 != d && pi[d2] == pi[d]) unique = false;
      if (unique) uq.insert(pi[d]);
    }
  };
  project(s.T, s.T_pi, s.T_pi_uq);
  project(s.tilde_T, s.tilde_T_pi, s.tilde_T_pi_uq);
  return s;
}

ContainmentReport verify_containments(const IrrepCatalog& cat,
                                      const ProductIrrep& alpha,
                                      const std::vector<int>& pi, int L,
                                      ContainmentMode mode) {
  TSets sets = t_sets(cat, alpha, pi);
  const std::set<int>& lower =
      (mode == ContainmentMode::Plain) ? sets.T_pi_uq : sets.tilde_T_pi_uq;
  const std::set<int>& upper =
      (mode == ContainmentMode::Plain) ? sets.T_pi : sets.tilde_T_pi;

  ContainmentReport rep;
  for (const Constituent& c : pullback_decompose(cat, alpha, pi, L)) {
    ++rep.constituents_checked;
    std::set<int> t_tau;
    for (int l = 0; l < L; ++l) {
      bool in = (mode == ContainmentMode::Plain)
                    ? c.tau.components[l] != cat.trivial_index()
                    : cat[c.tau.components[l]].dim >= 2;
      if (in) t_tau.insert(l);
    }
    if (!std::includes(t_tau.begin(), t_tau.end(), lower.begin(), lower.end()))
      rep.violations.push_back("lower containment fails for a constituent");
    if (!std::includes(upper.begin(), upper.end(), t_tau.begin(), t_tau.end()))
      rep.violations.push_back("upper containment fails for a constituent");
  }
  return rep;
}

}  // namespace ufg3lin
