#include "ufg3lin/solvers.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ufg3lin {

void Max3LinInstance::validate() const {
  if (group == nullptr) throw Error(ErrorCode::UsageError, "instance has no group");
  for (const auto& cst : constraints) {
    for (int i : {cst.i1, cst.i2, cst.i3})
      if (i < 0 || i >= n_vars)
        throw Error(ErrorCode::IndexOutOfRange,
                    "constraint variable " + std::to_string(i) +
                        " outside [0, " + std::to_string(n_vars) + ")");
    if (cst.i1 == cst.i2 || cst.i1 == cst.i3 || cst.i2 == cst.i3)
      throw Error(ErrorCode::UsageError, "constraint scope has a repeated variable");
    if (cst.c < 0 || cst.c >= group->order())
      throw Error(ErrorCode::IndexOutOfRange, "constraint rhs outside the group");
  }
}

void Max3LinInstance::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadFile, "cannot write " + path);
  out << group->name() << ' ' << n_vars << ' ' << constraints.size() << '\n';
  for (const auto& cst : constraints)
    out << cst.i1 << ' ' << cst.i2 << ' ' << cst.i3 << ' ' << cst.c << '\n';
}

std::string Max3LinInstance::group_name_of(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadFile, "cannot read " + path);
  std::string name;
  if (!(in >> name)) throw Error(ErrorCode::BadFile, "empty instance file " + path);
  return name;
}

Max3LinInstance Max3LinInstance::load(const std::string& path, const Group& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadFile, "cannot read " + path);
  std::string name;
  int n = 0;
  long m = 0;
  if (!(in >> name >> n >> m))
    throw Error(ErrorCode::BadFile, "malformed header in " + path);
  Max3LinInstance inst;
  inst.group = &g;
  inst.n_vars = n;
  inst.constraints.reserve(static_cast<size_t>(m));
  for (long k = 0; k < m; ++k) {
    Max3LinConstraint cst;
    if (!(in >> cst.i1 >> cst.i2 >> cst.i3 >> cst.c))
      throw Error(ErrorCode::BadFile, "truncated constraint list in " + path);
    inst.constraints.push_back(cst);
  }
  inst.validate();
  return inst;
}

double evaluate(const Max3LinInstance& inst, const Assignment& sigma) {
  if (static_cast<int>(sigma.size()) != inst.n_vars)
    throw Error(ErrorCode::LengthMismatch, "assignment length != n_vars");
  if (inst.constraints.empty()) return 0.0;
  const Group& g = *inst.group;
  long sat = 0;
  for (const auto& cst : inst.constraints) {
    Elem lhs = g.mul(g.mul(sigma[cst.i1], sigma[cst.i2]), sigma[cst.i3]);
    if (lhs == cst.c) ++sat;
  }
  return static_cast<double>(sat) / static_cast<double>(inst.constraints.size());
}

BruteForceResult brute_force(const Max3LinInstance& inst, long cap) {
  inst.validate();
  const int q = inst.group->order();
  double total = 1;
  for (int i = 0; i < inst.n_vars; ++i) {
    total *= q;
    if (total > static_cast<double>(cap))
      throw Error(ErrorCode::DomainTooLarge,
                  "brute force would enumerate more than " + std::to_string(cap) +
                      " assignments");
  }
  Assignment sigma(inst.n_vars, 0);
  BruteForceResult best;
  best.value = -1;
  while (true) {
    double v = evaluate(inst, sigma);
    if (v > best.value) {  // strict: keeps the lexicographically first optimum
      best.value = v;
      best.witness = sigma;
    }
    int pos = 0;  // odometer, coordinate 0 fastest
    while (pos < inst.n_vars && ++sigma[pos] == q) sigma[pos++] = 0;
    if (pos == inst.n_vars) break;
  }
  return best;
}

RandomBaselineResult random_baseline(const Max3LinInstance& inst, int restarts,
                                     uint64_t seed) {
  inst.validate();
  if (restarts < 1) throw Error(ErrorCode::ParameterOutOfRange, "restarts < 1");
  Rng rng(derive_seed(seed, "random-baseline"));
  const int q = inst.group->order();
  RandomBaselineResult best;
  best.value = -1;
  for (int rep = 0; rep < restarts; ++rep) {
    Assignment sigma(inst.n_vars);
    for (auto& x : sigma) x = static_cast<Elem>(rng.below(static_cast<uint64_t>(q)));
    double v = evaluate(inst, sigma);
    if (v > best.value) {
      best.value = v;
      best.witness = std::move(sigma);
    }
  }
  return best;
}

namespace {

// Row-reduce `rows` (n coefficient columns + rhs) over Z_m and return a
// solution if one exists. Pivoting combines rows via the extended Euclid
// identity so the method is valid for any modulus, prime or not.
struct ZmSystem {
  long long m;
  int n;
  std::vector<std::vector<long long>> rows;

  long long norm(long long v) const {
    v %= m;
    return v < 0 ? v + m : v;
  }

  static long long ext_gcd(long long a, long long b, long long& u, long long& v) {
    if (b == 0) {
      u = 1;
      v = 0;
      return a;
    }
    long long u1, v1;
    long long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
  }

  bool solve(std::vector<long long>& x) {
    std::vector<int> pivot_col;
    size_t pr = 0;
    for (int col = 0; col < n && pr < rows.size(); ++col) {
      // Fold every nonzero entry below pr into one row via gcd combinations.
      size_t lead = pr;
      while (lead < rows.size() && rows[lead][col] % m == 0) ++lead;
      if (lead == rows.size()) continue;
      std::swap(rows[pr], rows[lead]);
      for (size_t rr = pr + 1; rr < rows.size(); ++rr) {
        long long a = norm(rows[pr][col]), b = norm(rows[rr][col]);
        if (b == 0) continue;
        long long u, v;
        long long g = ext_gcd(a, b, u, v);
        for (int j = col; j <= n; ++j) {
          long long top = norm(u * norm(rows[pr][j]) + v * norm(rows[rr][j]));
          long long bot = norm(norm(rows[rr][j]) * (a / g) -
                               norm(rows[pr][j]) * (b / g));
          rows[pr][j] = top;
          rows[rr][j] = bot;
        }
      }
      pivot_col.push_back(col);
      ++pr;
    }
    for (size_t rr = pr; rr < rows.size(); ++rr)
      if (norm(rows[rr][n]) != 0) return false;  // 0 = nonzero
    x.assign(n, 0);
    for (size_t k = pivot_col.size(); k-- > 0;) {
      int col = pivot_col[k];
      long long rhs = norm(rows[k][n]);
      for (int j = col + 1; j < n; ++j)
        rhs = norm(rhs - norm(rows[k][j]) * x[j]);
      long long a = norm(rows[k][col]);
      long long u, v;
      long long g = ext_gcd(a, m, u, v);
      if (rhs % g != 0) return false;
      long long mg = m / g;
      long long inv = ((u % mg) + mg) % mg;  // inverse of a/g modulo m/g
      x[col] = (rhs / g) % mg * inv % mg;
    }
    return true;
  }
};

}  // namespace

AbelianSolveResult abelian_solve(const Max3LinInstance& inst, uint64_t seed) {
  inst.validate();
  const Group& g = *inst.group;
  AbelianDecomposition dec = abelianize(g);
  const int n = inst.n_vars;
  const size_t nf = dec.invariant_factors.size();

  AbelianSolveResult out;
  out.system_consistent = true;
  // residues[i] = solved value of variable i in each cyclic factor
  std::vector<std::vector<long long>> residues(static_cast<size_t>(n),
                                               std::vector<long long>(nf, 0));
  for (size_t f = 0; f < nf && out.system_consistent; ++f) {
    ZmSystem sys;
    sys.m = dec.invariant_factors[f];
    sys.n = n;
    sys.rows.reserve(inst.constraints.size());
    for (const auto& cst : inst.constraints) {
      std::vector<long long> row(static_cast<size_t>(n) + 1, 0);
      row[cst.i1] = sys.norm(row[cst.i1] + 1);
      row[cst.i2] = sys.norm(row[cst.i2] + 1);
      row[cst.i3] = sys.norm(row[cst.i3] + 1);
      row[n] = dec.project[cst.c][f];
      sys.rows.push_back(std::move(row));
    }
    std::vector<long long> x;
    if (!sys.solve(x)) {
      out.system_consistent = false;
      break;
    }
    for (int i = 0; i < n; ++i) residues[static_cast<size_t>(i)][f] = x[i];
  }

  if (!out.system_consistent) {
    out.fallback = true;
    auto rb = random_baseline(inst, 10, derive_seed(seed, "abelian-fallback"));
    out.assignment = std::move(rb.witness);
    out.value = rb.value;
    return out;
  }

  // Double-check the residues against every projected constraint.
  for (const auto& cst : inst.constraints) {
    const auto& rhs = dec.project[cst.c];
    for (size_t f = 0; f < nf; ++f) {
      long long m = dec.invariant_factors[f];
      long long s = (residues[cst.i1][f] + residues[cst.i2][f] +
                     residues[cst.i3][f]) % m;
      if (s != rhs[f] % m)
        throw Error(ErrorCode::UsageError, "abelian residue verification failed");
    }
  }

  // Lift: coset representative from the residues, then a uniform element of
  // the commutator subgroup on the right.
  Subgroup comm = commutator_subgroup(g);
  std::vector<Elem> comm_elems(comm.members.begin(), comm.members.end());
  Rng rng(derive_seed(seed, "abelian-lift"));
  out.assignment.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> word(nf);
    for (size_t f = 0; f < nf; ++f)
      word[f] = static_cast<int>(residues[static_cast<size_t>(i)][f]);
    Elem rep = dec.lift_word(word);
    Elem k = comm_elems[rng.below(comm_elems.size())];
    out.assignment[static_cast<size_t>(i)] = g.mul(rep, k);
  }
  out.value = evaluate(inst, out.assignment);
  return out;
}

std::pair<Max3LinInstance, Assignment> planted_instance(const Group& g,
                                                        int n_vars, int m,
                                                        uint64_t seed) {
  if (n_vars < 3) throw Error(ErrorCode::ParameterOutOfRange, "need n_vars >= 3");
  Rng rng(derive_seed(seed, "planted-3lin"));
  Assignment sigma(static_cast<size_t>(n_vars));
  for (auto& x : sigma)
    x = static_cast<Elem>(rng.below(static_cast<uint64_t>(g.order())));
  Max3LinInstance inst;
  inst.group = &g;
  inst.n_vars = n_vars;
  inst.constraints.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    int i1 = static_cast<int>(rng.below(static_cast<uint64_t>(n_vars)));
    int i2, i3;
    do i2 = static_cast<int>(rng.below(static_cast<uint64_t>(n_vars)));
    while (i2 == i1);
    do i3 = static_cast<int>(rng.below(static_cast<uint64_t>(n_vars)));
    while (i3 == i1 || i3 == i2);
    Elem c = g.mul(g.mul(sigma[i1], sigma[i2]), sigma[i3]);
    inst.constraints.push_back({i1, i2, i3, c});
  }
  return {std::move(inst), std::move(sigma)};
}

Max3LinInstance random_instance(const Group& g, int n_vars, int m,
                                uint64_t seed) {
  if (n_vars < 3) throw Error(ErrorCode::ParameterOutOfRange, "need n_vars >= 3");
  Rng rng(derive_seed(seed, "random-3lin"));
  Max3LinInstance inst;
  inst.group = &g;
  inst.n_vars = n_vars;
  inst.constraints.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    int i1 = static_cast<int>(rng.below(static_cast<uint64_t>(n_vars)));
    int i2, i3;
    do i2 = static_cast<int>(rng.below(static_cast<uint64_t>(n_vars)));
    while (i2 == i1);
    do i3 = static_cast<int>(rng.below(static_cast<uint64_t>(n_vars)));
    while (i3 == i1 || i3 == i2);
    Elem c = static_cast<Elem>(rng.below(static_cast<uint64_t>(g.order())));
    inst.constraints.push_back({i1, i2, i3, c});
  }
  return inst;
}

}  // namespace ufg3lin
