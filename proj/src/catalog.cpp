#include "ufg3lin/catalog.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace ufg3lin {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

GroupBundle make_cyclic(int n, const std::string& name) {
  std::vector<std::vector<Elem>> mult(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  GroupBundle bundle;
  bundle.group = std::make_unique<Group>(name, std::move(mult));

  std::vector<Irrep> irreps;
  for (int k = 0; k < n; ++k) {
    Irrep rho;
    rho.label = (k == 0) ? "triv" : (n == 2 ? "sign" : "chi" + std::to_string(k));
    rho.dim = 1;
    for (int a = 0; a < n; ++a) {
      Matrix m(1, 1);
      double theta = 2.0 * kPi * k * a / n;
      m(0, 0) = Cplx(std::cos(theta), std::sin(theta));
      rho.matrices.push_back(m);
    }
    irreps.push_back(std::move(rho));
  }
  bundle.catalog =
      std::make_unique<IrrepCatalog>(bundle.group.get(), std::move(irreps));
  return bundle;
}

using Perm = std::array<int, 3>;

Perm compose(const Perm& a, const Perm& b) {  // (a o b)(i) = a(b(i))
  return Perm{a[b[0]], a[b[1]], a[b[2]]};
}

GroupBundle make_s3() {
  const std::vector<Perm> elems = {
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123): 0->1, 1->2, 2->0
      {2, 0, 1},  // (132)
  };
  auto find = [&](const Perm& p) {
    for (int i = 0; i < 6; ++i)
      if (elems[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<Elem>> mult(6, std::vector<Elem>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) mult[a][b] = find(compose(elems[a], elems[b]));
  GroupBundle bundle;
  bundle.group = std::make_unique<Group>("S3", std::move(mult));

  std::vector<Irrep> irreps(3);
  irreps[0].label = "triv";
  irreps[0].dim = 1;
  irreps[1].label = "sign";
  irreps[1].dim = 1;
  irreps[2].label = "std";
  irreps[2].dim = 2;
  // Standard representation: permutation action restricted to the sum-zero
  // plane in the orthonormal basis u1 = (1,-1,0)/sqrt2, u2 = (1,1,-2)/sqrt6.
  const double u[2][3] = {
      {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
      {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)}};
  for (int g = 0; g < 6; ++g) {
    const Perm& p = elems[g];
    int sign = (g >= 1 && g <= 3) ? -1 : 1;  // transpositions are odd
    Matrix t(1, 1), s(1, 1), m(2, 2);
    t(0, 0) = 1.0;
    s(0, 0) = static_cast<double>(sign);
    // (P_g v)_i = v_{g^-1(i)}; entry (a,b) = <u_a, P_g u_b>.
    Perm pinv;
    for (int i = 0; i < 3; ++i) pinv[p[i]] = i;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double acc = 0;
        for (int i = 0; i < 3; ++i) acc += u[a][i] * u[b][pinv[i]];
        m(a, b) = acc;
      }
    irreps[0].matrices.push_back(t);
    irreps[1].matrices.push_back(s);
    irreps[2].matrices.push_back(m);
  }
  bundle.catalog =
      std::make_unique<IrrepCatalog>(bundle.group.get(), std::move(irreps));
  return bundle;
}

GroupBundle make_d4() {
  // Element index a*4 + k encodes s^a r^k.
  auto idx = [](int a, int k) { return a * 4 + ((k % 4) + 4) % 4; };
  std::vector<std::vector<Elem>> mult(8, std::vector<Elem>(8));
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 4; ++k)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int k2 = 0; k2 < 4; ++k2) {
          // s^a r^k s^a2 r^k2 = s^(a+a2) r^((-1)^a2 k + k2)
          int na = (a + a2) % 2;
          int nk = (a2 ? -k : k) + k2;
          mult[idx(a, k)][idx(a2, k2)] = idx(na, nk);
        }
  GroupBundle bundle;
  bundle.group = std::make_unique<Group>("D4", std::move(mult));

  std::vector<Irrep> irreps;
  for (int er = 0; er < 2; ++er)
    for (int es = 0; es < 2; ++es) {
      Irrep rho;
      rho.label = (er == 0 && es == 0) ? "triv"
                                       : "chi_r" + std::to_string(er) + "s" +
                                             std::to_string(es);
      rho.dim = 1;
      for (int a = 0; a < 2; ++a)
        for (int k = 0; k < 4; ++k) {
          Matrix m(1, 1);
          m(0, 0) = ((er && (k % 2)) ? -1.0 : 1.0) * ((es && a) ? -1.0 : 1.0);
          rho.matrices.push_back(m);
        }
      irreps.push_back(std::move(rho));
    }
  Irrep two;
  two.label = "std";
  two.dim = 2;
  Matrix r(2, 2), s(2, 2);
  r << 0, -1, 1, 0;
  s << 1, 0, 0, -1;
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 4; ++k) {
      Matrix m = Matrix::Identity(2, 2);
      if (a) m = s;
      for (int i = 0; i < k; ++i) m = m * r;
      two.matrices.push_back(m);
    }
  irreps.push_back(std::move(two));
  bundle.catalog =
      std::make_unique<IrrepCatalog>(bundle.group.get(), std::move(irreps));
  return bundle;
}

GroupBundle make_q8() {
  // 2-dim faithful realization; the mult table is read off matrix products.
  const Cplx I(0, 1);
  std::vector<Matrix> units(8, Matrix(2, 2));
  units[0] << 1, 0, 0, 1;    // 1
  units[2] << I, 0, 0, -I;   // i
  units[4] << 0, 1, -1, 0;   // j
  units[6] << 0, I, I, 0;    // k
  for (int e = 0; e < 8; e += 2) units[e + 1] = -units[e];
  auto find = [&](const Matrix& m) {
    for (int e = 0; e < 8; ++e)
      if ((units[e] - m).norm() < 1e-9) return e;
    return -1;
  };
  std::vector<std::vector<Elem>> mult(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) mult[a][b] = find(units[a] * units[b]);
  GroupBundle bundle;
  bundle.group = std::make_unique<Group>("Q8", std::move(mult));

  std::vector<Irrep> irreps;
  // One-dimensional irreps factor through Q8 / {±1}.
  const int axis_of[8] = {0, 0, 1, 1, 2, 2, 3, 3};  // 1, i, j, k classes
  for (int ei = 0; ei < 2; ++ei)
    for (int ej = 0; ej < 2; ++ej) {
      Irrep rho;
      rho.label = (ei == 0 && ej == 0)
                      ? "triv"
                      : "chi_i" + std::to_string(ei) + "j" + std::to_string(ej);
      rho.dim = 1;
      const double vals[4] = {1.0, ei ? -1.0 : 1.0, ej ? -1.0 : 1.0,
                              (ei ^ ej) ? -1.0 : 1.0};
      for (int e = 0; e < 8; ++e) {
        Matrix m(1, 1);
        m(0, 0) = vals[axis_of[e]];
        rho.matrices.push_back(m);
      }
      irreps.push_back(std::move(rho));
    }
  Irrep two;
  two.label = "std";
  two.dim = 2;
  two.matrices = units;
  irreps.push_back(std::move(two));
  bundle.catalog =
      std::make_unique<IrrepCatalog>(bundle.group.get(), std::move(irreps));
  return bundle;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8"};
}

GroupBundle builtin_group(const std::string& name) {
  if (name == "Z2") return make_cyclic(2, "Z2");
  if (name == "Z3") return make_cyclic(3, "Z3");
  if (name == "Z4") return make_cyclic(4, "Z4");
  if (name == "Z6") return make_cyclic(6, "Z6");
  if (name == "S3") return make_s3();
  if (name == "D4") return make_d4();
  if (name == "Q8") return make_q8();
  throw Error(ErrorCode::BadFile, "unknown builtin group " + name);
}

GroupBundle load_group(const std::string& json_text) {
  json doc = json::parse(json_text);
  int order = doc.at("order").get<int>();
  std::string name = doc.value("name", "unnamed");
  auto mult = doc.at("mult").get<std::vector<std::vector<Elem>>>();
  if (static_cast<int>(mult.size()) != order)
    throw Error(ErrorCode::BadFile, "order field does not match table");
  GroupBundle bundle;
  bundle.group = std::make_unique<Group>(name, std::move(mult));
  if (doc.contains("irreps")) {
    std::vector<Irrep> irreps;
    for (const json& jr : doc["irreps"]) {
      Irrep rho;
      rho.label = jr.at("label").get<std::string>();
      rho.dim = jr.at("dim").get<int>();
      for (const json& jm : jr.at("matrices")) {
        Matrix m(rho.dim, rho.dim);
        for (int i = 0; i < rho.dim; ++i)
          for (int j = 0; j < rho.dim; ++j) {
            const json& entry = jm.at(i).at(j);
            m(i, j) = Cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
          }
        rho.matrices.push_back(std::move(m));
      }
      irreps.push_back(std::move(rho));
    }
    bundle.catalog =
        std::make_unique<IrrepCatalog>(bundle.group.get(), std::move(irreps));
  }
  return bundle;
}

GroupBundle load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadFile, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_group(ss.str());
}

std::string group_to_json(const Group& g, const IrrepCatalog* cat) {
  json doc;
  doc["name"] = g.name();
  doc["order"] = g.order();
  doc["mult"] = g.mult_table();
  if (cat) {
    json irreps = json::array();
    for (const Irrep& rho : cat->irreps()) {
      json jr;
      jr["label"] = rho.label;
      jr["dim"] = rho.dim;
      json mats = json::array();
      for (const Matrix& m : rho.matrices) {
        json jm = json::array();
        for (int i = 0; i < rho.dim; ++i) {
          json row = json::array();
          for (int j = 0; j < rho.dim; ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
          jm.push_back(row);
        }
        mats.push_back(jm);
      }
      jr["matrices"] = mats;
      irreps.push_back(jr);
    }
    doc["irreps"] = irreps;
  }
  return doc.dump(2);
}

GroupBundle resolve_group(const std::string& name_or_path) {
  for (const std::string& n : builtin_names())
    if (n == name_or_path) return builtin_group(n);
  return load_group_file(name_or_path);
}

}  // namespace ufg3lin
