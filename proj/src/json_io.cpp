#include "meroc/json_io.hpp"

#include <sstream>

namespace meroc {

namespace {

std::string int_key(int n) { return std::to_string(n); }

}  // namespace

Json qseries_to_json(const QSeries& s) {
  Json coeffs = Json::object();
  for (const auto& [n, c] : s.coefficients()) coeffs[int_key(n)] = c.str();
  Json j;
  j["coefficients"] = coeffs;
  if (s.truncation_order() != kExactOrder)
    j["truncation_order"] = s.truncation_order();
  else
    j["truncation_order"] = "exact";
  return j;
}

QSeries qseries_from_json(const Json& j) {
  int order = kExactOrder;
  if (j.contains("truncation_order") && j["truncation_order"].is_number())
    order = j["truncation_order"].get<int>();
  QSeries s = order == kExactOrder ? QSeries() : QSeries::zero(order);
  if (j.contains("coefficients"))
    for (const auto& [key, val] : j["coefficients"].items())
      s.set_coeff(std::stoi(key), Rational::parse(val.get<std::string>()));
  return s;
}

Json pk_to_json(const PkExpansion& p) {
  Json j;
  j["k"] = p.k;
  if (p.has_log) j["log_coefficient"] = p.log_coeff.str();
  j["lowest_order"] = p.z.lowest_order();
  j["z_truncation_order"] = p.z.truncation_order();
  Json zc = Json::object();
  for (const auto& [n, c] : p.z.coefficients())
    zc[int_key(n)] = qseries_to_json(c)["coefficients"];
  j["z_coefficients"] = zc;
  return j;
}

Json weight_value_to_json(const WeightValue& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms()) {
    Json t;
    t["eps1_exponent_doubled"] = k.eps1_doubled;
    t["eps2_exponent_doubled"] = k.eps2_doubled;
    t["root"] = k.root;
    Json coeffs = Json::object();
    for (const auto& [e, x] : c.coefficients()) {
      coeffs[int_key(e.first) + "," + int_key(e.second)] = x.str();
    }
    t["coefficients"] = coeffs;
    t["trunc_q1"] = c.trunc1() == kExactOrder ? Json("exact") : Json(c.trunc1());
    t["trunc_q2"] = c.trunc2() == kExactOrder ? Json("exact") : Json(c.trunc2());
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

std::string weight_value_to_string(const WeightValue& v) {
  if (v.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "eps1^(" << k.eps1_doubled << "/2) eps2^(" << k.eps2_doubled
       << "/2) sqrt(" << k.root << ") * (";
    bool fc = true;
    for (const auto& [e, x] : c.coefficients()) {
      if (!fc) os << " + ";
      fc = false;
      os << x.str();
      if (e.first) os << " q1^" << e.first;
      if (e.second) os << " q2^" << e.second;
    }
    if (fc) os << "0";
    os << ")";
  }
  return os.str();
}

Json matq_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

MatQ matq_from_json(const Json& j, long rows, long cols) {
  if (!j.is_array() || static_cast<long>(j.size()) != rows)
    throw ValidationError("matrix JSON has wrong row count");
  MatQ m = MatQ::Constant(rows, cols, Rational(0));
  for (long r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<long>(j[r].size()) != cols)
      throw ValidationError("matrix JSON has wrong column count");
    for (long c = 0; c < cols; ++c)
      m(r, c) = Rational::parse(j[r][c].get<std::string>());
  }
  return m;
}

LieAlgebra lie_from_json(const Json& j) {
  if (!j.contains("dim")) throw ValidationError("Lie algebra JSON needs 'dim'");
  LieAlgebra g(j["dim"].get<int>());
  if (j.contains("brackets")) {
    for (const Json& b : j["brackets"]) {
      std::vector<Rational> coeffs;
      for (const Json& c : b["coeffs"])
        coeffs.push_back(Rational::parse(c.get<std::string>()));
      g.set_bracket(b["i"].get<int>(), b["j"].get<int>(), coeffs);
    }
  }
  if (j.contains("module")) {
    const Json& mj = j["module"];
    LieModule m;
    m.dim = mj["dim"].get<int>();
    for (const Json& a : mj["action"])
      m.action.push_back(matq_from_json(a, m.dim, m.dim));
    g.set_module(std::move(m));
  }
  g.validate();
  return g;
}

Json lie_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i) {
    for (int k = i + 1; k < g.dim(); ++k) {
      const std::vector<Rational>& br = g.bracket(i, k);
      bool nonzero = false;
      for (const Rational& c : br)
        if (!c.is_zero()) nonzero = true;
      if (!nonzero) continue;
      Json b;
      b["i"] = i;
      b["j"] = k;
      Json coeffs = Json::array();
      for (const Rational& c : br) coeffs.push_back(c.str());
      b["coeffs"] = coeffs;
      brackets.push_back(b);
    }
  }
  j["brackets"] = brackets;
  return j;
}

Nerve nerve_from_json(const Json& j) {
  if (!j.contains("facets")) throw ValidationError("nerve JSON needs 'facets'");
  std::vector<Face> facets;
  for (const Json& f : j["facets"]) {
    Face face;
    for (const Json& i : f) face.insert(i.get<int>());
    facets.push_back(face);
  }
  return Nerve(facets);
}

Cochain cochain_from_json(const Json& j) {
  Cochain f(j.at("l").get<int>(), j.value("k", 0),
            j.at("degree_bound").get<int>());
  if (j.contains("beta_default")) f.set_beta_default(j["beta_default"].get<int>());
  if (j.contains("beta"))
    for (const Json& b : j["beta"])
      f.set_beta(b["degrees"][0].get<int>(), b["degrees"][1].get<int>(),
                 b["bound"].get<int>());
  if (j.contains("values")) {
    for (const Json& v : j["values"]) {
      std::vector<int> tuple = v["tuple"].get<std::vector<int>>();
      Polynomial num(f.l());
      if (v.contains("numerator"))
        for (const Json& t : v["numerator"])
          num.add_term(t["exps"].get<std::vector<int>>(),
                       Rational::parse(t["coeff"].get<std::string>()));
      RationalFunction rf = RationalFunction::from_polynomial(num);
      if (v.contains("pole_orders")) {
        for (const Json& p : v["pole_orders"]) {
          int a = p["pair"][0].get<int>();
          int b = p["pair"][1].get<int>();
          rf = rf * RationalFunction::pole(f.l(), a, b, p["order"].get<int>());
        }
      }
      f.set_value(tuple, rf);
    }
  }
  return f;
}

Json cochain_to_json(const Cochain& f) {
  Json j;
  j["l"] = f.l();
  j["k"] = f.k();
  j["degree_bound"] = f.degree_bound();
  j["beta_default"] = f.beta_default();
  Json beta = Json::array();
  for (const auto& [pair, bound] : f.beta_table()) {
    Json b;
    b["degrees"] = {pair.first, pair.second};
    b["bound"] = bound;
    beta.push_back(b);
  }
  j["beta"] = beta;
  Json values = Json::array();
  for (const auto& tuple : f.all_tuples()) {
    const RationalFunction& v = f.value(tuple);
    if (v.is_zero()) continue;
    Json vj;
    vj["tuple"] = tuple;
    Json num = Json::array();
    for (const auto& [e, c] : v.numerator().terms()) {
      Json t;
      t["exps"] = e;
      t["coeff"] = c.str();
      num.push_back(t);
    }
    vj["numerator"] = num;
    Json poles = Json::array();
    for (const auto& [pair, order] : v.pole_orders()) {
      Json p;
      p["pair"] = {pair.first, pair.second};
      p["order"] = order;
      poles.push_back(p);
    }
    vj["pole_orders"] = poles;
    values.push_back(vj);
  }
  j["values"] = values;
  return j;
}

ChainComplex chain_complex_from_json(const Json& j) {
  ChainComplex c(j.value("direction", 1));
  if (!j.contains("spaces"))
    throw ValidationError("chain complex JSON needs 'spaces'");
  for (const auto& [key, val] : j["spaces"].items())
    c.set_space(std::stoi(key), val.get<long>());
  if (j.contains("differentials")) {
    for (const auto& [key, val] : j["differentials"].items()) {
      int d = std::stoi(key);
      c.set_differential(
          d, matq_from_json(val, c.dim(d + c.direction()), c.dim(d)));
    }
  }
  return c;
}

std::string fnv1a64_hex(const std::string& bytes) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace meroc
