#include "meroc/model.hpp"

#include <functional>
#include <sstream>

#include "meroc/errors.hpp"
#include "meroc/linalg.hpp"

namespace meroc {

MatQ ModelAlgebra::k_matrix() const {
  MatQ k = MatQ::Constant(dim(), dim(), Rational(0));
  for (int a = 0; a <= degree_bound; ++a) k(a, a) = Rational(a);
  return k;
}

MatQ ModelAlgebra::t_matrix() const {
  MatQ t = MatQ::Constant(dim(), dim(), Rational(0));
  for (int a = 1; a <= degree_bound; ++a) t(a - 1, a) = Rational(a);
  return t;
}

void ModelAlgebra::validate() const {
  if (degree_bound < 1) throw ValidationError("degree bound must be >= 1");
  MatQ k = k_matrix();
  MatQ t = t_matrix();
  MatQ comm = k * t - t * k;
  if (!is_zero_matrix(MatQ(comm + t)))
    throw ValidationError("[K, T] != -T in the model algebra");
}

Polynomial apply_insertion(const ModelAlgebra& model, const Polynomial& g,
                           int z_var, const Polynomial& target) {
  if (g.nvars() != 1)
    throw ValidationError("insertion element must be univariate in t");
  const int nv = target.nvars();
  if (z_var < 1 || z_var >= nv)
    throw ValidationError("insertion variable out of range");
  Polynomial gt = g.embed_vars(nv, {0});
  Polynomial shifted = gt.substitute(
      0, Polynomial::variable(nv, 0) + Polynomial::variable(nv, z_var));
  Polynomial prod = shifted * target;
  // Truncate to the model's degree bound in t.
  Polynomial out(nv);
  for (const auto& [e, c] : prod.terms())
    if (e[0] <= model.degree_bound) out.add_term(e, c);
  return out;
}

Cochain::Cochain(int l, int k, int degree_bound)
    : l_(l), k_(k), degree_bound_(degree_bound),
      beta_default_(degree_bound + 1), zero_(l) {
  if (l < 1) throw ValidationError("cochain needs l >= 1 points");
  if (k < 0) throw ValidationError("cochain depth k must be >= 0");
  if (degree_bound < 0) throw ValidationError("degree bound must be >= 0");
}

void Cochain::set_value(const std::vector<int>& tuple, RationalFunction v) {
  if (static_cast<int>(tuple.size()) != l_)
    throw ValidationError("tuple arity mismatch");
  for (int a : tuple)
    if (a < 0 || a > degree_bound_)
      throw ValidationError("tuple degree outside the basis");
  if (v.arity() != l_)
    throw ValidationError("value arity mismatch");
  if (v.is_zero())
    values_.erase(tuple);
  else
    values_[tuple] = std::move(v);
}

const RationalFunction& Cochain::value(const std::vector<int>& tuple) const {
  auto it = values_.find(tuple);
  return it == values_.end() ? zero_ : it->second;
}

void Cochain::set_beta(int deg_a, int deg_b, int bound) {
  if (deg_a > deg_b) std::swap(deg_a, deg_b);
  beta_[{deg_a, deg_b}] = bound;
}

int Cochain::beta(int deg_a, int deg_b) const {
  if (deg_a > deg_b) std::swap(deg_a, deg_b);
  auto it = beta_.find({deg_a, deg_b});
  return it == beta_.end() ? beta_default_ : it->second;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (l_ != o.l_ || degree_bound_ != o.degree_bound_)
    throw ValidationError("cochain shape mismatch");
  Cochain r = *this;
  for (const auto& [t, v] : o.values_) r.set_value(t, r.value(t) + v);
  return r;
}

Cochain Cochain::operator*(const Rational& s) const {
  Cochain r(l_, k_, degree_bound_);
  r.beta_ = beta_;
  r.beta_default_ = beta_default_;
  if (s.is_zero()) return r;
  for (const auto& [t, v] : values_) r.values_[t] = v * s;
  return r;
}

bool Cochain::operator==(const Cochain& o) const {
  return l_ == o.l_ && degree_bound_ == o.degree_bound_ && values_ == o.values_;
}

std::vector<std::vector<int>> Cochain::all_tuples() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(l_, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == l_) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= degree_bound_; ++a) {
      cur[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << "t^" << t[i];
  os << ")";
  return os.str();
}

}  // namespace

CheckReport check_tg_property(const Cochain& f) {
  CheckReport rep;
  for (const auto& tuple : f.all_tuples()) {
    RationalFunction total_lhs(f.l());
    RationalFunction total_rhs(f.l());
    for (int i = 1; i <= f.l(); ++i) {
      RationalFunction lhs = f.value(tuple).derivative(i);
      RationalFunction rhs(f.l());
      if (tuple[i - 1] > 0) {
        std::vector<int> lowered = tuple;
        lowered[i - 1] -= 1;
        rhs = f.value(lowered) * Rational(tuple[i - 1]);
      }
      if (lhs != rhs) {
        rep.pass = false;
        rep.violations.push_back("slot " + std::to_string(i) + " at " +
                                 tuple_str(tuple));
      }
      total_lhs += lhs;
      total_rhs += rhs;
    }
    if (total_lhs != total_rhs) {
      rep.pass = false;
      rep.violations.push_back("summed derivative at " + tuple_str(tuple));
    }
  }
  return rep;
}

KgReport check_kg_property(const Cochain& f, int w) {
  KgReport rep;
  for (const auto& tuple : f.all_tuples()) {
    const RationalFunction& v = f.value(tuple);
    if (v.is_zero()) continue;
    std::optional<int> deg = v.homogeneous_degree();
    if (!deg) {
      rep.pass = false;
      rep.violations.push_back("inhomogeneous value at " + tuple_str(tuple));
      continue;
    }
    int total = *deg;
    for (int a : tuple) total += a;
    rep.weights_seen.insert(total);
    if (total != w) {
      rep.pass = false;
      rep.violations.push_back("weight " + std::to_string(total) + " != " +
                               std::to_string(w) + " at " + tuple_str(tuple));
    }
  }
  return rep;
}

namespace {

// All sigma in S_m with sigma(1) < ... < sigma(p) and
// sigma(p+1) < ... < sigma(m); 1-based images.
std::vector<std::vector<int>> shuffles(int m, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> first;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(first.size()) == p) {
      std::vector<int> sigma(m + 1, 0);
      std::vector<bool> used(m + 1, false);
      for (int i = 0; i < p; ++i) {
        sigma[i + 1] = first[i];
        used[first[i]] = true;
      }
      int next = p + 1;
      for (int v = 1; v <= m; ++v)
        if (!used[v]) sigma[next++] = v;
      out.push_back(sigma);
      return;
    }
    for (int v = start; v <= m; ++v) {
      first.push_back(v);
      rec(v + 1);
      first.pop_back();
    }
  };
  rec(1);
  return out;
}

int permutation_sign(const std::vector<int>& sigma_1based) {
  int m = static_cast<int>(sigma_1based.size()) - 1;
  int inv = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (sigma_1based[i] > sigma_1based[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

long shuffle_count(int m, int p) {
  return static_cast<long>(shuffles(m, p).size());
}

Cochain shuffle_sum(const Cochain& f, int p) {
  if (p < 1 || p > f.l() - 1)
    throw DomainError("shuffle parameter must satisfy 1 <= p <= l-1");
  const int l = f.l();
  Cochain acc(l, f.k(), f.degree_bound());
  for (const auto& sigma : shuffles(l, p)) {
    // Act with the inverse shuffle: (tau F)(x_1..x_l) = F(x_tau(1)..x_tau(l)).
    std::vector<int> tau(l + 1, 0);
    for (int i = 1; i <= l; ++i) tau[sigma[i]] = i;
    Rational sgn(permutation_sign(sigma));
    Cochain term(l, f.k(), f.degree_bound());
    for (const auto& tuple : f.all_tuples()) {
      std::vector<int> permuted(l);
      for (int i = 1; i <= l; ++i) permuted[i - 1] = tuple[tau[i] - 1];
      const RationalFunction& v = f.value(permuted);
      if (v.is_zero()) continue;
      // Variables move with the slots: old variable y_i becomes z_tau(i).
      std::vector<int> var_perm(l);
      for (int i = 1; i <= l; ++i) var_perm[i - 1] = tau[i];
      term.set_value(tuple, v.permute(var_perm) * sgn);
    }
    acc = acc + term;
  }
  return acc;
}

CheckReport check_pole_bounds(const Cochain& f) {
  CheckReport rep;
  for (const auto& tuple : f.all_tuples()) {
    const RationalFunction& v = f.value(tuple);
    if (v.is_zero()) continue;
    for (int i = 1; i <= f.l(); ++i) {
      for (int j = i + 1; j <= f.l(); ++j) {
        int actual = v.pole_order(i, j);
        int bound = f.beta(tuple[i - 1], tuple[j - 1]);
        if (actual > bound) {
          rep.pass = false;
          std::ostringstream os;
          os << "pole order " << actual << " > beta " << bound << " at pair ("
             << i << "," << j << ") on " << tuple_str(tuple);
          rep.violations.push_back(os.str());
        }
      }
    }
  }
  return rep;
}

FusionResult fusion_expand(const ModelAlgebra& model, const Polynomial& g1,
                           const Polynomial& g2, const Rational& zeta,
                           int cutoff) {
  if (g1.nvars() != 1 || g2.nvars() != 1)
    throw ValidationError("fusion inputs must be univariate in t");
  if (cutoff > model.degree_bound)
    throw DomainError("fusion cutoff exceeds the model degree bound");
  // Ring (t, z1, z2).
  const int nv = 3;
  Polynomial a = g1.embed_vars(nv, {0});
  Polynomial b = g2.embed_vars(nv, {0});
  Polynomial t = Polynomial::variable(nv, 0);
  Polynomial z1 = Polynomial::variable(nv, 1);
  Polynomial z2 = Polynomial::variable(nv, 2);
  Polynomial zc = Polynomial::constant(nv, zeta);
  Polynomial prod = a.substitute(0, t + z1 - zc) * b.substitute(0, t + z2 - zc);
  int tdeg = prod.degree_in(0);
  if (tdeg > cutoff)
    throw TruncationError("fusion degree " + std::to_string(tdeg) +
                          " exceeds cutoff " + std::to_string(cutoff));
  FusionResult out;
  out.components.assign(std::max(tdeg + 1, 1), Polynomial(2));
  for (const auto& [e, c] : prod.terms()) {
    Polynomial::Exponents ze{e[1], e[2]};
    out.components[e[0]].add_term(ze, c);
  }
  out.recombined = prod.shift_var(0, zeta);
  return out;
}

Cochain correlation_cochain(int degree_bound, int l, int s) {
  if (s < 0 || s > degree_bound)
    throw DomainError("theta index outside the dual basis");
  Cochain f(l, 0, degree_bound);
  const int nv = l + 1;  // (t, z_1..z_l)
  for (const auto& tuple : f.all_tuples()) {
    Polynomial prod = Polynomial::constant(nv, Rational(1));
    for (int i = 0; i < l; ++i) {
      Polynomial factor = Polynomial::variable(nv, 0) +
                          Polynomial::variable(nv, i + 1);
      prod *= factor.pow(static_cast<unsigned>(tuple[i]));
    }
    // Coefficient of t^s, as a polynomial in the z's.
    Polynomial val(l);
    for (const auto& [e, c] : prod.terms()) {
      if (e[0] != s) continue;
      Polynomial::Exponents ze(e.begin() + 1, e.end());
      val.add_term(ze, c);
    }
    f.set_value(tuple, RationalFunction::from_polynomial(val));
  }
  return f;
}

Cochain kernel_cochain(int degree_bound) {
  Cochain f(1, 0, degree_bound);
  for (int a = 0; a <= degree_bound; ++a) {
    RationalFunction v = RationalFunction::pole(1, 0, 1, a + 1);
    f.set_value({a}, v);
  }
  return f;
}

}  // namespace meroc
