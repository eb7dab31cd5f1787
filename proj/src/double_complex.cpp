#include "meroc/double_complex.hpp"

#include <sstream>

#include "meroc/errors.hpp"

namespace meroc {

Polynomial CorrelationGCochain::value(const std::vector<Polynomial>& elems,
                                      const std::vector<GCochain::InsertionPoint>& points,
                                      int out_vars) const {
  if (static_cast<int>(elems.size()) != l_ ||
      static_cast<int>(points.size()) != l_)
    throw ValidationError("cochain arity mismatch in evaluation");
  const int nv = out_vars + 1;  // var 0 = t, vars 1..out_vars = y's
  Polynomial::Exponents te(nv, 0);
  te[0] = r_;
  Polynomial acc = Polynomial::monomial(nv, te, Rational(1));
  Polynomial t = Polynomial::variable(nv, 0);
  for (int i = 0; i < l_; ++i) {
    if (elems[i].nvars() != nv)
      throw ValidationError("slot element lives in the wrong ring");
    Polynomial point = points[i].is_var
                           ? Polynomial::variable(nv, points[i].var)
                           : Polynomial::constant(nv, points[i].c);
    acc *= elems[i].substitute(0, t + point);
  }
  return acc;
}

namespace {

Polynomial basis_elem(int nv, int degree) {
  Polynomial::Exponents e(nv, 0);
  e[0] = degree;
  return Polynomial::monomial(nv, e, Rational(1));
}

std::vector<std::vector<int>> tuples_up_to(int degree_bound, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= degree_bound; ++a) {
      cur[pos] = a;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

// Value of the full three-term coboundary applied to F on the given output
// tuple; the result lives in (t, y_1..y_{l+1}).
Polynomial coboundary_value(const GCochain& f, const std::vector<int>& tuple,
                            const std::vector<Rational>& zetas,
                            const DoubleComplexOptions& opts) {
  const int l = f.arity();
  const int out_vars = l + 1;
  const int nv = out_vars + 1;
  auto w_w = opts.w_w_hook ? opts.w_w_hook
                           : [](const Polynomial& p) { return p; };
  auto w_v = opts.w_v_hook ? opts.w_v_hook
                           : [](const Polynomial& p) { return p; };
  Polynomial t = Polynomial::variable(nv, 0);
  auto yvar = [&](int i) { return Polynomial::variable(nv, i); };

  Polynomial acc(nv);

  // Leading term: W_W(x_1) acting on the value of F(x_2..x_{l+1}).
  {
    std::vector<Polynomial> elems;
    std::vector<GCochain::InsertionPoint> points;
    for (int j = 2; j <= l + 1; ++j) {
      elems.push_back(basis_elem(nv, tuple[j - 1]));
      points.push_back(GCochain::InsertionPoint::at_var(j));
    }
    Polynomial val = f.value(elems, points, out_vars);
    Polynomial ins = w_w(basis_elem(nv, tuple[0])).substitute(0, t + yvar(1));
    acc += ins * val;
  }

  // Middle terms: fuse (x_i, x_{i+1}) at zeta_i, sign (-1)^i.
  for (int i = 1; i <= l; ++i) {
    const Rational& zeta = zetas[i - 1];
    Polynomial hi = w_v(basis_elem(nv, tuple[i - 1]))
                        .substitute(0, t + yvar(i) - Polynomial::constant(nv, zeta));
    Polynomial hj = w_v(basis_elem(nv, tuple[i]))
                        .substitute(0, t + yvar(i + 1) - Polynomial::constant(nv, zeta));
    Polynomial fused = hi * hj;
    std::vector<Polynomial> elems;
    std::vector<GCochain::InsertionPoint> points;
    for (int j = 1; j <= i - 1; ++j) {
      elems.push_back(basis_elem(nv, tuple[j - 1]));
      points.push_back(GCochain::InsertionPoint::at_var(j));
    }
    elems.push_back(fused);
    points.push_back(GCochain::InsertionPoint::at_const(zeta));
    for (int j = i + 2; j <= l + 1; ++j) {
      elems.push_back(basis_elem(nv, tuple[j - 1]));
      points.push_back(GCochain::InsertionPoint::at_var(j));
    }
    Polynomial val = f.value(elems, points, out_vars);
    acc += i % 2 == 0 ? val : -val;
  }

  // Trailing term: W_W(x_{l+1}) at the end, sign (-1)^{l+1}.
  {
    std::vector<Polynomial> elems;
    std::vector<GCochain::InsertionPoint> points;
    for (int j = 1; j <= l; ++j) {
      elems.push_back(basis_elem(nv, tuple[j - 1]));
      points.push_back(GCochain::InsertionPoint::at_var(j));
    }
    Polynomial val = f.value(elems, points, out_vars);
    Polynomial ins =
        w_w(basis_elem(nv, tuple[l])).substitute(0, t + yvar(l + 1));
    Polynomial term = ins * val;
    acc += (l + 1) % 2 == 0 ? term : -term;
  }

  return acc;
}

std::vector<Rational> default_zetas(int l) {
  std::vector<Rational> z;
  for (int i = 1; i <= l; ++i) z.emplace_back(i, l + 2);
  return z;
}

}  // namespace

void verify_model_axioms(const ModelAlgebra& model) {
  model.validate();
  // T-derivative property of the built-in admissible family.
  for (int s = 0; s <= std::min(model.degree_bound, 2); ++s) {
    CheckReport rep = check_tg_property(correlation_cochain(model.degree_bound, 1, s));
    if (!rep.pass)
      throw ValidationError("model fails the T-derivative axiom: " +
                            rep.violations.front());
  }
  // Fusion must recombine independently of zeta.
  Polynomial g1 = Polynomial::variable(1, 0);
  Polynomial g2 = Polynomial::variable(1, 0).pow(
      static_cast<unsigned>(std::max(1, model.degree_bound - 1)));
  FusionResult a = fusion_expand(model, g1, g2, Rational(1, 3), model.degree_bound);
  FusionResult b = fusion_expand(model, g1, g2, Rational(2, 5), model.degree_bound);
  if (a.recombined != b.recombined)
    throw ValidationError("model fusion is not zeta-independent");
}

MatQ assemble_coboundary(const ModelAlgebra& model, int l,
                         const DoubleComplexOptions& opts) {
  const int d = model.degree_bound;
  const long n = d + 1;
  std::vector<Rational> zetas =
      opts.zetas.empty() ? default_zetas(l) : opts.zetas;
  if (static_cast<int>(zetas.size()) < l)
    throw ValidationError("need one zeta per middle term");
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (zetas[i] == zetas[j])
        throw ValidationError("zeta parameters must be distinct");

  const int ring_vars = l + 2;  // target value ring: t, y_1..y_{l+1}
  std::vector<std::vector<int>> out_tuples = tuples_up_to(d, l + 1);

  MatQ m = MatQ::Constant(n, n, Rational(0));
  for (long b = 0; b < n; ++b) {
    CorrelationGCochain f(l, static_cast<int>(b));
    // Coordinates in the target basis from the all-vacuum tuple, where
    // Phi_r evaluates to t^r.
    std::vector<int> vacuum(l + 1, 0);
    Polynomial at_vacuum = coboundary_value(f, vacuum, zetas, opts);
    std::vector<Rational> coords(n, Rational(0));
    for (const auto& [e, c] : at_vacuum.terms()) {
      bool only_t = true;
      for (size_t i = 1; i < e.size(); ++i)
        if (e[i] != 0) only_t = false;
      if (!only_t || e[0] > d)
        throw ConsistencyError(
            "coboundary image leaves the enumerated admissible span");
      coords[e[0]] = c;
    }
    // Symbolic verification on every tuple.
    for (const auto& tuple : out_tuples) {
      Polynomial got = coboundary_value(f, tuple, zetas, opts);
      Polynomial want(ring_vars);
      for (long r = 0; r < n; ++r) {
        if (coords[r].is_zero()) continue;
        CorrelationGCochain phi(l + 1, static_cast<int>(r));
        std::vector<Polynomial> elems;
        std::vector<GCochain::InsertionPoint> points;
        for (int j = 1; j <= l + 1; ++j) {
          Polynomial::Exponents e(ring_vars, 0);
          e[0] = tuple[j - 1];
          elems.push_back(Polynomial::monomial(ring_vars, e, Rational(1)));
          points.push_back(GCochain::InsertionPoint::at_var(j));
        }
        want += phi.value(elems, points, l + 1) * coords[r];
      }
      if (got != want)
        throw ConsistencyError(
            "coboundary image is not spanned by the admissible basis");
    }
    for (long r = 0; r < n; ++r) m(r, b) = coords[r];
  }
  return m;
}

DoubleComplexResult build_double_complex(const ModelAlgebra& model,
                                         const DoubleComplexOptions& opts) {
  if (opts.l_max < 1 || opts.k_max < 1)
    throw DomainError("double complex needs l_max >= 1 and k_max >= 1");
  verify_model_axioms(model);
  DoubleComplexResult out;
  out.cell_dim = model.degree_bound + 1;
  for (int l = 0; l <= opts.l_max + 1; ++l)
    for (int k = 0; k <= opts.k_max; ++k)
      out.complex.set_space(l, k, out.cell_dim);
  for (int l = 0; l <= opts.l_max; ++l) {
    MatQ m = assemble_coboundary(model, l, opts);
    for (int k = 1; k <= opts.k_max; ++k) out.complex.set_map(l, k, m);
  }
  return out;
}

}  // namespace meroc
