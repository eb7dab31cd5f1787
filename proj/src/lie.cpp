#include "meroc/lie.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "meroc/errors.hpp"

namespace meroc {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
  if (dim < 1) throw ValidationError("Lie algebra dimension must be >= 1");
  c_.assign(dim, std::vector<std::vector<Rational>>(
                     dim, std::vector<Rational>(dim, Rational(0))));
}

void LieAlgebra::set_bracket(int i, int j, const std::vector<Rational>& coeffs) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw ValidationError("bracket index out of range");
  if (static_cast<int>(coeffs.size()) != dim_)
    throw ValidationError("bracket coefficient vector has wrong length");
  if (i == j) {
    for (const auto& c : coeffs)
      if (!c.is_zero()) throw ValidationError("[x,x] must vanish");
    return;
  }
  for (int k = 0; k < dim_; ++k) {
    c_[i][j][k] = coeffs[k];
    c_[j][i][k] = -coeffs[k];
  }
}

const std::vector<Rational>& LieAlgebra::bracket(int i, int j) const {
  return c_[i][j];
}

void LieAlgebra::set_module(LieModule m) {
  if (static_cast<int>(m.action.size()) != dim_)
    throw ValidationError("module needs one action matrix per generator");
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim)
      throw ValidationError("module action matrix has wrong shape");
  module_ = std::move(m);
}

void LieAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c_[i][j][k] != -c_[j][i][k])
          throw ValidationError("structure constants are not antisymmetric");
  // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        std::vector<Rational> acc(dim_, Rational(0));
        auto add_term = [&](int a, int b, int c) {
          for (int m = 0; m < dim_; ++m)
            for (int r = 0; r < dim_; ++r)
              acc[r] += c_[a][b][m] * c_[m][c][r];
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (int r = 0; r < dim_; ++r)
          if (!acc[r].is_zero()) {
            std::ostringstream os;
            os << "Jacobi identity fails on (e" << i << ",e" << j << ",e" << k
               << ")";
            throw ValidationError(os.str());
          }
      }
    }
  }
  if (module_) {
    const LieModule& m = *module_;
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        MatQ lhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
        MatQ rhs = MatQ::Zero(m.dim, m.dim);
        for (int k = 0; k < dim_; ++k)
          if (!c_[i][j][k].is_zero()) rhs += m.action[k] * c_[i][j][k];
        if (!is_zero_matrix(MatQ(lhs - rhs)))
          throw ValidationError("module action does not respect the bracket");
      }
    }
  }
}

LieAlgebra LieAlgebra::abelian(int n) { return LieAlgebra(n); }

LieAlgebra LieAlgebra::heisenberg() {
  LieAlgebra g(3);
  g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
  return g;
}

LieAlgebra LieAlgebra::sl2() {
  // basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
  LieAlgebra g(3);
  g.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});
  g.set_bracket(2, 0, {Rational(2), Rational(0), Rational(0)});
  g.set_bracket(2, 1, {Rational(0), Rational(-2), Rational(0)});
  return g;
}

namespace {

using MultiDeg = std::vector<int>;

int total(const MultiDeg& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

// All multidegrees with total degree <= cutoff, graded-lexicographically.
std::vector<MultiDeg> pbw_basis(int n, int cutoff) {
  std::vector<MultiDeg> out;
  MultiDeg cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur[pos] = d;
      rec(pos + 1, left - d);
    }
    cur[pos] = 0;
  };
  rec(0, cutoff);
  return out;
}

// PBW straightening of a word of generator indices into ascending-order
// monomials; exact over Q.
void straighten(const LieAlgebra& g, std::vector<int> word, const Rational& c,
                std::map<MultiDeg, Rational>& out) {
  for (size_t t = 0; t + 1 < word.size(); ++t) {
    if (word[t] <= word[t + 1]) continue;
    int a = word[t];
    int b = word[t + 1];
    // e_a e_b = e_b e_a + [e_a, e_b]
    std::vector<int> swapped = word;
    std::swap(swapped[t], swapped[t + 1]);
    straighten(g, std::move(swapped), c, out);
    const std::vector<Rational>& br = g.bracket(a, b);
    for (int k = 0; k < g.dim(); ++k) {
      if (br[k].is_zero()) continue;
      std::vector<int> shorter;
      shorter.reserve(word.size() - 1);
      for (size_t s = 0; s < word.size(); ++s) {
        if (s == t) {
          shorter.push_back(k);
        } else if (s != t + 1) {
          shorter.push_back(word[s]);
        }
      }
      straighten(g, std::move(shorter), c * br[k], out);
    }
    return;
  }
  MultiDeg d(g.dim(), 0);
  for (int x : word) d[x] += 1;
  auto it = out.find(d);
  if (it == out.end()) {
    out[d] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

std::vector<int> monomial_word(const MultiDeg& d) {
  std::vector<int> w;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    for (int t = 0; t < d[i]; ++t) w.push_back(i);
  return w;
}

std::vector<std::vector<int>> subsets_of_size(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Sign and position of wedging e_k into the sorted set `rest`; nullopt when
// k already occurs.
std::optional<std::pair<std::vector<int>, int>> wedge_in(
    const std::vector<int>& rest, int k) {
  std::vector<int> merged;
  int before = 0;
  bool placed = false;
  for (int x : rest) {
    if (x == k) return std::nullopt;
    if (x < k) ++before;
  }
  merged.reserve(rest.size() + 1);
  for (int x : rest) {
    if (!placed && x > k) {
      merged.push_back(k);
      placed = true;
    }
    merged.push_back(x);
  }
  if (!placed) merged.push_back(k);
  return std::make_pair(merged, before % 2 == 0 ? 1 : -1);
}

}  // namespace

NilpotencyReport CEComplex::verify_nilpotency_windowed() const {
  NilpotencyReport rep;
  for (const auto& [p, m] : chain.differentials()) {
    if (!chain.has_differential(p - 1)) continue;
    if (!closed_degrees.count(p) || !closed_degrees.count(p - 1)) continue;
    MatQ comp = chain.differential(p - 1) * m;
    if (!is_zero_matrix(comp)) {
      std::ostringstream os;
      os << "d² != 0 at degree " << p << ", basis vector "
         << first_nonzero_column(comp);
      rep.ok = false;
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

CEComplex ce_complex(const LieAlgebra& g, const CEOptions& opts) {
  g.validate();
  if (opts.p_max < 0) throw ValidationError("p_max must be >= 0");
  if (opts.pbw_cutoff < 0) throw ValidationError("pbw_cutoff must be >= 0");
  if (opts.use_module && !g.module())
    throw ValidationError("no module attached to the Lie algebra");
  if (opts.use_module && opts.pbw_cutoff > 0)
    throw ValidationError("choose either module or PBW coefficients");

  const int n = g.dim();
  const bool pbw = opts.pbw_cutoff > 0;
  const int mdim = opts.use_module ? g.module()->dim : 1;

  std::vector<MultiDeg> umons =
      pbw ? pbw_basis(n, opts.pbw_cutoff) : std::vector<MultiDeg>{MultiDeg(n, 0)};
  std::map<MultiDeg, int> uindex;
  for (int i = 0; i < static_cast<int>(umons.size()); ++i) uindex[umons[i]] = i;
  const int udim = pbw ? static_cast<int>(umons.size()) : mdim;

  std::vector<std::vector<std::vector<int>>> wedges(opts.p_max + 1);
  std::vector<std::map<std::vector<int>, int>> windex(opts.p_max + 1);
  for (int p = 0; p <= opts.p_max; ++p) {
    wedges[p] = subsets_of_size(n, p);
    for (int i = 0; i < static_cast<int>(wedges[p].size()); ++i)
      windex[p][wedges[p][i]] = i;
  }

  CEComplex out;
  for (int p = 0; p <= opts.p_max; ++p)
    out.chain.set_space(p, static_cast<long>(udim) * wedges[p].size());

  auto column_index = [&](int u, int w, int p) {
    return static_cast<long>(u) * wedges[p].size() + w;
  };

  for (int p = 1; p <= opts.p_max; ++p) {
    const long rows = static_cast<long>(udim) * wedges[p - 1].size();
    const long cols = static_cast<long>(udim) * wedges[p].size();
    MatQ m = MatQ::Constant(rows, cols, Rational(0));
    bool closed = true;
    for (int w = 0; w < static_cast<int>(wedges[p].size()); ++w) {
      const std::vector<int>& S = wedges[p][w];
      for (int u = 0; u < udim; ++u) {
        long col = column_index(u, w, p);
        // First sum: coefficient action, sign (-1)^{i+1}.
        for (int i = 0; i < p; ++i) {
          std::vector<int> rest;
          for (int t = 0; t < p; ++t)
            if (t != i) rest.push_back(S[t]);
          int wrow = windex[p - 1][rest];
          Rational sign(i % 2 == 0 ? 1 : -1);
          if (opts.use_module) {
            // The displayed differential uses a right action; a left module
            // acts on homology chains through m.x = -rho(x) m.
            const MatQ& act = g.module()->action[S[i]];
            for (int r = 0; r < mdim; ++r) {
              if (act(r, u).is_zero()) continue;
              m(column_index(r, wrow, p - 1), col) -= sign * act(r, u);
            }
          } else if (pbw) {
            std::vector<int> word = monomial_word(umons[u]);
            word.push_back(S[i]);
            std::map<MultiDeg, Rational> prod;
            straighten(g, std::move(word), Rational(1), prod);
            for (const auto& [deg, coef] : prod) {
              if (total(deg) > opts.pbw_cutoff) {
                closed = false;  // term leaves the PBW window: dropped
                continue;
              }
              m(column_index(uindex[deg], wrow, p - 1), col) += sign * coef;
            }
          }
          // Trivial coefficients: the action is zero; nothing to add.
        }
        // Second sum: brackets, sign (-1)^{i+j} with 1-based i < j.
        for (int i = 0; i < p; ++i) {
          for (int j = i + 1; j < p; ++j) {
            std::vector<int> rest;
            for (int t = 0; t < p; ++t)
              if (t != i && t != j) rest.push_back(S[t]);
            // 1-based indices: (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
            Rational sign((i + j) % 2 == 0 ? 1 : -1);
            const std::vector<Rational>& br = g.bracket(S[i], S[j]);
            for (int k = 0; k < n; ++k) {
              if (br[k].is_zero()) continue;
              auto merged = wedge_in(rest, k);
              if (!merged) continue;
              int wrow = windex[p - 1][merged->first];
              m(column_index(u, wrow, p - 1), col) +=
                  sign * br[k] * Rational(merged->second);
            }
          }
        }
      }
    }
    out.chain.set_differential(p, std::move(m));
    if (closed) out.closed_degrees.insert(p);
  }
  // Degree 0 has no outgoing differential; call it closed for windowing.
  out.closed_degrees.insert(0);
  return out;
}

}  // namespace meroc
