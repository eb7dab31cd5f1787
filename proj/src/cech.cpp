#include "meroc/cech.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "meroc/errors.hpp"

namespace meroc {

namespace {

std::string face_str(const Face& f) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : f) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

bool is_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Nerve::Nerve(const std::vector<Face>& facets) {
  for (const Face& f : facets) {
    if (f.empty()) throw ValidationError("empty face in nerve input");
    // Downward closure: every nonempty subset is a face.
    std::vector<int> v(f.begin(), f.end());
    int n = static_cast<int>(v.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face sub;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.insert(v[i]);
      faces_.insert(sub);
    }
  }
  if (faces_.empty()) throw ValidationError("nerve has no faces");
}

std::set<int> Nerve::indices() const {
  std::set<int> out;
  for (const Face& f : faces_) out.insert(f.begin(), f.end());
  return out;
}

void CechCoefficients::set_space(const Face& f, long dim) {
  if (dim < 0) throw ValidationError("negative coefficient dimension");
  dims_[f] = dim;
}

void CechCoefficients::set_restriction(const Face& from, const Face& to, MatQ m) {
  if (!is_subset(from, to) || to.size() != from.size() + 1)
    throw ValidationError("restrictions are set on covering pairs only");
  if (m.rows() != dim(to) || m.cols() != dim(from))
    throw ValidationError("restriction matrix shape mismatch");
  res_[{from, to}] = std::move(m);
}

long CechCoefficients::dim(const Face& f) const {
  auto it = dims_.find(f);
  if (it == dims_.end())
    throw ValidationError("no coefficient space on face " + face_str(f));
  return it->second;
}

MatQ CechCoefficients::restriction(const Face& from, const Face& to) const {
  if (!is_subset(from, to))
    throw ValidationError("restriction requires a face inclusion");
  if (from == to) {
    MatQ id = MatQ::Constant(dim(from), dim(from), Rational(0));
    for (long i = 0; i < id.rows(); ++i) id(i, i) = Rational(1);
    return id;
  }
  // Walk one covering step at a time, adding the smallest missing index;
  // validate() guarantees path independence.
  Face cur = from;
  MatQ acc;
  bool have = false;
  for (int x : to) {
    if (cur.count(x)) continue;
    Face next = cur;
    next.insert(x);
    auto it = res_.find({cur, next});
    if (it == res_.end())
      throw ValidationError("missing restriction " + face_str(cur) + " -> " +
                            face_str(next));
    acc = have ? MatQ(it->second * acc) : it->second;
    have = true;
    cur = next;
  }
  return acc;
}

void CechCoefficients::set_algebra(const Face& f, std::vector<MatQ> mult,
                                   VecQ unit) {
  long d = dim(f);
  if (static_cast<long>(mult.size()) != d || unit.size() != d)
    throw ValidationError("algebra structure shape mismatch");
  for (const MatQ& m : mult)
    if (m.rows() != d || m.cols() != d)
      throw ValidationError("algebra multiplication matrix shape mismatch");
  mult_[f] = std::move(mult);
  unit_[f] = std::move(unit);
}

VecQ CechCoefficients::multiply(const Face& f, const VecQ& a, const VecQ& b) const {
  auto it = mult_.find(f);
  if (it == mult_.end())
    throw UnsupportedError("coefficients carry no algebra on face " + face_str(f));
  long d = dim(f);
  VecQ out = VecQ::Constant(d, Rational(0));
  for (long i = 0; i < d; ++i) {
    if (a(i).is_zero()) continue;
    out += a(i) * (it->second[i] * b);
  }
  return out;
}

VecQ CechCoefficients::unit(const Face& f) const {
  auto it = unit_.find(f);
  if (it == unit_.end())
    throw UnsupportedError("coefficients carry no unit on face " + face_str(f));
  return it->second;
}

void CechCoefficients::validate(const Nerve& nerve) const {
  // Every covering pair inside the nerve needs a restriction.
  for (const Face& f : nerve.faces()) {
    dim(f);
    for (const Face& g : nerve.faces()) {
      if (!is_subset(f, g) || g.size() != f.size() + 1) continue;
      if (!res_.count({f, g}))
        throw ValidationError("missing restriction " + face_str(f) + " -> " +
                              face_str(g));
    }
  }
  // Functoriality: two-step paths agree for every inclusion f in g with
  // |g| = |f| + 2, over all intermediates.
  for (const Face& f : nerve.faces()) {
    for (const Face& g : nerve.faces()) {
      if (!is_subset(f, g) || g.size() != f.size() + 2) continue;
      std::vector<MatQ> composites;
      for (int x : g) {
        if (f.count(x)) continue;
        Face mid = f;
        mid.insert(x);
        if (!nerve.contains(mid)) continue;
        composites.push_back(res_.at({mid, g}) * res_.at({f, mid}));
      }
      for (size_t i = 1; i < composites.size(); ++i) {
        if (!is_zero_matrix(MatQ(composites[i] - composites[0]))) {
          throw ValidationError("non-functorial restrictions on triangle " +
                                face_str(f) + " -> " + face_str(g));
        }
      }
    }
  }
  if (!mult_.empty()) {
    for (const Face& f : nerve.faces()) {
      if (!mult_.count(f) || !unit_.count(f))
        throw ValidationError("algebra structure missing on face " + face_str(f));
      long d = dim(f);
      auto basis = [&](long i) {
        VecQ e = VecQ::Constant(d, Rational(0));
        e(i) = Rational(1);
        return e;
      };
      for (long i = 0; i < d; ++i) {
        VecQ ei = basis(i);
        if (!is_zero_matrix(MatQ(multiply(f, unit(f), ei) - ei)) ||
            !is_zero_matrix(MatQ(multiply(f, ei, unit(f)) - ei)))
          throw ValidationError("unit law fails on face " + face_str(f));
        for (long j = 0; j < d; ++j)
          for (long k = 0; k < d; ++k) {
            VecQ lhs = multiply(f, multiply(f, ei, basis(j)), basis(k));
            VecQ rhs = multiply(f, ei, multiply(f, basis(j), basis(k)));
            if (!is_zero_matrix(MatQ(lhs - rhs)))
              throw ValidationError("algebra not associative on face " +
                                    face_str(f));
          }
      }
      // Restrictions must be algebra morphisms on covering pairs.
      for (const Face& g : nerve.faces()) {
        if (!is_subset(f, g) || g.size() != f.size() + 1) continue;
        const MatQ& r = res_.at({f, g});
        for (long i = 0; i < d; ++i)
          for (long j = 0; j < d; ++j) {
            VecQ lhs = r * multiply(f, basis(i), basis(j));
            VecQ rhs = multiply(g, r * basis(i), r * basis(j));
            if (!is_zero_matrix(MatQ(lhs - rhs)))
              throw ValidationError("restriction is not an algebra map on " +
                                    face_str(f) + " -> " + face_str(g));
          }
        if (!is_zero_matrix(MatQ(r * unit(f) - unit(g))))
          throw ValidationError("restriction does not preserve the unit on " +
                                face_str(f) + " -> " + face_str(g));
      }
    }
  }
}

CechCoefficients CechCoefficients::constant(const Nerve& nerve, long dim) {
  CechCoefficients c;
  MatQ id = MatQ::Constant(dim, dim, Rational(0));
  for (long i = 0; i < dim; ++i) id(i, i) = Rational(1);
  for (const Face& f : nerve.faces()) c.set_space(f, dim);
  for (const Face& f : nerve.faces())
    for (const Face& g : nerve.faces())
      if (is_subset(f, g) && g.size() == f.size() + 1)
        c.set_restriction(f, g, id);
  // Componentwise algebra with unit (1,...,1).
  for (const Face& f : nerve.faces()) {
    std::vector<MatQ> mult;
    for (long i = 0; i < dim; ++i) {
      MatQ m = MatQ::Constant(dim, dim, Rational(0));
      m(i, i) = Rational(1);
      mult.push_back(m);
    }
    c.set_algebra(f, std::move(mult), VecQ::Constant(dim, Rational(1)));
  }
  return c;
}

namespace {

// Strict descending chains of nerve faces with k+1 entries.
std::vector<std::vector<Face>> descending_strings(const Nerve& nerve, int k) {
  std::vector<std::vector<Face>> out;
  std::vector<Face> all(nerve.faces().begin(), nerve.faces().end());
  std::vector<Face> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    for (const Face& f : all) {
      if (!cur.empty() &&
          !(f != cur.back() && is_subset(f, cur.back())))
        continue;
      cur.push_back(f);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CechComplex cech_complex(const Nerve& nerve, const CechCoefficients& coeffs,
                         CechConvention convention) {
  coeffs.validate(nerve);
  CechComplex cx;
  cx.convention = convention;
  cx.chain = ChainComplex(+1);

  if (convention == CechConvention::Strings) {
    int max_chain = 0;
    {
      // Poset height bounds the string length.
      size_t biggest = 0;
      for (const Face& f : nerve.faces()) biggest = std::max(biggest, f.size());
      max_chain = static_cast<int>(biggest);  // chains have <= biggest entries
    }
    std::map<int, std::map<std::vector<Face>, int>> index;
    for (int k = 0; k < max_chain; ++k) {
      cx.strings[k] = descending_strings(nerve, k);
      long off = 0;
      std::vector<long> offs;
      for (int i = 0; i < static_cast<int>(cx.strings[k].size()); ++i) {
        index[k][cx.strings[k][i]] = i;
        offs.push_back(off);
        off += coeffs.dim(cx.strings[k][i].front());
      }
      cx.offsets[k] = offs;
      cx.chain.set_space(k, off);
    }
    for (int k = 0; k + 1 < max_chain; ++k) {
      long rows = cx.chain.dim(k + 1);
      long cols = cx.chain.dim(k);
      MatQ d = MatQ::Constant(rows, cols, Rational(0));
      for (int t = 0; t < static_cast<int>(cx.strings[k + 1].size()); ++t) {
        const std::vector<Face>& s = cx.strings[k + 1][t];
        long row0 = cx.offsets[k + 1][t];
        for (int i = 0; i <= k + 1; ++i) {
          std::vector<Face> sub;
          for (int j = 0; j <= k + 1; ++j)
            if (j != i) sub.push_back(s[j]);
          // Dropping an inner entry composes the adjacent embeddings; the
          // result is a string on the same nerve.  Dropping the first entry
          // needs the pullback to V_{J_0}; dropping the last needs nothing.
          Rational sign(i % 2 == 0 ? 1 : -1);
          int src = index[k].at(sub);
          long col0 = cx.offsets[k][src];
          MatQ block;
          if (i == 0) {
            block = coeffs.restriction(s[1], s[0]);
          } else {
            long dsrc = coeffs.dim(sub.front());
            block = MatQ::Constant(dsrc, dsrc, Rational(0));
            for (long r = 0; r < dsrc; ++r) block(r, r) = Rational(1);
          }
          for (long r = 0; r < block.rows(); ++r)
            for (long c = 0; c < block.cols(); ++c)
              if (!block(r, c).is_zero()) d(row0 + r, col0 + c) += sign * block(r, c);
        }
      }
      cx.chain.set_differential(k, std::move(d));
    }
  } else {
    std::map<int, std::map<Face, int>> index;
    int max_deg = 0;
    for (const Face& f : nerve.faces())
      max_deg = std::max(max_deg, static_cast<int>(f.size()));
    for (int k = 0; k < max_deg; ++k) {
      std::vector<Face> simp;
      for (const Face& f : nerve.faces())
        if (static_cast<int>(f.size()) == k + 1) simp.push_back(f);
      std::sort(simp.begin(), simp.end());
      cx.simplices[k] = simp;
      long off = 0;
      std::vector<long> offs;
      for (int i = 0; i < static_cast<int>(simp.size()); ++i) {
        index[k][simp[i]] = i;
        offs.push_back(off);
        off += coeffs.dim(simp[i]);
      }
      cx.offsets[k] = offs;
      cx.chain.set_space(k, off);
    }
    for (int k = 0; k + 1 < max_deg; ++k) {
      long rows = cx.chain.dim(k + 1);
      long cols = cx.chain.dim(k);
      MatQ d = MatQ::Constant(rows, cols, Rational(0));
      for (int t = 0; t < static_cast<int>(cx.simplices[k + 1].size()); ++t) {
        const Face& f = cx.simplices[k + 1][t];
        long row0 = cx.offsets[k + 1][t];
        std::vector<int> verts(f.begin(), f.end());
        for (int j = 0; j <= k + 1; ++j) {
          Face sub = f;
          sub.erase(verts[j]);
          Rational sign(j % 2 == 0 ? 1 : -1);
          int src = index[k].at(sub);
          long col0 = cx.offsets[k][src];
          MatQ block = coeffs.restriction(sub, f);
          for (long r = 0; r < block.rows(); ++r)
            for (long c = 0; c < block.cols(); ++c)
              if (!block(r, c).is_zero()) d(row0 + r, col0 + c) += sign * block(r, c);
        }
      }
      cx.chain.set_differential(k, std::move(d));
    }
  }
  return cx;
}

VecQ cup_product(const CechComplex& cx, const CechCoefficients& coeffs,
                 int k, const VecQ& g1, int kp, const VecQ& g2) {
  if (cx.convention != CechConvention::Strings)
    throw UnsupportedError("cup product is defined on the string convention");
  if (!coeffs.has_algebra())
    throw UnsupportedError("cup product needs an algebra structure");
  auto g1k = cx.strings.find(k);
  auto g2k = cx.strings.find(kp);
  auto outk = cx.strings.find(k + kp);
  if (g1k == cx.strings.end() || g2k == cx.strings.end())
    throw ValidationError("cochain degree out of range");
  if (g1.size() != cx.chain.dim(k) || g2.size() != cx.chain.dim(kp))
    throw ValidationError("cochain vector has wrong dimension");
  long out_dim = outk == cx.strings.end() ? 0 : cx.chain.dim(k + kp);
  VecQ out = VecQ::Constant(out_dim, Rational(0));
  if (outk == cx.strings.end()) return out;

  std::map<std::vector<Face>, int> idx_k, idx_kp;
  for (int i = 0; i < static_cast<int>(g1k->second.size()); ++i)
    idx_k[g1k->second[i]] = i;
  for (int i = 0; i < static_cast<int>(g2k->second.size()); ++i)
    idx_kp[g2k->second[i]] = i;

  Rational sign((k * kp) % 2 == 0 ? 1 : -1);
  for (int t = 0; t < static_cast<int>(outk->second.size()); ++t) {
    const std::vector<Face>& s = outk->second[t];
    std::vector<Face> front(s.begin(), s.begin() + k + 1);
    std::vector<Face> back(s.begin() + k, s.end());
    int i1 = idx_k.at(front);
    int i2 = idx_kp.at(back);
    long d1 = coeffs.dim(front.front());
    long d2 = coeffs.dim(back.front());
    VecQ v1(d1), v2(d2);
    for (long r = 0; r < d1; ++r) v1(r) = g1(cx.block_offset(k, i1) + r);
    for (long r = 0; r < d2; ++r) v2(r) = g2(cx.block_offset(kp, i2) + r);
    // Pull the second factor back from V_{J_k} to V_{J_0}.
    VecQ v2_pulled = coeffs.restriction(back.front(), front.front()) * v2;
    VecQ prod = coeffs.multiply(front.front(), v1, v2_pulled);
    for (long r = 0; r < prod.rows(); ++r)
      out(cx.block_offset(k + kp, t) + r) += sign * prod(r);
  }
  return out;
}

}  // namespace meroc
