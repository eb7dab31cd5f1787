#include "meroc/necklace.hpp"

#include <cmath>
#include <thread>

#include "meroc/elliptic.hpp"

namespace meroc {

long long squarefree_part(long long n, long long* square) {
  if (n <= 0) throw DomainError("squarefree part needs n >= 1");
  long long sq = 1;
  long long rest = 1;
  for (long long d = 2; d * d <= n; ++d) {
    int mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    for (int i = 0; i < mult / 2; ++i) sq *= d;
    if (mult % 2 == 1) rest *= d;
  }
  rest *= n;  // leftover prime
  if (square) *square = sq;
  return rest;
}

WeightValue WeightValue::term(int eps1_doubled, int eps2_doubled,
                              long long root, BiQSeries coeff) {
  if (root <= 0) throw DomainError("root must be a positive integer");
  long long sq = 1;
  long long rest = squarefree_part(root, &sq);
  WeightValue v;
  BiQSeries c = coeff * Rational(sq);
  if (!c.is_exact_zero())
    v.terms_[Key{eps1_doubled, eps2_doubled, rest}] = c;
  return v;
}

bool WeightValue::is_exact_zero() const { return terms_.empty(); }

void WeightValue::add_term(const Key& k, const BiQSeries& c) {
  if (c.is_exact_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (it->second.is_exact_zero()) terms_.erase(it);
  }
}

WeightValue WeightValue::operator-() const {
  WeightValue r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

WeightValue WeightValue::operator+(const WeightValue& o) const {
  WeightValue r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

WeightValue WeightValue::operator*(const WeightValue& o) const {
  WeightValue r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // sqrt(u) sqrt(v) = s sqrt(w) with u v = s^2 w, w squarefree.
      long long sq = 1;
      long long w = squarefree_part(ka.root * kb.root, &sq);
      Key k{ka.eps1_doubled + kb.eps1_doubled,
            ka.eps2_doubled + kb.eps2_doubled, w};
      r.add_term(k, (ca * cb) * Rational(sq));
    }
  }
  return r;
}

bool WeightValue::agrees_with(const WeightValue& o, int n1, int n2) const {
  auto check = [&](const WeightValue& a, const WeightValue& b) {
    for (const auto& [k, c] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it == b.terms_.end()) {
        // Missing terms must vanish on the window.
        if (c.trunc1() < n1 || c.trunc2() < n2) return false;
        for (const auto& [e, x] : c.coefficients())
          if (e.first < n1 && e.second < n2 && !x.is_zero()) return false;
      } else if (!c.agrees_with(it->second, n1, n2)) {
        return false;
      }
    }
    return true;
  };
  return check(*this, o) && check(o, *this);
}

std::map<std::pair<int, long long>, QSeries> WeightValue::merge_parameters()
    const {
  std::map<std::pair<int, long long>, QSeries> out;
  for (const auto& [k, c] : terms_) {
    auto key = std::make_pair(k.eps1_doubled + k.eps2_doubled, k.root);
    QSeries merged = c.merge_variables();
    auto it = out.find(key);
    if (it == out.end())
      out[key] = merged;
    else
      it->second += merged;
  }
  return out;
}

Necklace Necklace::reversed() const {
  Necklace r;
  r.labels.assign(labels.rbegin(), labels.rend());
  r.first_edge = edges() == 0 ? first_edge : edge_label(edges() - 1);
  return r;
}

void Necklace::validate(int label_cutoff) const {
  if (labels.empty()) return;  // degenerate N_0
  if (nodes() < 2)
    throw ValidationError("a necklace needs m >= 2 nodes (or none)");
  if (first_edge != 1 && first_edge != 2)
    throw ValidationError("first edge label must be 1 or 2");
  for (int x : labels) {
    if (x < 1) throw ValidationError("node labels are positive integers");
    if (label_cutoff > 0 && x > label_cutoff)
      throw TruncationError("node label " + std::to_string(x) +
                            " exceeds the matrix truncation " +
                            std::to_string(label_cutoff));
  }
}

WMat amatrix_exact(int size, int edge_label, int q_order) {
  if (size < 1) throw DomainError("A-matrix size must be >= 1");
  if (edge_label != 1 && edge_label != 2)
    throw ValidationError("edge label must be 1 or 2");
  WMat a(size, size);
  for (int k = 1; k <= size; ++k) {
    for (int l = 1; l <= size; ++l) {
      QSeries c = c_coeff(k, l, q_order);
      BiQSeries cb = BiQSeries::from_qseries(c, edge_label);
      // eps^{(k+l)/2} / sqrt(kl): root pair for 1/sqrt(kl) is
      // sqrt(kl)/(kl) after rationalizing.
      long long kl = static_cast<long long>(k) * l;
      WeightValue entry = WeightValue::term(
          edge_label == 1 ? k + l : 0, edge_label == 2 ? k + l : 0, kl,
          cb * Rational(1, kl));
      a(k - 1, l - 1) = std::move(entry);
    }
  }
  return a;
}

CMat amatrix_numeric(int size, std::complex<double> tau,
                     std::complex<double> eps, int q_order) {
  if (size < 1) throw DomainError("A-matrix size must be >= 1");
  if (tau.imag() <= 0.0)
    throw DomainError("numeric A-matrix requires Im(tau) > 0");
  CMat a(size, size);
  for (int k = 1; k <= size; ++k) {
    for (int l = 1; l <= size; ++l) {
      Rational pre = cd_prefactor(k, l);
      std::complex<double> c =
          (k + l) % 2 == 0
              ? pre.to_double() * eisenstein_eval(k + l, tau, q_order).value
              : std::complex<double>(0.0, 0.0);
      std::complex<double> eps_pow = std::pow(eps, 0.5 * (k + l));
      a(k - 1, l - 1) = eps_pow / std::sqrt(static_cast<double>(k) * l) * c;
    }
  }
  return a;
}

void for_each_necklace(int m, int label_cutoff, int first_edge,
                       const std::function<void(const Necklace&)>& fn) {
  if (m < 2) throw DomainError("necklace enumeration needs m >= 2");
  if (label_cutoff < 1) throw DomainError("label cutoff must be >= 1");
  Necklace n;
  n.first_edge = first_edge;
  n.labels.assign(m, 1);
  while (true) {
    fn(n);
    int pos = m - 1;
    while (pos >= 0 && n.labels[pos] == label_cutoff) {
      n.labels[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    n.labels[pos] += 1;
  }
}

std::vector<Necklace> enumerate_necklaces(int m, int label_cutoff,
                                          int first_edge) {
  std::vector<Necklace> out;
  for_each_necklace(m, label_cutoff, first_edge,
                    [&](const Necklace& n) { out.push_back(n); });
  return out;
}

namespace {

// Weight sum over the index range [begin, end) of base-cutoff interior
// labelings.
WeightValue interior_range_sum(int m, int end_k, int end_l, int label_cutoff,
                               int first_edge, const WMat& a1, const WMat& a2,
                               long begin, long end) {
  WeightValue acc(0);
  Necklace n;
  n.first_edge = first_edge;
  n.labels.assign(m, 1);
  n.labels.front() = end_k;
  n.labels.back() = end_l;
  for (long idx = begin; idx < end; ++idx) {
    long rest = idx;
    for (int i = 0; i < m - 2; ++i) {
      n.labels[i + 1] = static_cast<int>(rest % label_cutoff) + 1;
      rest /= label_cutoff;
    }
    acc += necklace_weight(n, a1, a2);
  }
  return acc;
}

}  // namespace

ExactNecklaceSum necklace_sum_exact(int m, int end_k, int end_l,
                                    int label_cutoff, int first_edge,
                                    int q_order, int threads) {
  if (m < 2) throw DomainError("necklace sums need m >= 2");
  if (end_k < 1 || end_k > label_cutoff || end_l < 1 || end_l > label_cutoff)
    throw TruncationError("end labels must lie within the label cutoff");
  WMat a1 = amatrix_exact(label_cutoff, 1, q_order);
  WMat a2 = amatrix_exact(label_cutoff, 2, q_order);

  ExactNecklaceSum out;
  long total = 1;
  for (int i = 0; i < m - 2; ++i) total *= label_cutoff;
  WeightValue direct(0);
  if (threads <= 1 || total < 64) {
    direct = interior_range_sum(m, end_k, end_l, label_cutoff, first_edge, a1,
                                a2, 0, total);
  } else {
    long nworkers = std::min<long>(threads, total);
    std::vector<WeightValue> partial(nworkers);
    std::vector<std::thread> pool;
    for (long w = 0; w < nworkers; ++w) {
      long begin = total * w / nworkers;
      long end = total * (w + 1) / nworkers;
      pool.emplace_back([&, w, begin, end]() {
        partial[w] = interior_range_sum(m, end_k, end_l, label_cutoff,
                                        first_edge, a1, a2, begin, end);
      });
    }
    for (auto& t : pool) t.join();
    for (const WeightValue& p : partial) direct += p;
  }
  out.direct = std::move(direct);
  WMat prod = transfer_product(a1, a2, first_edge, m - 1);
  out.transfer = prod(end_k - 1, end_l - 1);
  out.equal = out.direct.agrees_with(out.transfer, q_order, q_order);
  if (!out.equal)
    throw ConsistencyError(
        "necklace sum: enumeration and transfer-matrix paths disagree");
  return out;
}

NumericNecklaceSum necklace_sum_numeric(int m, int end_k, int end_l,
                                        int label_cutoff, int first_edge,
                                        std::complex<double> tau1,
                                        std::complex<double> tau2,
                                        std::complex<double> eps1,
                                        std::complex<double> eps2,
                                        int q_order) {
  if (m < 2) throw DomainError("necklace sums need m >= 2");
  if (end_k < 1 || end_k > label_cutoff || end_l < 1 || end_l > label_cutoff)
    throw TruncationError("end labels must lie within the label cutoff");
  CMat a1 = amatrix_numeric(label_cutoff, tau1, eps1, q_order);
  CMat a2 = amatrix_numeric(label_cutoff, tau2, eps2, q_order);
  NumericNecklaceSum out;
  std::complex<double> direct(0.0, 0.0);
  Necklace n;
  n.first_edge = first_edge;
  n.labels.assign(m, 1);
  n.labels.front() = end_k;
  n.labels.back() = end_l;
  if (m == 2) {
    direct = necklace_weight(n, a1, a2);
  } else {
    std::vector<int> interior(m - 2, 1);
    while (true) {
      for (int i = 0; i < m - 2; ++i) n.labels[i + 1] = interior[i];
      direct += necklace_weight(n, a1, a2);
      int pos = m - 3;
      while (pos >= 0 && interior[pos] == label_cutoff) {
        interior[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      interior[pos] += 1;
    }
  }
  out.direct = direct;
  CMat prod = transfer_product(a1, a2, first_edge, m - 1);
  out.transfer = prod(end_k - 1, end_l - 1);
  double scale = std::max(1.0, std::abs(out.transfer));
  out.equal = std::abs(out.direct - out.transfer) <= 1e-9 * scale;
  if (!out.equal)
    throw ConsistencyError(
        "necklace sum: numeric enumeration and transfer paths disagree");
  return out;
}

}  // namespace meroc
