#pragma once

#include <map>
#include <set>
#include <vector>

#include "meroc/chain_complex.hpp"

namespace meroc {

using Face = std::set<int>;

// Nerve of a covering: nonempty finite index subsets, closed under taking
// nonempty subsets.  Construction closes the input facet list downward.
class Nerve {
 public:
  explicit Nerve(const std::vector<Face>& facets);

  const std::set<Face>& faces() const { return faces_; }
  std::set<int> indices() const;
  bool contains(const Face& f) const { return faces_.count(f) > 0; }

 private:
  std::set<Face> faces_;
};

// Presheaf of finite-dimensional Q-spaces on a nerve.  Restriction matrices
// are given on covering pairs J -> J' (J a subset of J', one element
// smaller); longer restrictions are composed and must be path-independent.
// An optional per-face algebra structure enables the cup product.
class CechCoefficients {
 public:
  void set_space(const Face& f, long dim);
  // J proper subset of J', |J'| = |J| + 1; matrix V_J -> V_{J'}.
  void set_restriction(const Face& from, const Face& to, MatQ m);

  long dim(const Face& f) const;
  // Composed restriction V_from -> V_to for from subset of to.
  MatQ restriction(const Face& from, const Face& to) const;

  // Attach the componentwise algebra with the given structure: mult[i] is
  // the matrix of left multiplication by basis element i.
  void set_algebra(const Face& f, std::vector<MatQ> mult, VecQ unit);
  bool has_algebra() const { return !mult_.empty(); }
  VecQ multiply(const Face& f, const VecQ& a, const VecQ& b) const;
  VecQ unit(const Face& f) const;

  // Covering restrictions are present and functorial; with an algebra:
  // associativity, unit laws, and restrictions are algebra maps.  Throws
  // ValidationError naming the failing face triangle.
  void validate(const Nerve& nerve) const;

  static CechCoefficients constant(const Nerve& nerve, long dim = 1);

 private:
  std::map<Face, long> dims_;
  std::map<std::pair<Face, Face>, MatQ> res_;
  std::map<Face, std::vector<MatQ>> mult_;
  std::map<Face, VecQ> unit_;
};

// Two realizations of the complex:
//   Strings:    cochains on strict descending strings of faces; the boundary
//               pulls back along the first embedding, composes adjacent
//               embeddings, and drops the last one.
//   Simplicial: cochains on nerve simplices with the omit-one-index boundary.
enum class CechConvention { Strings, Simplicial };

struct CechComplex {
  CechConvention convention = CechConvention::Strings;
  ChainComplex chain{+1};
  // Strings: basis strings per degree, each a strict descending face chain
  // (J_0 contains J_1 contains ...); values live in V_{J_0}.
  std::map<int, std::vector<std::vector<Face>>> strings;
  // Simplicial: faces per degree (a degree-k simplex is a face of size k+1).
  std::map<int, std::vector<Face>> simplices;
  // Offset of each basis string/simplex block inside the degree's space.
  std::map<int, std::vector<long>> offsets;

  long block_offset(int degree, int index) const {
    return offsets.at(degree)[index];
  }
};

CechComplex cech_complex(const Nerve& nerve, const CechCoefficients& coeffs,
                         CechConvention convention = CechConvention::Strings);

// Cup product on the string-convention complex:
//   (G1 . G2)(h_1..h_{k+k'}) =
//     (-1)^{kk'} G1(h_1..h_k) (h_1* ... h_k*) G2(h_{k+1}..h_{k+k'}).
// Requires an algebra structure on the coefficients.
VecQ cup_product(const CechComplex& cx, const CechCoefficients& coeffs,
                 int k, const VecQ& g1, int kp, const VecQ& g2);

}  // namespace meroc
