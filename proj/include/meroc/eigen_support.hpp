#pragma once

#include <Eigen/Core>

#include "meroc/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<meroc::Rational> : GenericNumTraits<meroc::Rational> {
  typedef meroc::Rational Real;
  typedef meroc::Rational NonInteger;
  typedef meroc::Rational Nested;
  typedef meroc::Rational Literal;

  static inline Real epsilon() { return meroc::Rational(0); }
  static inline Real dummy_precision() { return meroc::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 150,
    MulCost = 120,
  };
};

}  // namespace Eigen

namespace meroc {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace meroc
