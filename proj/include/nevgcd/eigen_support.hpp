#pragma once

// NumTraits for the GMP scalars so they can live in Eigen dense containers.
// Only storage, block and element access are used on these matrices; all
// arithmetic is spelled out in the exact algorithms in linalg.hpp.

#include <Eigen/Core>

#include "nevgcd/numeric.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nevgcd {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

}  // namespace nevgcd
