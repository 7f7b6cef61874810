#pragma once

#include <Eigen/Core>

#include <string>

#include "km/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<km::Scalar> : GenericNumTraits<km::Scalar> {
  using Real = km::Scalar;
  using NonInteger = km::Scalar;
  using Nested = km::Scalar;
  using Literal = km::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
};

}  // namespace Eigen

namespace km {

using DimVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using Weight = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// λ·α = Σ λ_i α_i.
inline Scalar pairing(const Weight& lambda, const DimVector& alpha) {
  Scalar s;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (alpha(i) != 0) s += lambda(i) * Scalar(alpha(i));
  }
  return s;
}

inline Weight to_weight(const DimVector& v) { return v.unaryExpr([](long x) { return Scalar(x); }); }

inline DimVector unit_vector(Eigen::Index n, Eigen::Index i) { return DimVector::Unit(n, i); }

inline bool same(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!(a(i) == b(i))) return false;
  }
  return true;
}

std::string to_string(const Weight& w);
std::string to_string(const DimVector& v);

bool lex_less(const DimVector& a, const DimVector& b);

}  // namespace km
