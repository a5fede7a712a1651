#pragma once

#include "tridi/core.hpp"

namespace tridi {

/// Monic polynomial, coefficients in ascending degree.
struct CharPoly {
  Vector coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  Complex eval(Complex z) const;
  Complex derivative(Complex z) const;
  double max_abs_coeff() const;
};

/// chi_n(z) = p(z^2) when `odd` is false, z * p(z^2) when true.
struct ParityFactorization {
  Vector reduced;
  bool odd = false;

  CharPoly reconstruct() const;
};

/// Relative gate on wrong-parity coefficients accepted by `parity_split`.
inline constexpr double kParityTolerance = 1e-10;

/// det(zI - T) through the three-term recurrence
/// chi_{k+1}(z) = (z - b_{k+1}) chi_k(z) - a_k c_k chi_{k-1}(z).
CharPoly char_poly(const TridiagonalMatrix& t);

ParityFactorization parity_split(const CharPoly& p, double tol = kParityTolerance);

/// det T, from the same recurrence evaluated at z = 0.
Complex determinant(const TridiagonalMatrix& t);

/// chi_n(z) and chi_n'(z) evaluated directly from the matrix entries.
struct CharValue {
  Complex value;
  Complex derivative;
};
CharValue eval_char_poly(const TridiagonalMatrix& t, Complex z);

}  // namespace tridi
