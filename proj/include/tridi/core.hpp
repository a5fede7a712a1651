#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridi {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

enum class ErrorCode {
  ZeroOffDiagonal,
  LengthMismatch,
  NonFinite,
  NonZeroDiagonalInput,
  InvalidArgument,
  ParityViolation,
  NoConvergence,
  PairingFailure,
  ParityError,
  OddOrder,
  DegenerateMu,
  NotAnEigenvalue,
  ChainBreak,
  InsufficientChain,
  TotalMismatch,
};

const char* to_string(ErrorCode code);

/// Every failure in the library is reported through this type; `code()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

bool is_finite(Complex z);

/// Diagonal parameters of the two-periodic family: odd positions (1-based)
/// carry x, even positions carry y.
struct PerturbationParams {
  Complex x;
  Complex y;

  /// Parameter of the alternating-sign matrix that differs from B by a shift.
  Complex half_difference() const { return 0.5 * (x - y); }
  Complex half_sum() const { return 0.5 * (x + y); }
};

/// Row-major dense square matrix used for interchange with the oracle.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<Complex> data;

  explicit DenseMatrix(std::size_t order) : n(order), data(order * order) {}
  Complex& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

/// Immutable tridiagonal matrix.
///
/// `sub()[k]` is a_{k+1} (row k+1, column k), `sup()[k]` is c_{k+1}
/// (row k, column k+1), `diag()[k]` is b_{k+1}; indices here are 0-based.
/// Irreducibility is derived from the entries at construction.
class TridiagonalMatrix {
 public:
  /// General constructor. Throws LengthMismatch or NonFinite.
  TridiagonalMatrix(Vector sub, Vector diag, Vector sup);

  std::size_t order() const { return diag_.size(); }
  std::span<const Complex> sub() const { return sub_; }
  std::span<const Complex> diag() const { return diag_; }
  std::span<const Complex> sup() const { return sup_; }
  bool irreducible() const { return irreducible_; }
  bool zero_diagonal() const;

  /// y = T v
  Vector apply(std::span<const Complex> v) const;
  /// y = T^T v
  Vector apply_transpose(std::span<const Complex> v) const;
  double frobenius_norm() const;
  double max_abs_entry() const;

  friend bool operator==(const TridiagonalMatrix&, const TridiagonalMatrix&) = default;

 private:
  Vector sub_;
  Vector diag_;
  Vector sup_;
  bool irreducible_ = false;
};

TridiagonalMatrix make_zero_diag(Vector sub, Vector sup);

/// J + x E: diagonal (x, -x, x, ...).
TridiagonalMatrix make_alternating(const TridiagonalMatrix& j, Complex x);

/// J + (x-y)/2 E + (x+y)/2 I: diagonal (x, y, x, y, ...).
TridiagonalMatrix make_two_periodic(const TridiagonalMatrix& j, PerturbationParams p);

/// Sylvester-Kac matrix of order N+1.
TridiagonalMatrix sylvester_kac(int big_n);

/// The 5x5 nilpotent zero-diagonal example with off-diagonal products (1,1,-4,2).
TridiagonalMatrix nilpotent_example();

/// Multiplies component i (0-based) by (-1)^i.
Vector apply_sign_involution(std::span<const Complex> v);

DenseMatrix materialize_dense(const TridiagonalMatrix& t);

// Small vector helpers shared across modules.
double norm2(std::span<const Complex> v);
Vector axpy(Complex alpha, std::span<const Complex> x, std::span<const Complex> y);
Vector scaled(Complex alpha, std::span<const Complex> x);

}  // namespace tridi
