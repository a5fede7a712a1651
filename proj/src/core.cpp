#include "tridi/core.hpp"

#include <algorithm>
#include <cmath>

namespace tridi {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonZeroDiagonalInput: return "NonZeroDiagonalInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PairingFailure: return "PairingFailure";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::DegenerateMu: return "DegenerateMu";
    case ErrorCode::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorCode::ChainBreak: return "ChainBreak";
    case ErrorCode::InsufficientChain: return "InsufficientChain";
    case ErrorCode::TotalMismatch: return "TotalMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace {

void require_finite(std::span<const Complex> v, const char* name) {
  for (const auto& z : v) {
    if (!is_finite(z)) throw Error(ErrorCode::NonFinite, std::string(name) + " has a non-finite entry");
  }
}

void require_zero_diagonal(const TridiagonalMatrix& j) {
  if (!j.zero_diagonal()) throw Error(ErrorCode::NonZeroDiagonalInput, "expected a zero main diagonal");
  if (!j.irreducible()) throw Error(ErrorCode::ZeroOffDiagonal, "expected an irreducible matrix");
}

}  // namespace

TridiagonalMatrix::TridiagonalMatrix(Vector sub, Vector diag, Vector sup)
    : sub_(std::move(sub)), diag_(std::move(diag)), sup_(std::move(sup)) {
  if (diag_.empty()) throw Error(ErrorCode::LengthMismatch, "matrix order must be positive");
  if (sub_.size() != diag_.size() - 1 || sup_.size() != diag_.size() - 1) {
    throw Error(ErrorCode::LengthMismatch, "off-diagonals must have length n-1");
  }
  require_finite(sub_, "sub");
  require_finite(diag_, "diag");
  require_finite(sup_, "sup");
  auto nonzero = [](Complex z) { return z != Complex{}; };
  irreducible_ = std::all_of(sub_.begin(), sub_.end(), nonzero) &&
                 std::all_of(sup_.begin(), sup_.end(), nonzero);
}

bool TridiagonalMatrix::zero_diagonal() const {
  return std::all_of(diag_.begin(), diag_.end(), [](Complex z) { return z == Complex{}; });
}

Vector TridiagonalMatrix::apply(std::span<const Complex> v) const {
  const std::size_t n = order();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = diag_[i] * v[i];
    if (i > 0) acc += sub_[i - 1] * v[i - 1];
    if (i + 1 < n) acc += sup_[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

Vector TridiagonalMatrix::apply_transpose(std::span<const Complex> v) const {
  const std::size_t n = order();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = diag_[i] * v[i];
    if (i > 0) acc += sup_[i - 1] * v[i - 1];
    if (i + 1 < n) acc += sub_[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

double TridiagonalMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto* d : {&sub_, &diag_, &sup_}) {
    for (const auto& z : *d) s += std::norm(z);
  }
  return std::sqrt(s);
}

double TridiagonalMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto* d : {&sub_, &diag_, &sup_}) {
    for (const auto& z : *d) m = std::max(m, std::abs(z));
  }
  return m;
}

TridiagonalMatrix make_zero_diag(Vector sub, Vector sup) {
  if (sub.size() != sup.size()) throw Error(ErrorCode::LengthMismatch, "sub and sup lengths differ");
  if (sub.empty()) throw Error(ErrorCode::LengthMismatch, "need at least one off-diagonal entry");
  auto is_zero = [](Complex z) { return z == Complex{}; };
  if (std::any_of(sub.begin(), sub.end(), is_zero) || std::any_of(sup.begin(), sup.end(), is_zero)) {
    throw Error(ErrorCode::ZeroOffDiagonal, "off-diagonal entries must be nonzero");
  }
  const std::size_t n = sub.size() + 1;
  return TridiagonalMatrix(std::move(sub), Vector(n), std::move(sup));
}

TridiagonalMatrix make_alternating(const TridiagonalMatrix& j, Complex x) {
  return make_two_periodic(j, {x, -x});
}

TridiagonalMatrix make_two_periodic(const TridiagonalMatrix& j, PerturbationParams p) {
  require_zero_diagonal(j);
  if (!is_finite(p.x) || !is_finite(p.y)) throw Error(ErrorCode::NonFinite, "perturbation parameters");
  Vector diag(j.order());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = (i % 2 == 0) ? p.x : p.y;
  return TridiagonalMatrix(Vector(j.sub().begin(), j.sub().end()), std::move(diag),
                           Vector(j.sup().begin(), j.sup().end()));
}

TridiagonalMatrix sylvester_kac(int big_n) {
  if (big_n < 1) throw Error(ErrorCode::InvalidArgument, "Sylvester-Kac order N must be >= 1");
  Vector sub(big_n), sup(big_n);
  for (int k = 0; k < big_n; ++k) {
    sup[k] = static_cast<double>(k + 1);
    sub[k] = static_cast<double>(big_n - k);
  }
  return make_zero_diag(std::move(sub), std::move(sup));
}

TridiagonalMatrix nilpotent_example() {
  return make_zero_diag({1.0, 1.0, 1.0, 1.0}, {1.0, 1.0, -4.0, 2.0});
}

Vector apply_sign_involution(std::span<const Complex> v) {
  Vector out(v.begin(), v.end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

DenseMatrix materialize_dense(const TridiagonalMatrix& t) {
  const std::size_t n = t.order();
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = t.diag()[i];
    if (i + 1 < n) {
      m(i, i + 1) = t.sup()[i];
      m(i + 1, i) = t.sub()[i];
    }
  }
  return m;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Vector axpy(Complex alpha, std::span<const Complex> x, std::span<const Complex> y) {
  Vector out(y.begin(), y.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += alpha * x[i];
  return out;
}

Vector scaled(Complex alpha, std::span<const Complex> x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * x[i];
  return out;
}

}  // namespace tridi
