#include "tridi/eigvec.hpp"

#include <algorithm>
#include <cmath>

namespace tridi {

namespace {

void require_irreducible(const TridiagonalMatrix& t) {
  if (!t.irreducible()) throw Error(ErrorCode::ZeroOffDiagonal, "eigenvector recurrence needs an irreducible matrix");
}

bool within(double residual, double tol, double scale) { return residual == 0.0 || residual <= tol * scale; }

// Solves (T - lambda I) w = rhs rows 1..n-1 with w_1 = first; returns the
// residual of the last row.
Complex forward_solve(const TridiagonalMatrix& t, Complex lambda, std::span<const Complex> rhs, Complex first,
                      Vector& w) {
  const std::size_t n = t.order();
  const auto a = t.sub();
  const auto b = t.diag();
  const auto c = t.sup();
  w.assign(n, Complex{});
  w[0] = first;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Complex acc = rhs.empty() ? Complex{} : rhs[k];
    acc -= (b[k] - lambda) * w[k];
    if (k > 0) acc -= a[k - 1] * w[k - 1];
    w[k + 1] = acc / c[k];
  }
  Complex last = (b[n - 1] - lambda) * w[n - 1];
  if (n > 1) last += a[n - 2] * w[n - 2];
  if (!rhs.empty()) last -= rhs[n - 1];
  return last;
}

JordanChain truncated(JordanChain chain, std::size_t depth) {
  if (chain.vectors.size() > depth) chain.vectors.resize(depth);
  return chain;
}

}  // namespace

void normalize_chain(JordanChain& chain) {
  if (chain.vectors.empty()) return;
  Vector& v0 = chain.vectors.front();
  double biggest = 0.0;
  for (const auto& z : v0) biggest = std::max(biggest, std::abs(z));
  if (biggest == 0.0) return;
  const auto it = std::find_if(v0.begin(), v0.end(), [&](Complex z) { return std::abs(z) > 1e-10 * biggest; });
  const std::size_t idx = static_cast<std::size_t>(it - v0.begin());
  const Complex s = 1.0 / v0[idx];
  for (auto& v : chain.vectors) {
    for (auto& z : v) z *= s;
  }
  v0[idx] = 1.0;
}

Vector eigenvector_j(const TridiagonalMatrix& t, Complex lambda, double tol) {
  require_irreducible(t);
  Vector u;
  const Complex residual = forward_solve(t, lambda, {}, 1.0, u);
  if (!within(std::abs(residual), tol, t.frobenius_norm() * norm2(u))) {
    throw Error(ErrorCode::NotAnEigenvalue, "last-row residual " + std::to_string(std::abs(residual)));
  }
  return u;
}

JordanChain jordan_chain_j(const TridiagonalMatrix& t, Complex lambda, std::size_t depth, double tol) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "chain depth must be positive");
  JordanChain chain{lambda, {eigenvector_j(t, lambda, tol)}};
  const double norm_t = t.frobenius_norm();
  while (chain.vectors.size() < depth) {
    const Vector& prev = chain.vectors.back();
    Vector w;
    const Complex residual = forward_solve(t, lambda, prev, Complex{}, w);
    if (!within(std::abs(residual), tol, norm_t * std::max(norm2(w), norm2(prev)))) {
      throw Error(ErrorCode::ChainBreak, "no generalized eigenvector of order " + std::to_string(chain.vectors.size()));
    }
    chain.vectors.push_back(std::move(w));
  }
  return chain;
}

JordanChain reflect_chain(const JordanChain& chain) {
  JordanChain out{-chain.eigenvalue, {}};
  for (std::size_t j = 0; j < chain.vectors.size(); ++j) {
    Vector v = apply_sign_involution(chain.vectors[j]);
    if (j % 2 == 1) {
      for (auto& z : v) z = -z;
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

Complex alternating_mu(Complex lambda, Complex x) {
  if (x == Complex{}) return lambda;
  Complex mu = std::sqrt(lambda * lambda + x * x);
  if (std::abs(lambda + mu) < std::abs(lambda - mu)) mu = -mu;
  return mu;
}

Eigenpair eigenvector_a_generic(std::span<const Complex> u_plus, std::span<const Complex> u_minus, Complex lambda,
                                Complex x, int sign) {
  if (lambda == Complex{}) throw Error(ErrorCode::InvalidArgument, "generic construction needs lambda != 0");
  if (is_degenerate(lambda, x)) throw Error(ErrorCode::DegenerateMu, "x^2 = -lambda^2; use the zero-eigenvalue chain");
  const Complex mu = alternating_mu(lambda, x);
  const Complex beta = x / (lambda + mu);
  if (sign > 0) return {mu, axpy(beta, u_minus, u_plus)};
  return {-mu, axpy(-beta, u_plus, u_minus)};
}

CombinationCoefficients generalized_coefficients(Complex lambda, Complex x, int sign) {
  const Complex mu = alternating_mu(lambda, x);
  const Complex beta = x / (lambda + mu);
  if (sign > 0) return {mu / lambda, -mu * beta / lambda, 1.0 / (2.0 * lambda), -beta / (2.0 * lambda)};
  return {mu * beta / lambda, mu / lambda, -beta / (2.0 * lambda), -1.0 / (2.0 * lambda)};
}

Vector gen_eigenvector_a_generic(const JordanChain& plus, const JordanChain& minus, Complex lambda, Complex x,
                                 int sign) {
  if (plus.length() < 2 || minus.length() < 2) {
    throw Error(ErrorCode::InsufficientChain, "generalized eigenvector needs J chains of length 2");
  }
  if (lambda == Complex{}) throw Error(ErrorCode::InvalidArgument, "generic construction needs lambda != 0");
  if (is_degenerate(lambda, x)) throw Error(ErrorCode::DegenerateMu, "x^2 = -lambda^2; use the zero-eigenvalue chain");
  const auto k = generalized_coefficients(lambda, x, sign);
  const std::size_t n = plus.matrix_order();
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = k.alpha * plus.vectors[1][i] + k.beta * minus.vectors[1][i] + k.gamma * plus.vectors[0][i] +
           k.delta * minus.vectors[0][i];
  }
  return v;
}

JordanChain eigenvector_a_zero_mu(std::span<const Complex> u_plus, std::span<const Complex> u_minus, Complex lambda,
                                  int imag_sign) {
  if (lambda == Complex{}) throw Error(ErrorCode::InvalidArgument, "zero-eigenvalue construction needs lambda != 0");
  const Complex s = imag_sign > 0 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
  JordanChain chain{Complex{}, {axpy(s, u_minus, u_plus), scaled(1.0 / (2.0 * lambda), axpy(-s, u_minus, u_plus))}};
  normalize_chain(chain);
  return chain;
}

JordanChain chain_a_plus_x(const JordanChain& chain0, Complex x, std::size_t depth) {
  if (depth == 0 || depth > 2) throw Error(ErrorCode::InvalidArgument, "chains at +x are available to depth 2");
  const std::size_t need = depth == 1 ? 1 : 3;
  if (chain0.length() < need) throw Error(ErrorCode::InsufficientChain, "chain at 0 too short for +x");
  const auto& u = chain0.vectors;
  JordanChain out{x, {u[0]}};
  if (depth == 2) out.vectors.push_back(axpy(2.0 * x, u[2], u[1]));
  return out;
}

JordanChain chain_a_minus_x(const JordanChain& chain0, Complex x, std::size_t depth) {
  if (depth == 0 || depth > 2) throw Error(ErrorCode::InvalidArgument, "chains at -x are available to depth 2");
  const std::size_t need = depth == 1 ? 2 : 4;
  if (chain0.length() < need) throw Error(ErrorCode::InsufficientChain, "chain at 0 too short for -x");
  const auto& u = chain0.vectors;
  JordanChain out{-x, {axpy(-2.0 * x, u[1], u[0])}};
  if (depth == 2) out.vectors.push_back(axpy(4.0 * x * x, u[3], axpy(-2.0 * x, u[2], u[1])));
  return out;
}

PmXChains eigenvector_a_pm_x(const JordanChain& chain0, Complex x) {
  const std::size_t len = chain0.length();
  PmXChains out{chain_a_plus_x(chain0, x, len >= 3 ? 2 : 1), std::nullopt};
  if (len >= 2) out.minus_x = chain_a_minus_x(chain0, x, len >= 4 ? 2 : 1);
  return out;
}

JordanChain chains_b_from_a(const JordanChain& a_chain, PerturbationParams p) {
  JordanChain out = a_chain;
  out.eigenvalue += p.half_sum();
  return out;
}

std::vector<JordanChain> chains_b_from_a(const std::vector<JordanChain>& a_chains, PerturbationParams p) {
  std::vector<JordanChain> out;
  out.reserve(a_chains.size());
  for (const auto& c : a_chains) out.push_back(chains_b_from_a(c, p));
  return out;
}

LeftScaling left_scaling(const TridiagonalMatrix& t) {
  require_irreducible(t);
  LeftScaling s{Vector(t.order())};
  s.d[0] = 1.0;
  for (std::size_t k = 0; k + 1 < t.order(); ++k) s.d[k + 1] = s.d[k] * t.sub()[k] / t.sup()[k];
  return s;
}

JordanChain left_chain(const TridiagonalMatrix& t, const JordanChain& chain) {
  const LeftScaling s = left_scaling(t);
  JordanChain out{chain.eigenvalue, chain.vectors};
  for (auto& v : out.vectors) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] /= s.d[i];
  }
  return out;
}

std::vector<JordanChain> alternating_chains(const TridiagonalMatrix& j, const PairedSpectrum& ps, Complex x,
                                            double tol) {
  std::vector<JordanChain> out;
  for (const auto& pair : ps.pairs) {
    const std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(pair.mult), 2);
    const JordanChain plus = jordan_chain_j(j, pair.lambda, depth, tol);
    const JordanChain minus = reflect_chain(plus);
    if (is_degenerate(pair.lambda, x)) {
      const Complex i_lambda = Complex{0.0, 1.0} * pair.lambda;
      const int imag_sign = std::abs(x - i_lambda) <= std::abs(x + i_lambda) ? 1 : -1;
      out.push_back(eigenvector_a_zero_mu(plus.vectors[0], minus.vectors[0], pair.lambda, imag_sign));
      continue;
    }
    for (const int sign : {1, -1}) {
      Eigenpair ep = eigenvector_a_generic(plus.vectors[0], minus.vectors[0], pair.lambda, x, sign);
      JordanChain chain{ep.mu, {std::move(ep.v)}};
      if (depth == 2) chain.vectors.push_back(gen_eigenvector_a_generic(plus, minus, pair.lambda, x, sign));
      normalize_chain(chain);
      out.push_back(std::move(chain));
    }
  }
  if (ps.n % 2 == 1) {
    const auto zero_mult = static_cast<std::size_t>(ps.zero_mult);
    const std::size_t r = (zero_mult - 1) / 2;
    const JordanChain chain0 = jordan_chain_j(j, Complex{}, std::min<std::size_t>(zero_mult, 4), tol);
    auto push = [&out](JordanChain chain, std::size_t depth) {
      chain = truncated(std::move(chain), depth);
      normalize_chain(chain);
      out.push_back(std::move(chain));
    };
    if (x == Complex{}) {
      push(chain0, std::min<std::size_t>(zero_mult, 2));
    } else {
      PmXChains pm = eigenvector_a_pm_x(chain0, x);
      push(std::move(pm.plus_x), std::min<std::size_t>(r + 1, 2));
      if (r >= 1) push(std::move(*pm.minus_x), std::min<std::size_t>(r, 2));
    }
  }
  return out;
}

std::vector<JordanChain> two_periodic_chains(const TridiagonalMatrix& j, const PairedSpectrum& ps,
                                             PerturbationParams p, double tol) {
  return chains_b_from_a(alternating_chains(j, ps, p.half_difference(), tol), p);
}

}  // namespace tridi
