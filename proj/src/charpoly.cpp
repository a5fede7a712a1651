#include "tridi/charpoly.hpp"

#include <algorithm>
#include <cmath>

namespace tridi {

Complex CharPoly::eval(Complex z) const {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex CharPoly::derivative(Complex z) const {
  Complex acc{};
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

double CharPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

CharPoly ParityFactorization::reconstruct() const {
  const std::size_t degree = 2 * (reduced.size() - 1) + (odd ? 1 : 0);
  CharPoly p{Vector(degree + 1)};
  for (std::size_t k = 0; k < reduced.size(); ++k) p.coeffs[2 * k + (odd ? 1 : 0)] = reduced[k];
  return p;
}

CharPoly char_poly(const TridiagonalMatrix& t) {
  const std::size_t n = t.order();
  // prev = chi_{k-1}, cur = chi_k; both padded to degree n.
  Vector prev(n + 1), cur(n + 1), next(n + 1);
  cur[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex b = t.diag()[k];
    const Complex prod = k > 0 ? t.sub()[k - 1] * t.sup()[k - 1] : Complex{};
    std::fill(next.begin(), next.end(), Complex{});
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] += cur[d];
      if (b != Complex{}) next[d] -= b * cur[d];
      if (prod != Complex{} && d + 1 <= k) next[d] -= prod * prev[d];
    }
    prev.swap(cur);
    cur.swap(next);
  }
  cur[n] = 1.0;
  return CharPoly{std::move(cur)};
}

ParityFactorization parity_split(const CharPoly& p, double tol) {
  const std::size_t n = p.degree();
  const bool odd = n % 2 == 1;
  const double gate = tol * p.max_abs_coeff();
  ParityFactorization out;
  out.odd = odd;
  out.reduced.resize(n / 2 + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const bool keep = (k % 2 == 1) == odd;
    if (keep) {
      out.reduced[k / 2] = p.coeffs[k];
    } else if (std::abs(p.coeffs[k]) > gate) {
      throw Error(ErrorCode::ParityViolation,
                  "coefficient of degree " + std::to_string(k) + " breaks the z -> -z symmetry");
    }
  }
  return out;
}

Complex determinant(const TridiagonalMatrix& t) {
  // Continuant of T itself: D_{k+1} = b_{k+1} D_k - a_k c_k D_{k-1}.
  Complex prev = 1.0, cur = t.diag()[0];
  for (std::size_t k = 1; k < t.order(); ++k) {
    const Complex next = t.diag()[k] * cur - t.sub()[k - 1] * t.sup()[k - 1] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

CharValue eval_char_poly(const TridiagonalMatrix& t, Complex z) {
  Complex p_prev = 0.0, p_cur = 1.0;
  Complex d_prev = 0.0, d_cur = 0.0;
  for (std::size_t k = 0; k < t.order(); ++k) {
    const Complex shifted = z - t.diag()[k];
    const Complex prod = k > 0 ? t.sub()[k - 1] * t.sup()[k - 1] : Complex{};
    const Complex p_next = shifted * p_cur - prod * p_prev;
    const Complex d_next = p_cur + shifted * d_cur - prod * d_prev;
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return {p_cur, d_cur};
}

}  // namespace tridi
