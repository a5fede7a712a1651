#include "tridi/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace tridi::oracle {

namespace {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

MatrixXc to_eigen(const DenseMatrix& t) {
  MatrixXc m(static_cast<Eigen::Index>(t.n), static_cast<Eigen::Index>(t.n));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t(i, j);
  }
  return m;
}

VectorXc to_eigen(std::span<const Complex> v) {
  VectorXc out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// Kuhn augmenting paths restricted to pairs with distance <= limit.
bool perfect_matching(const std::vector<std::vector<double>>& dist, double limit) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> match(n, n);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] > limit || seen[j]) continue;
      seen[j] = 1;
      if (match[j] == n || self(self, match[j])) {
        match[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace

Spectrum dense_eigen(const DenseMatrix& t, double radius) {
  Eigen::ComplexEigenSolver<MatrixXc> solver(to_eigen(t), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "dense QR iteration did not converge");
  const auto& ev = solver.eigenvalues();
  Vector values(ev.data(), ev.data() + ev.size());
  return cluster(values, radius > 0.0 ? radius : default_cluster_radius(values));
}

double match_spectra(const Spectrum& s1, const Spectrum& s2) {
  const Vector a = s1.expanded();
  const Vector b = s2.expanded();
  if (a.size() != b.size()) throw Error(ErrorCode::TotalMismatch, "spectra have different total multiplicity");
  if (a.empty()) return 0.0;
  std::vector<std::vector<double>> dist(a.size(), std::vector<double>(b.size()));
  std::vector<double> candidates;
  candidates.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      dist[i][j] = std::abs(a[i] - b[j]);
      candidates.push_back(dist[i][j]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(dist, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

ResidualReport check_square_identity(const TridiagonalMatrix& j, Complex x) {
  const MatrixXc jd = to_eigen(materialize_dense(j));
  const MatrixXc ad = to_eigen(materialize_dense(make_alternating(j, x)));
  const MatrixXc lhs = ad * ad;
  const MatrixXc rhs = jd * jd + x * x * MatrixXc::Identity(jd.rows(), jd.cols());
  ResidualReport report;
  report.square_identity_deviation = (lhs - rhs).cwiseAbs().maxCoeff();
  const double scale = j.max_abs_entry() + std::abs(x);
  report.passed = report.square_identity_deviation <= 1e-12 * scale * scale;
  return report;
}

Complex dense_determinant(const DenseMatrix& t) {
  if (t.n == 0) return 1.0;
  return to_eigen(t).partialPivLu().determinant();
}

ChainResidual chain_residual(const DenseMatrix& t, const JordanChain& chain, bool transpose) {
  MatrixXc m = to_eigen(t);
  if (transpose) m.transposeInPlace();
  const double norm_t = m.norm();
  const MatrixXc shifted = m - chain.eigenvalue * MatrixXc::Identity(m.rows(), m.cols());
  ChainResidual r;
  if (chain.vectors.empty()) return r;
  const VectorXc v0 = to_eigen(chain.vectors[0]);
  r.eigen = (shifted * v0).norm() / (norm_t * v0.norm());
  for (std::size_t k = 1; k < chain.vectors.size(); ++k) {
    const VectorXc vk = to_eigen(chain.vectors[k]);
    const VectorXc prev = to_eigen(chain.vectors[k - 1]);
    r.chain = std::max(r.chain, (shifted * vk - prev).norm() / (norm_t * std::max(vk.norm(), prev.norm())));
  }
  return r;
}

}  // namespace tridi::oracle
