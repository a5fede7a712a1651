#include "tridi/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tridi::corpus {

namespace {

double relative_error(Complex value, Complex reference) {
  const double denom = std::abs(reference);
  const double diff = std::abs(value - reference);
  return denom == 0.0 ? diff : diff / denom;
}

bool negation_closed(const Spectrum& s) {
  for (const auto& e : s.entries) {
    const bool found = std::any_of(s.entries.begin(), s.entries.end(), [&](const SpectrumEntry& f) {
      return f.value == -e.value && f.mult == e.mult;
    });
    if (!found) return false;
  }
  return true;
}

struct ResidualAccumulator {
  double eigen = 0.0;
  double chain = 0.0;

  void add(const DenseMatrix& t, const JordanChain& c, bool transpose = false) {
    const auto r = oracle::chain_residual(t, c, transpose);
    eigen = std::max(eigen, r.eigen);
    chain = std::max(chain, r.chain);
  }
};

void evaluate(const Instance& inst, const Tolerances& tol, InstanceResult& res) {
  const TridiagonalMatrix& j = inst.j;
  const PerturbationParams p = inst.p;
  const std::size_t n = j.order();
  const TridiagonalMatrix b = make_two_periodic(j, p);
  const TridiagonalMatrix a = make_alternating(j, p.x);
  const DenseMatrix jd = materialize_dense(j);
  const DenseMatrix ad = materialize_dense(a);
  const DenseMatrix bd = materialize_dense(b);

  const PairedSpectrum ps = zero_diagonal_spectrum(j);
  res.parity_ok = negation_closed(ps.expand()) && ps.expand().total() == static_cast<int>(n);

  res.j_path_match = oracle::match_spectra(ps.expand(), oracle::dense_eigen(jd));
  res.spectrum_match = oracle::match_spectra(map_to_two_periodic(ps, p), oracle::dense_eigen(bd));

  const Complex det_dense = oracle::dense_determinant(bd);
  res.det_closed_form = relative_error(det_two_periodic(ps, p), det_dense);
  res.det_recurrence = relative_error(determinant(b), det_dense);
  if (n % 2 == 0) res.det_j_even = relative_error(det_j_even(j), determinant(j));

  const auto sq = oracle::check_square_identity(j, p.x);
  const double scale = j.max_abs_entry() + std::abs(p.x);
  res.square_identity = sq.square_identity_deviation / (scale * scale);

  ResidualAccumulator acc;
  ResidualAccumulator reflected;
  for (const auto& pair : ps.pairs) {
    const JordanChain chain = jordan_chain_j(j, pair.lambda, 1);
    acc.add(jd, chain);
    reflected.add(jd, reflect_chain(chain));
  }
  if (ps.zero_mult > 0) acc.add(jd, jordan_chain_j(j, Complex{}, 1));
  for (const auto& c : alternating_chains(j, ps, p.x)) acc.add(ad, c);
  for (const auto& c : two_periodic_chains(j, ps, p)) {
    acc.add(bd, c);
    acc.add(bd, left_chain(b, c), /*transpose=*/true);
  }

  if (!ps.pairs.empty()) {
    const SpectralPair& first = ps.pairs.front();
    const Complex x_deg = Complex{0.0, 1.0} * first.lambda;
    res.degenerate_expected = 2 * first.mult;
    for (const auto& e : map_to_alternating(ps, x_deg).entries) {
      if (e.value == Complex{}) res.degenerate_mult = e.mult;
    }
    const TridiagonalMatrix a_deg = make_alternating(j, x_deg);
    const DenseMatrix a_deg_d = materialize_dense(a_deg);
    const Spectrum dense = oracle::dense_eigen(a_deg_d, tol.degenerate_cluster_radius);
    const auto nearest = std::min_element(dense.entries.begin(), dense.entries.end(),
                                          [](const SpectrumEntry& l, const SpectrumEntry& r) {
                                            return std::abs(l.value) < std::abs(r.value);
                                          });
    res.degenerate_dense_mult = nearest->mult;
    res.degenerate_cluster_sum = std::abs(nearest->value) * nearest->mult;
    for (const auto& c : alternating_chains(j, ps, x_deg)) acc.add(a_deg_d, c);
  } else {
    res.degenerate_expected = res.degenerate_mult = res.degenerate_dense_mult = 0;
  }

  res.eigen_residual = std::max(acc.eigen, reflected.eigen);
  res.chain_residual = acc.chain;
  res.reflect_residual = reflected.eigen;

  res.passed = res.parity_ok && res.spectrum_match <= tol.spectrum_match &&
               res.j_path_match <= tol.spectrum_match && res.det_closed_form <= tol.det_closed_form &&
               res.det_recurrence <= tol.det_recurrence && res.det_j_even <= tol.det_j_even &&
               res.square_identity <= tol.square_identity && res.eigen_residual <= tol.residual &&
               res.chain_residual <= tol.residual && res.degenerate_mult == res.degenerate_expected &&
               res.degenerate_dense_mult == res.degenerate_expected &&
               res.degenerate_cluster_sum <= tol.degenerate_cluster_sum;
}

}  // namespace

Complex random_annulus(Rng& rng, double rmin, double rmax) {
  std::uniform_real_distribution<double> modulus(rmin, rmax);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double r = modulus(rng);
  return std::polar(r, phase(rng));
}

Complex random_disk(Rng& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double r = radius * std::sqrt(unit(rng));
  return std::polar(r, phase(rng));
}

TridiagonalMatrix random_zero_diag(std::size_t n, Rng& rng) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "random zero-diagonal matrices need n >= 2");
  Vector sub(n - 1), sup(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    sub[k] = random_annulus(rng, 0.1, 2.0);
    sup[k] = random_annulus(rng, 0.1, 2.0);
  }
  return make_zero_diag(std::move(sub), std::move(sup));
}

Instance make_instance(const CorpusConfig& cfg, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  const int nmax = std::max(2, cfg.nmax);
  std::uniform_int_distribution<int> order(2, nmax);
  const auto n = static_cast<std::size_t>(order(rng));
  TridiagonalMatrix j = random_zero_diag(n, rng);
  const Complex x = random_disk(rng, 2.0);
  const Complex y = random_disk(rng, 2.0);
  return {index, std::move(j), {x, y}};
}

InstanceResult check_instance(const Instance& inst, const Tolerances& tol) {
  InstanceResult res;
  res.index = inst.index;
  res.n = static_cast<int>(inst.j.order());
  try {
    evaluate(inst, tol, res);
  } catch (const std::exception& e) {
    res.error = e.what();
    res.passed = false;
  }
  return res;
}

oracle::ResidualReport summarize(const std::vector<InstanceResult>& results) {
  oracle::ResidualReport r;
  for (const auto& res : results) {
    r.max_eigen_residual = std::max(r.max_eigen_residual, res.eigen_residual);
    r.max_chain_residual = std::max(r.max_chain_residual, res.chain_residual);
    r.spectrum_match_distance = std::max({r.spectrum_match_distance, res.spectrum_match, res.j_path_match});
    r.square_identity_deviation = std::max(r.square_identity_deviation, res.square_identity);
    r.passed = r.passed && res.passed;
  }
  return r;
}

CorpusReport run_corpus(const CorpusConfig& cfg, const Tolerances& tol) {
  std::vector<InstanceResult> results(static_cast<std::size_t>(std::max(cfg.count, 0)));
  const int count = static_cast<int>(results.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = check_instance(make_instance(cfg, i), tol);
  }
  oracle::ResidualReport summary = summarize(results);
  return {std::move(results), summary};
}

CorpusReport run_corpus_serial(const CorpusConfig& cfg, const Tolerances& tol) {
  std::vector<InstanceResult> results;
  for (int i = 0; i < cfg.count; ++i) results.push_back(check_instance(make_instance(cfg, i), tol));
  oracle::ResidualReport summary = summarize(results);
  return {std::move(results), summary};
}

}  // namespace tridi::corpus
