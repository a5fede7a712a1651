#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tridi/corpus.hpp"
#include "tridi/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tridi::cli {

namespace {

using io::Json;

// Thrown for anything that should end with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<double> tol;
  bool json = true;
  std::optional<std::uint64_t> seed;
  std::string in_path;
};

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroOffDiagonal:
    case ErrorCode::LengthMismatch:
    case ErrorCode::NonFinite:
    case ErrorCode::NonZeroDiagonalInput:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

TridiagonalMatrix read_matrix(const Globals& g, std::istream& in) {
  Json j;
  try {
    if (g.in_path.empty() || g.in_path == "-") {
      j = Json::parse(in);
    } else {
      std::ifstream file(g.in_path);
      if (!file) throw UsageError("cannot open input file '" + g.in_path + "'");
      j = Json::parse(file);
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("matrix JSON parse error: ") + e.what());
  }
  try {
    return io::matrix_from_json(j);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("matrix JSON schema error: ") + e.what());
  }
}

DiagonalShape parse_shape(const std::string& s) {
  if (s == "zero") return DiagonalShape::Zero;
  if (s == "alternating") return DiagonalShape::Alternating;
  if (s == "two-periodic") return DiagonalShape::TwoPeriodic;
  throw UsageError("unknown shape '" + s + "'");
}

// Decomposition for the closed-form paths, honoring an optional shape override.
Decomposition require_decomposition(const TridiagonalMatrix& t, const std::string& shape_flag) {
  auto d = decompose(t);
  if (!d) throw UsageError("mapped method needs a zero, alternating or two-periodic main diagonal");
  if (!d->j.irreducible()) throw UsageError("mapped method needs an irreducible matrix");
  if (shape_flag != "auto") {
    const DiagonalShape want = parse_shape(shape_flag);
    const bool ok = d->shape == want || d->shape == DiagonalShape::Zero ||
                    (d->shape == DiagonalShape::Alternating && want == DiagonalShape::TwoPeriodic);
    if (!ok) {
      throw UsageError(std::string("diagonal is ") + to_string(d->shape) + ", not " + to_string(want));
    }
  }
  return *d;
}

Spectrum mapped_spectrum(const Decomposition& d) {
  const PairedSpectrum ps = zero_diagonal_spectrum(d.j);
  switch (d.shape) {
    case DiagonalShape::Zero: {
      Spectrum s = ps.expand();
      sort_spectrum(s);
      return s;
    }
    case DiagonalShape::Alternating:
      return map_to_alternating(ps, d.p.x);
    default:
      return map_to_two_periodic(ps, d.p);
  }
}

void emit(std::ostream& out, const Json& j) { out << io::dump(j) << '\n'; }

void add_globals(CLI::App& app, Globals& g) {
  app.add_option("--tol", g.tol, "Residual tolerance for chain construction and verification");
  app.add_flag("--json", g.json, "Emit JSON (the only output format)");
  app.add_option("--seed", g.seed, "Seed for random generation");
  app.add_option("--in", g.in_path, "Input matrix JSON file (default: standard input)");
}

}  // namespace

const char* to_string(DiagonalShape s) {
  switch (s) {
    case DiagonalShape::Zero: return "zero";
    case DiagonalShape::Alternating: return "alternating";
    case DiagonalShape::TwoPeriodic: return "two-periodic";
    case DiagonalShape::Other: return "other";
  }
  return "other";
}

DiagonalShape detect_shape(const TridiagonalMatrix& t) {
  if (t.zero_diagonal()) return DiagonalShape::Zero;
  const auto diag = t.diag();
  const Complex x = diag[0];
  const Complex y = diag.size() > 1 ? diag[1] : -x;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] != (i % 2 == 0 ? x : y)) return DiagonalShape::Other;
  }
  return y == -x ? DiagonalShape::Alternating : DiagonalShape::TwoPeriodic;
}

std::optional<Decomposition> decompose(const TridiagonalMatrix& t) {
  const DiagonalShape shape = detect_shape(t);
  if (shape == DiagonalShape::Other) return std::nullopt;
  const auto diag = t.diag();
  const Complex x = diag[0];
  const Complex y = diag.size() > 1 ? diag[1] : -x;
  TridiagonalMatrix j(Vector(t.sub().begin(), t.sub().end()), Vector(t.order()),
                      Vector(t.sup().begin(), t.sup().end()));
  return Decomposition{shape, std::move(j), {x, y}};
}

Complex parse_complex(const std::string& text) {
  std::istringstream ss(text);
  double re = 0.0, im = 0.0;
  if (!(ss >> re)) throw UsageError("cannot parse complex value '" + text + "'");
  if (ss.peek() == ',') {
    ss.get();
    if (!(ss >> im)) throw UsageError("cannot parse complex value '" + text + "'");
  }
  if (!ss.eof() && ss.peek() != std::char_traits<char>::eof()) {
    throw UsageError("trailing characters in complex value '" + text + "'");
  }
  return {re, im};
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of tridiagonal matrices with two-periodic main diagonal", "tridi"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  add_globals(app, g);

  std::string gen_kind;
  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Emit a matrix: random-j, sylvester-kac or paper-example");
  gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"random-j", "sylvester-kac", "paper-example"}));
  gen->add_option("--n", gen_n, "Order (random-j) or Sylvester-Kac parameter N");

  std::string method = "mapped";
  std::string shape = "auto";
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a matrix");
  spectrum->add_option("--method", method)->check(CLI::IsMember({"mapped", "oracle"}));
  spectrum->add_option("--shape", shape)->check(CLI::IsMember({"auto", "zero", "alternating", "two-periodic"}));

  std::string map_x, map_y;
  auto* map = app.add_subcommand("map", "Map the spectrum of a zero-diagonal J to J + diag(x, y, x, ...)");
  map->add_option("--x", map_x, "x as re or re,im")->required();
  map->add_option("--y", map_y, "y as re or re,im (default: -x)");

  bool with_left = false;
  auto* eigvec = app.add_subcommand("eigvec", "Eigenvectors and first generalized eigenvectors");
  eigvec->add_option("--shape", shape)->check(CLI::IsMember({"auto", "zero", "alternating", "two-periodic"}));
  eigvec->add_flag("--left", with_left, "Also emit left chains");

  std::string det_method = "mapped";
  auto* det = app.add_subcommand("det", "Determinant");
  det->add_option("--method", det_method)->check(CLI::IsMember({"mapped", "recurrence", "oracle"}));

  corpus::CorpusConfig cfg;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run the seeded verification corpus");
  verify->add_option("--count", cfg.count)->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", cfg.nmax)->check(CLI::Range(2, 64));
  verify->add_flag("--serial", serial, "Use the single-threaded reference runner");

  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "Time the serial and OpenMP corpus runners");
  bench->add_option("--count", cfg.count)->check(CLI::NonNegativeNumber);
  bench->add_option("--nmax", cfg.nmax)->check(CLI::Range(2, 64));
  bench->add_option("--repeat", repeat)->check(CLI::PositiveNumber);

  for (auto* sub : {gen, spectrum, map, eigvec, det, verify, bench}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("tridi");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      Json j;
      if (gen_kind == "paper-example") {
        j = io::to_json(nilpotent_example());
      } else if (gen_kind == "sylvester-kac") {
        if (gen_n < 1) throw UsageError("sylvester-kac needs --n >= 1");
        j = io::to_json(sylvester_kac(gen_n));
      } else {
        if (gen_n < 2) throw UsageError("random-j needs --n >= 2");
        const std::uint64_t seed = g.seed.value_or(0);
        corpus::Rng rng(seed);
        j = io::to_json(corpus::random_zero_diag(static_cast<std::size_t>(gen_n), rng));
        j["seed"] = seed;
      }
      emit(out, j);
      return 0;
    }

    if (spectrum->parsed()) {
      const TridiagonalMatrix t = read_matrix(g, in);
      if (method == "oracle") {
        emit(out, io::to_json(oracle::dense_eigen(materialize_dense(t))));
      } else {
        emit(out, io::to_json(mapped_spectrum(require_decomposition(t, shape))));
      }
      return 0;
    }

    if (map->parsed()) {
      const TridiagonalMatrix t = read_matrix(g, in);
      if (!t.zero_diagonal()) throw UsageError("map expects a zero-diagonal matrix");
      if (!t.irreducible()) throw UsageError("map expects an irreducible matrix");
      const Complex x = parse_complex(map_x);
      const PerturbationParams p{x, map_y.empty() ? -x : parse_complex(map_y)};
      const PairedSpectrum ps = zero_diagonal_spectrum(t);
      Json j;
      j["paired"] = io::to_json(ps);
      j["spectrum"] = io::to_json(map_to_two_periodic(ps, p));
      j["det"] = io::to_json(det_two_periodic(ps, p));
      emit(out, j);
      return 0;
    }

    if (eigvec->parsed()) {
      const TridiagonalMatrix t = read_matrix(g, in);
      const Decomposition d = require_decomposition(t, shape);
      const PairedSpectrum ps = zero_diagonal_spectrum(d.j);
      const auto chains = two_periodic_chains(d.j, ps, d.p, g.tol.value_or(kChainTolerance));
      Json j;
      j["chains"] = Json::array();
      for (const auto& c : chains) j["chains"].push_back(io::to_json(c));
      if (with_left) {
        j["left_chains"] = Json::array();
        for (const auto& c : chains) j["left_chains"].push_back(io::to_json(left_chain(t, c)));
      }
      emit(out, j);
      return 0;
    }

    if (det->parsed()) {
      const TridiagonalMatrix t = read_matrix(g, in);
      Complex value;
      if (det_method == "recurrence") {
        value = determinant(t);
      } else if (det_method == "oracle") {
        value = oracle::dense_determinant(materialize_dense(t));
      } else {
        const Decomposition d = require_decomposition(t, "auto");
        value = det_two_periodic(zero_diagonal_spectrum(d.j), d.p);
      }
      Json j;
      j["det"] = io::to_json(value);
      emit(out, j);
      return 0;
    }

    if (verify->parsed() || bench->parsed()) {
      cfg.seed = g.seed.value_or(cfg.seed);
      corpus::Tolerances tol;
      if (g.tol) tol.residual = *g.tol;

      if (bench->parsed()) {
        using clock = std::chrono::steady_clock;
        auto time = [&](auto&& runner) {
          double best = 1e300;
          corpus::CorpusReport report;
          for (int r = 0; r < repeat; ++r) {
            const auto t0 = clock::now();
            report = runner(cfg, tol);
            best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
          }
          return std::pair{best, report};
        };
        const auto [serial_s, serial_report] = time(corpus::run_corpus_serial);
        const auto [parallel_s, parallel_report] = time(corpus::run_corpus);
        Json j;
        j["count"] = cfg.count;
        j["nmax"] = cfg.nmax;
        j["seed"] = cfg.seed;
#ifdef _OPENMP
        j["threads"] = omp_get_max_threads();
#else
        j["threads"] = 1;
#endif
        j["serial_seconds"] = serial_s;
        j["parallel_seconds"] = parallel_s;
        j["speedup"] = parallel_s > 0.0 ? serial_s / parallel_s : 0.0;
        j["identical"] = io::dump(io::to_json(serial_report.summary)) == io::dump(io::to_json(parallel_report.summary));
        emit(out, j);
        return 0;
      }

      const corpus::CorpusReport report = serial ? corpus::run_corpus_serial(cfg, tol) : corpus::run_corpus(cfg, tol);
      Json j;
      j["seed"] = cfg.seed;
      j["count"] = cfg.count;
      j["nmax"] = cfg.nmax;
      const Json summary = io::to_json(report.summary);
      for (const auto& [key, value] : summary.items()) j[key] = value;
      Json failures = Json::array();
      for (const auto& r : report.results) {
        if (r.passed) continue;
        Json f;
        f["index"] = r.index;
        f["n"] = r.n;
        f["error"] = r.error;
        f["spectrum_match"] = r.spectrum_match;
        f["eigen_residual"] = r.eigen_residual;
        f["chain_residual"] = r.chain_residual;
        failures.push_back(std::move(f));
      }
      j["failures"] = std::move(failures);
      emit(out, j);
      return report.summary.passed ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? 2 : 1;
  }
  return 2;
}

}  // namespace tridi::cli
