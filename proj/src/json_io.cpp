#include "tridi/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace tridi::io {

namespace {

Vector vector_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorCode::InvalidArgument, std::string("matrix JSON needs array field '") + key + "'");
  }
  Vector out;
  for (const auto& e : j.at(key)) out.push_back(complex_from_json(e));
  return out;
}

Json vector_to_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  out += buf;
}

void write(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        write(out, value);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::InvalidArgument, "complex scalars are [re, im] arrays");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const TridiagonalMatrix& t) {
  Json out;
  out["n"] = t.order();
  out["sub"] = vector_to_json(t.sub());
  out["diag"] = vector_to_json(t.diag());
  out["sup"] = vector_to_json(t.sup());
  return out;
}

TridiagonalMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "matrix JSON must be an object");
  TridiagonalMatrix t(vector_from_json(j, "sub"), vector_from_json(j, "diag"), vector_from_json(j, "sup"));
  if (j.contains("n") && j.at("n").get<std::size_t>() != t.order()) {
    throw Error(ErrorCode::LengthMismatch, "field 'n' disagrees with the diagonal length");
  }
  return t;
}

Json to_json(const CharPoly& p) {
  Json out;
  out["coeffs"] = vector_to_json(p.coeffs);
  return out;
}

Json to_json(const Spectrum& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json item;
    item["value"] = to_json(e.value);
    item["mult"] = e.mult;
    entries.push_back(std::move(item));
  }
  Json out;
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const PairedSpectrum& ps) {
  Json pairs = Json::array();
  for (const auto& p : ps.pairs) {
    Json item;
    item["lambda"] = to_json(p.lambda);
    item["mult"] = p.mult;
    pairs.push_back(std::move(item));
  }
  Json out;
  out["n"] = ps.n;
  out["pairs"] = std::move(pairs);
  out["zero_mult"] = ps.zero_mult;
  return out;
}

Json to_json(const JordanChain& c) {
  Json vectors = Json::array();
  for (const auto& v : c.vectors) vectors.push_back(vector_to_json(v));
  Json out;
  out["eigenvalue"] = to_json(c.eigenvalue);
  out["vectors"] = std::move(vectors);
  return out;
}

Json to_json(const oracle::ResidualReport& r) {
  Json out;
  out["max_eigen_residual"] = r.max_eigen_residual;
  out["max_chain_residual"] = r.max_chain_residual;
  out["spectrum_match_distance"] = r.spectrum_match_distance;
  out["square_identity_deviation"] = r.square_identity_deviation;
  out["passed"] = r.passed;
  return out;
}

std::string dump(const Json& j) {
  std::string out;
  write(out, j);
  return out;
}

}  // namespace tridi::io
