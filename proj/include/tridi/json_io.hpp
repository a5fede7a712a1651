#pragma once

#include <json.hpp>
#include <string>

#include "tridi/oracle.hpp"

namespace tridi::io {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const TridiagonalMatrix& t);
TridiagonalMatrix matrix_from_json(const Json& j);

Json to_json(const CharPoly& p);
Json to_json(const Spectrum& s);
Json to_json(const PairedSpectrum& ps);
Json to_json(const JordanChain& c);
Json to_json(const oracle::ResidualReport& r);

/// Compact serialization with doubles printed as %.17g; key order is
/// insertion order, so equal inputs give byte-identical text.
std::string dump(const Json& j);

}  // namespace tridi::io
