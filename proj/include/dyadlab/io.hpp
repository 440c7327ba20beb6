#pragma once

#include "dyadlab/chui_wang.hpp"
#include "dyadlab/families.hpp"
#include "dyadlab/norms.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace dyadlab {

using Json = nlohmann::json;

Json to_json(const ExactPiecewise& f);
ExactPiecewise piecewise_from_json(const Json& j);

Json to_json(const GridFunction& f);
GridFunction grid_from_json(const Json& j);

Json to_json(const NormReport& rep);

Json to_json(const SmoothnessParams& prm);
SmoothnessParams params_from_json(const Json& j);

/// Deterministic shortest-round-trip decimal formatting.
std::string format_double(double v);

/// CSV rows "j,mu,parity,value"; exact entries as integer-ratio strings.
std::string coeffs_to_csv(const CoeffArray<Rational>& c, const std::string& parity);
std::string coeffs_to_csv(const CoeffArray<double>& c, const std::string& parity);
std::string coeffs_to_csv(const CoeffArray<Complex>& c, const std::string& parity);

Json coeffs_to_json(const CoeffArray<Rational>& c, const std::string& parity);

/// A generated or loaded function: exactly one of the two representations.
struct FunctionValue {
  std::variant<ExactPiecewise, GridFunction> value;
  std::string name;

  bool is_exact() const { return std::holds_alternative<ExactPiecewise>(value); }
  const ExactPiecewise& exact() const { return std::get<ExactPiecewise>(value); }
  const GridFunction& grid() const { return std::get<GridFunction>(value); }
};

/// Builds a function from a generator spec such as {"family":"staircase","N":8},
/// an inline function object, or {"file": "path.json"}.
FunctionValue function_from_spec(const Json& spec);

/// Simple CSV assembly: quoted-free comma rows with a header.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return buffer_; }

 private:
  size_t columns_;
  std::string buffer_;
};

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace dyadlab
