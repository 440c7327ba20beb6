#include "dyadlab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dyadlab {

namespace {

Json break_to_json(const Rational& b) {
  if (auto d = as_dyadic(b)) {
    if (d->first >= Integer(INT64_MIN) && d->first <= Integer(INT64_MAX))
      return Json{{"num", d->first.convert_to<long long>()}, {"exp", d->second}};
  }
  return Json(ratio_string(b));
}

Rational break_from_json(const Json& j) {
  if (j.is_string()) return parse_ratio(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  return Rational(Integer(j.at("num").get<long long>())) * pow2r(-j.at("exp").get<long>());
}

}  // namespace

Json to_json(const ExactPiecewise& f) {
  Json j;
  j["type"] = "exact_piecewise";
  j["breakpoints"] = Json::array();
  j["pieces"] = Json::array();
  for (const auto& b : f.breakpoints()) j["breakpoints"].push_back(break_to_json(b));
  for (const auto& p : f.pieces()) {
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(ratio_string(p.coeff(k)));
    j["pieces"].push_back(coeffs);
  }
  return j;
}

ExactPiecewise piecewise_from_json(const Json& j) {
  if (j.at("type") != "exact_piecewise")
    throw std::invalid_argument("piecewise_from_json: wrong type tag");
  std::vector<Rational> breaks;
  for (const auto& b : j.at("breakpoints")) breaks.push_back(break_from_json(b));
  std::vector<Poly> pieces;
  for (const auto& pj : j.at("pieces")) {
    std::vector<Rational> coeffs;
    for (const auto& c : pj) coeffs.push_back(parse_ratio(c.get<std::string>()));
    pieces.emplace_back(std::move(coeffs));
  }
  return ExactPiecewise(std::move(breaks), std::move(pieces));
}

Json to_json(const GridFunction& f) {
  Json j;
  j["type"] = "grid_function";
  j["level"] = f.level();
  j["offset"] = f.offset();
  j["mode"] = f.mode() == InterpMode::PiecewiseLinear ? "linear" : "constant";
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(Json::array({v.real(), v.imag()}));
  j["values"] = std::move(vals);
  return j;
}

GridFunction grid_from_json(const Json& j) {
  if (j.at("type") != "grid_function")
    throw std::invalid_argument("grid_from_json: wrong type tag");
  std::vector<Complex> vals;
  for (const auto& v : j.at("values")) {
    if (v.is_array())
      vals.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    else
      vals.emplace_back(v.get<double>(), 0.0);
  }
  InterpMode mode = j.at("mode") == "linear" ? InterpMode::PiecewiseLinear
                                             : InterpMode::PiecewiseConstant;
  return GridFunction(j.at("level").get<int>(), j.at("offset").get<long long>(),
                      std::move(vals), mode);
}

Json to_json(const SmoothnessParams& prm) {
  Json j;
  j["s"] = prm.s;
  j["p"] = std::isinf(prm.p) ? Json("inf") : Json(prm.p);
  j["q"] = std::isinf(prm.q) ? Json("inf") : Json(prm.q);
  return j;
}

namespace {

double exponent_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return SmoothnessParams::inf;
    return std::stod(s);
  }
  return j.get<double>();
}

}  // namespace

SmoothnessParams params_from_json(const Json& j) {
  SmoothnessParams prm;
  prm.s = j.at("s").get<double>();
  prm.p = exponent_from_json(j.at("p"));
  prm.q = exponent_from_json(j.at("q"));
  if (!prm.valid()) throw std::invalid_argument("params_from_json: invalid (s,p,q)");
  return prm;
}

Json to_json(const NormReport& rep) {
  Json j;
  j["value"] = rep.value;
  j["J"] = rep.max_level;
  j["tail_flag"] = rep.tail_at_max;
  j["out_of_region"] = rep.out_of_region;
  j["method"] = rep.method;
  j["params"] = to_json(rep.params);
  return j;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

template <class T, class Fmt>
std::string coeffs_csv_impl(const CoeffArray<T>& c, const std::string& parity, Fmt fmt) {
  std::string out = "j,mu,parity,value\n";
  c.for_each_nonzero([&](int j, long long mu, const T& v) {
    out += std::to_string(j);
    out += ',';
    out += std::to_string(mu);
    out += ',';
    out += parity;
    out += ',';
    out += fmt(v);
    out += '\n';
  });
  return out;
}

}  // namespace

std::string coeffs_to_csv(const CoeffArray<Rational>& c, const std::string& parity) {
  return coeffs_csv_impl(c, parity, [](const Rational& v) { return ratio_string(v); });
}
std::string coeffs_to_csv(const CoeffArray<double>& c, const std::string& parity) {
  return coeffs_csv_impl(c, parity, [](double v) { return format_double(v); });
}
std::string coeffs_to_csv(const CoeffArray<Complex>& c, const std::string& parity) {
  return coeffs_csv_impl(c, parity, [](const Complex& v) {
    return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") +
           format_double(std::abs(v.imag())) + "i";
  });
}

Json coeffs_to_json(const CoeffArray<Rational>& c, const std::string& parity) {
  Json entries = Json::array();
  c.for_each_nonzero([&](int j, long long mu, const Rational& v) {
    entries.push_back(Json{{"j", j}, {"mu", mu}, {"parity", parity}, {"value", ratio_string(v)}});
  });
  Json out;
  out["convention"] = c.convention() == CoeffConvention::Inner ? "inner" : "scaled";
  out["max_level"] = c.max_level();
  out["entries"] = std::move(entries);
  return out;
}

namespace {

long long spec_int(const Json& spec, const std::string& key, long long fallback) {
  if (!spec.contains(key)) return fallback;
  return spec.at(key).get<long long>();
}

Rational spec_rational(const Json& spec, const std::string& key, const Rational& fallback) {
  if (!spec.contains(key)) return fallback;
  const auto& v = spec.at(key);
  if (v.is_string()) return parse_ratio(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.get<long long>()));
  throw std::invalid_argument("function spec: field '" + key + "' must be exact");
}

}  // namespace

FunctionValue function_from_spec(const Json& spec) {
  if (spec.contains("file")) {
    Json inner = Json::parse(read_file(spec.at("file").get<std::string>()));
    FunctionValue fv = function_from_spec(inner);
    fv.name = spec.at("file").get<std::string>();
    return fv;
  }
  if (spec.contains("type")) {
    if (spec.at("type") == "exact_piecewise")
      return {piecewise_from_json(spec), "inline-exact"};
    if (spec.at("type") == "grid_function") return {grid_from_json(spec), "inline-grid"};
    throw std::invalid_argument("function spec: unknown type tag");
  }
  const std::string family = spec.at("family").get<std::string>();
  auto name = [&](long long n) { return family + "-" + std::to_string(n); };
  if (family == "staircase") {
    long long n = spec_int(spec, "N", 4);
    return {staircase(static_cast<int>(n)), name(n)};
  }
  if (family == "geometric_staircase") {
    long long n = spec_int(spec, "N", 4);
    return {geometric_staircase(static_cast<int>(n)), name(n)};
  }
  if (family == "haar") {
    HaarIndex idx{static_cast<int>(spec_int(spec, "j", 0)), spec_int(spec, "mu", 0),
                  spec.value("parity", "even") == std::string("odd") ? Parity::Odd
                                                                     : Parity::Even};
    return {haar_atom(idx), "haar"};
  }
  if (family == "hat")
    return {hat(static_cast<int>(spec_int(spec, "j", 0)), spec_int(spec, "mu", 0)), "hat"};
  if (family == "bspline") {
    long long m = spec_int(spec, "m", 2);
    return {bspline(static_cast<int>(m)).realization, name(m)};
  }
  if (family == "indicator") {
    Rational a = spec_rational(spec, "a", Rational(0));
    Rational b = spec_rational(spec, "b", Rational(1));
    return {ExactPiecewise::indicator(a, b), "indicator"};
  }
  if (family == "cw_psi") return {chui_wang_mother().mother, "cw_psi"};
  if (family == "pwlinear") {
    long long seed = spec_int(spec, "seed", 1);
    return {random_pwlinear(static_cast<uint64_t>(seed),
                            static_cast<int>(spec_int(spec, "knots", 9)),
                            static_cast<int>(spec_int(spec, "level", 2))),
            name(seed)};
  }
  if (family == "pwsmooth") {
    long long seed = spec_int(spec, "seed", 1);
    return {random_smooth_piecewise(static_cast<uint64_t>(seed),
                                    static_cast<int>(spec_int(spec, "cells", 6)),
                                    static_cast<int>(spec_int(spec, "level", 1))),
            name(seed)};
  }
  if (family == "bump") {
    BumpProfile prof;
    long long level = spec_int(spec, "L", 9);
    return {sample_bump(prof, static_cast<int>(level)), name(level)};
  }
  if (family == "chirp") {
    long long n = spec_int(spec, "N", 12);
    long long level = spec_int(spec, "L", n + 4);
    return {chirp_family(static_cast<int>(n), static_cast<int>(level)), name(n)};
  }
  if (family == "rademacher") {
    long long n = spec_int(spec, "N", 16);
    long long level = spec_int(spec, "L", n + 4);
    uint64_t seed = static_cast<uint64_t>(spec_int(spec, "seed", 1));
    auto signs = SignVector::random(rademacher_freqs(static_cast<int>(n)).size(), seed);
    return {rademacher_family(static_cast<int>(n), signs, static_cast<int>(level)), name(n)};
  }
  if (family == "coherent") {
    long long n = spec_int(spec, "N", 16);
    long long level = spec_int(spec, "L", n + 4);
    return {coherent_sum(static_cast<int>(n), static_cast<int>(level)), name(n)};
  }
  throw std::invalid_argument("function spec: unknown family '" + family + "'");
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += header[i];
  }
  buffer_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += cells[i];
  }
  buffer_ += '\n';
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dyadlab
