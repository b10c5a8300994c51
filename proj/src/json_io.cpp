#include "schlicht/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "schlicht/errors.hpp"

namespace schlicht {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const ComplexSeries& s) {
  ordered_json j;
  j["order"] = s.order();
  auto coeffs = ordered_json::array();
  for (Eigen::Index k = 0; k <= s.order(); ++k) coeffs.push_back({s[k].real(), s[k].imag()});
  j["coeffs"] = std::move(coeffs);
  return j;
}

namespace {

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParameterDomainError("expected a complex number as [re, im]");
}

}  // namespace

ComplexSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ParameterDomainError("series JSON needs a \"coeffs\" array");
  }
  const auto& arr = j["coeffs"];
  if (arr.empty()) throw ParameterDomainError("series JSON has no coefficients");
  if (j.contains("order") && j["order"].get<long long>() + 1 != static_cast<long long>(arr.size())) {
    throw ParameterDomainError("series JSON: coeffs length must equal order + 1");
  }
  ComplexSeries::Coeffs c(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) c(Eigen::Index(k)) = complex_from_json(arr[k]);
  return ComplexSeries(std::move(c));
}

ordered_json to_json(const ClassParams& p) {
  ordered_json j;
  j["gamma"] = {p.gamma.real(), p.gamma.imag()};
  j["lambda"] = p.lambda;
  j["A"] = p.A;
  j["B"] = p.B;
  return j;
}

ClassParams params_from_json(const json& j) {
  try {
    ClassParams p;
    p.gamma = complex_from_json(j.at("gamma"));
    p.lambda = j.at("lambda").get<double>();
    p.A = j.at("A").get<double>();
    p.B = j.at("B").get<double>();
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw ParameterDomainError(std::string("class parameter JSON: ") + e.what());
  }
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

namespace {

void write_value(std::ostream& os, const ordered_json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    os << '\n' << std::string(std::size_t(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << json(key).dump() << (indent < 0 ? ":" : ": ");
        write_value(os, value, indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const auto& e) { return e.is_primitive(); });
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        write_value(os, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      os << ']';
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace

void write_json(std::ostream& os, const ordered_json& j, int indent) {
  write_value(os, j, indent, 0);
  os << '\n';
}

}  // namespace schlicht
