#include "circlebound/serialization.hpp"

#include <algorithm>
#include <string>

namespace circlebound {
namespace {

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::parse, what); }

Complex coefficient_from_json(const nlohmann::json& item, std::size_t index) {
  if (item.is_number()) return {item.get<double>(), 0.0};
  if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
    return {item[0].get<double>(), item[1].get<double>()};
  }
  parse_fail("coefficient " + std::to_string(index) + " must be a number or a [re, im] pair");
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points one past the offending character.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("coefficients")) parse_fail("missing field \"coefficients\"");
    list = &doc.at("coefficients");
  }
  if (!list->is_array()) parse_fail("coefficients must be an array");
  std::vector<Complex> c;
  c.reserve(list->size());
  for (std::size_t i = 0; i < list->size(); ++i) c.push_back(coefficient_from_json((*list)[i], i));
  try {
    return Polynomial(std::move(c));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

Json to_json(const Polynomial& p) {
  Json coefficients = Json::array();
  for (const auto& a : p.coefficients()) coefficients.push_back(complex_to_json(a));
  return Json{{"coefficients", std::move(coefficients)}};
}

Json to_json(const CircleExtremum& e) {
  return Json{{"radius", e.radius},
              {"kind", to_string(e.kind)},
              {"value", e.value},
              {"angle", e.angle},
              {"residual", e.residual}};
}

CircleExtremum circle_extremum_from_json(const Json& j) {
  CircleExtremum e;
  e.radius = j.at("radius").get<double>();
  e.kind = j.at("kind").get<std::string>() == "minimum" ? ExtremumKind::minimum : ExtremumKind::maximum;
  e.value = j.at("value").get<double>();
  e.angle = j.at("angle").get<double>();
  e.residual = j.at("residual").get<double>();
  return e;
}

Json to_json(const BoundResult& b) {
  const BoundParams& p = b.params;
  Json params{{"r", p.r},
              {"R", optional_to_json(p.R)},
              {"K", optional_to_json(p.K)},
              {"n", optional_to_json(p.n)},
              {"mu", optional_to_json(p.mu)},
              {"ratio", optional_to_json(p.ratio)},
              {"m", optional_to_json(p.m)},
              {"reference_max", optional_to_json(p.reference_max)},
              {"factor", optional_to_json(p.factor)},
              {"improvement", optional_to_json(p.improvement)},
              {"integral", optional_to_json(p.integral)}};
  return Json{{"id", to_string(b.id)},
              {"applicable", b.applicable},
              {"value", optional_to_json(b.value)},
              {"reasons", b.reasons},
              {"params", std::move(params)}};
}

BoundResult bound_result_from_json(const Json& j) {
  BoundResult b;
  const auto id = bound_id_from_string(j.at("id").get<std::string>());
  if (!id) parse_fail("unknown bound id " + j.at("id").get<std::string>());
  b.id = *id;
  b.applicable = j.at("applicable").get<bool>();
  b.value = optional_from_json<double>(j, "value");
  b.reasons = j.at("reasons").get<std::vector<std::string>>();
  const Json& p = j.at("params");
  b.params.r = p.at("r").get<double>();
  b.params.R = optional_from_json<double>(p, "R");
  b.params.K = optional_from_json<double>(p, "K");
  b.params.n = optional_from_json<int>(p, "n");
  b.params.mu = optional_from_json<int>(p, "mu");
  b.params.ratio = optional_from_json<double>(p, "ratio");
  b.params.m = optional_from_json<double>(p, "m");
  b.params.reference_max = optional_from_json<double>(p, "reference_max");
  b.params.factor = optional_from_json<double>(p, "factor");
  b.params.improvement = optional_from_json<double>(p, "improvement");
  b.params.integral = optional_from_json<double>(p, "integral");
  return b;
}

Json to_json(const BoundSummary& s) {
  Json bounds = Json::array();
  for (const auto& b : s.bounds) bounds.push_back(to_json(b));
  return Json{{"bounds", std::move(bounds)},
              {"best", s.best ? Json(to_string(*s.best)) : Json(nullptr)},
              {"measured", s.measured ? to_json(*s.measured) : Json(nullptr)},
              {"gap", optional_to_json(s.gap)}};
}

BoundSummary bound_summary_from_json(const Json& j) {
  BoundSummary s;
  for (const auto& b : j.at("bounds")) s.bounds.push_back(bound_result_from_json(b));
  if (!j.at("best").is_null()) s.best = bound_id_from_string(j.at("best").get<std::string>());
  if (!j.at("measured").is_null()) s.measured = circle_extremum_from_json(j.at("measured"));
  s.gap = optional_from_json<double>(j, "gap");
  return s;
}

Json to_json(const GenConfig& c) {
  Json j{{"seed", c.seed},
         {"trials", c.trials},
         {"degree_min", c.degree_min},
         {"degree_max", c.degree_max},
         {"K", c.K},
         {"mu", optional_to_json(c.mu)},
         {"root_modulus_max", c.root_modulus_max},
         {"real_coefficients", c.real_coefficients}};
  if (c.alpha_beta) {
    j["alpha"] = complex_to_json(c.alpha_beta->first);
    j["beta"] = complex_to_json(c.alpha_beta->second);
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  return j;
}

namespace {

Json to_json(const Violation& v) {
  Json coefficients = Json::array();
  for (const auto& a : v.coefficients) coefficients.push_back(complex_to_json(a));
  Json parameters = Json::object();
  for (const auto& [key, value] : v.parameters) parameters[key] = value;
  return Json{{"trial", v.trial},
              {"property", v.property},
              {"check", v.check},
              {"coefficients", std::move(coefficients)},
              {"parameters", std::move(parameters)},
              {"bound", v.bound},
              {"measured", v.measured},
              {"deficit", v.deficit}};
}

Json violations_to_json(const std::vector<Violation>& list) {
  Json out = Json::array();
  for (const auto& v : list) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const FuzzReport& r) {
  Json checked = Json::object();
  for (const auto& [key, count] : r.checked) checked[key] = count;
  Json incidents = Json::array();
  for (const auto& i : r.incidents) {
    incidents.push_back(Json{{"trial", i.trial}, {"kind", i.kind}, {"message", i.message}});
  }
  return Json{{"config", to_json(r.config)},
              {"properties", r.properties},
              {"passed", r.passed()},
              {"checked", std::move(checked)},
              {"violations", violations_to_json(r.violations)},
              {"findings", violations_to_json(r.findings)},
              {"incidents", std::move(incidents)},
              {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace circlebound
