#include "qtoric/model.hpp"

#include <json.hpp>

#include <limits>
#include <regex>
#include <utility>

namespace qtoric {

namespace {

using json = nlohmann::ordered_json;

std::string summarize(const ValidationReport& report) {
  if (!report.valid) {
    std::string msg = "model failed validation";
    if (!report.failures.empty()) {
      msg += ": " + report.failures.front().detail;
      if (report.failures.size() > 1) {
        msg += " (+" + std::to_string(report.failures.size() - 1) + " more)";
      }
    }
    return msg;
  }
  if (!report.positively_omnioriented) {
    return "model is not positively omnioriented";
  }
  return "model is valid";
}

Int int_from_json(const json& j) {
  if (j.is_number_unsigned()) {
    return Int(j.get<std::uint64_t>());
  }
  if (j.is_number_integer()) {
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    static const std::regex decimal("^-?[0-9]+$");
    if (!std::regex_match(s, decimal)) {
      throw ParseError("edge entry \"" + s + "\" is not a decimal integer");
    }
    return Int(s);
  }
  throw ParseError("edge entries must be integers, got " + std::string(j.type_name()));
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

Vertex make_vertex(LatticeVector first, LatticeVector second, std::size_t index) {
  Vertex v;
  v.index = index;
  v.det = det2(first, second);
  v.first = std::move(first);
  v.second = std::move(second);
  return v;
}

ValidationError::ValidationError(ValidationReport r)
    : Error(summarize(r)), report(std::move(r)) {}

ValidationReport validate(const QuasitoricModel& model) {
  ValidationReport report;
  const std::size_t m = model.size();
  if (m < 3) {
    report.failures.push_back({ValidationFinding::Kind::too_few_edges, 0,
                               "model has " + std::to_string(m) + " edges, need at least 3"});
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_primitive(model.edges[i])) {
      report.failures.push_back({ValidationFinding::Kind::non_primitive_edge, i,
                                 "edge " + std::to_string(i) + ": vector " +
                                     to_string(model.edges[i]) + " is not primitive"});
    }
  }
  bool all_positive = m >= 3;
  for (std::size_t i = 0; i < m && m >= 2; ++i) {
    const std::size_t next = (i + 1) % m;
    const Int d = det2(model.edges[i], model.edges[next]);
    if (d == 0) {
      report.failures.push_back({ValidationFinding::Kind::dependent_adjacent_pair, i,
                                 "vertex " + std::to_string(i) + ": adjacent edges " +
                                     std::to_string(i) + " and " + std::to_string(next) +
                                     " carry dependent vectors"});
    }
    if (d <= 0) {
      all_positive = false;
    }
  }
  report.valid = report.failures.empty();
  report.positively_omnioriented = all_positive;
  return report;
}

std::vector<Vertex> vertices(const QuasitoricModel& model) {
  const std::size_t m = model.size();
  std::vector<Vertex> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(make_vertex(model.edges[i], model.edges[(i + 1) % m], i));
  }
  return out;
}

QuasitoricModel model_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges")) {
    throw ParseError("expected an object with an \"edges\" key");
  }
  const json& edges = doc["edges"];
  if (!edges.is_array()) {
    throw ParseError("\"edges\" must be an array");
  }
  QuasitoricModel model;
  model.edges.reserve(edges.size());
  for (const json& entry : edges) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError("each edge must be a pair [x, y]");
    }
    model.edges.push_back({int_from_json(entry[0]), int_from_json(entry[1])});
  }
  return model;
}

QuasitoricModel parse_model(const std::string& text) {
  QuasitoricModel model = model_from_json_text(text);
  require_valid(model);
  return model;
}

std::string serialize_model(const QuasitoricModel& model) {
  json edges = json::array();
  for (const LatticeVector& e : model.edges) {
    edges.push_back(json::array({int_to_json(e.x), int_to_json(e.y)}));
  }
  json doc;
  doc["edges"] = std::move(edges);
  return doc.dump();
}

void require_valid(const QuasitoricModel& model) {
  ValidationReport report = validate(model);
  if (!report.valid) {
    throw ValidationError(std::move(report));
  }
}

void require_positively_omnioriented(const QuasitoricModel& model) {
  ValidationReport report = validate(model);
  if (!report.valid || !report.positively_omnioriented) {
    throw ValidationError(std::move(report));
  }
}

}  // namespace qtoric
