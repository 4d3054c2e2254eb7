#include "itemq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace itemq::io {
namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return json(s).dump(); }

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw MalformedInput(std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::vector<std::string> parse_attributes(const json& doc) {
  const json& names = field(doc, "attributes");
  if (!names.is_array()) throw MalformedInput("'attributes' must be an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!n.is_string()) throw MalformedInput("attribute names must be strings");
    auto name = n.get<std::string>();
    if (name.empty() || name.find(',') != std::string::npos)
      throw MalformedInput("attribute name '" + name + "' is empty or contains a comma");
    if (!seen.insert(name).second) throw MalformedInput("attribute '" + name + "' declared twice");
    out.push_back(std::move(name));
  }
  if (out.size() > static_cast<std::size_t>(kMaxAttributes))
    throw MalformedInput("more than " + std::to_string(kMaxAttributes) + " attributes");
  return out;
}

int attribute_index(const std::vector<std::string>& attributes, const std::string& name) {
  for (std::size_t i = 0; i < attributes.size(); ++i)
    if (attributes[i] == name) return static_cast<int>(i);
  throw MalformedInput("itemset names undeclared attribute '" + name + "'");
}

Itemset itemset_from_json(const std::vector<std::string>& attributes, const json& names) {
  if (!names.is_array()) throw MalformedInput("an itemset must be an array of attribute names");
  std::vector<int> indices;
  for (const auto& n : names) {
    if (!n.is_string()) throw MalformedInput("itemset entries must be attribute names");
    indices.push_back(attribute_index(attributes, n.get<std::string>()));
  }
  return Itemset::from_indices(indices);
}

std::string itemset_json(const std::vector<std::string>& attributes, Itemset itemset) {
  std::string out = "[";
  bool first = true;
  for (int a : itemset.indices()) {
    out += (first ? "" : ", ") + quoted(attributes.at(static_cast<std::size_t>(a)));
    first = false;
  }
  return out + "]";
}

std::string names_json(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + quoted(names[i]);
  return out + "]";
}

Rational rational_field(const json& value, const std::string& what) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw MalformedInput(what + " must be a rational string such as \"3/5\" or \"0.6\"");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

State parse_state(std::string_view text, std::size_t width) {
  if (text.size() != width)
    throw MalformedInput("state '" + std::string(text) + "' does not have " + std::to_string(width) +
                         " characters");
  return BinaryVector::parse(text).bits();
}

std::string state_string(State s, int width) { return BinaryVector(s, width).str(); }

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw MalformedInput("instance file must hold a JSON object");
  Instance out;
  out.attributes = parse_attributes(doc);
  const json& constraints = field(doc, "constraints");
  if (!constraints.is_array()) throw MalformedInput("'constraints' must be an array");
  std::vector<Itemset> members;
  std::vector<Rational> values;
  for (const auto& c : constraints) {
    if (!c.is_object()) throw MalformedInput("each constraint must be an object");
    members.push_back(itemset_from_json(out.attributes, field(c, "itemset")));
    const Rational f = rational_field(field(c, "frequency"), "frequency");
    if (f < 0 || f > 1)
      throw MalformedInput("frequency " + to_string(f) + " of {" +
                           itemset_names(out.attributes, members.back()) + "} is outside [0, 1]");
    values.push_back(f);
  }
  out.family = ItemsetFamily(std::move(members), static_cast<int>(out.attributes.size()));
  out.theta = FrequencyAssignment(std::move(values));
  validate_alignment(out.family, out.theta);
  if (doc.contains("query") && !doc.at("query").is_null())
    out.query = itemset_from_json(out.attributes, doc.at("query"));
  if (doc.contains("threshold") && !doc.at("threshold").is_null())
    out.threshold = rational_field(doc.at("threshold"), "threshold");
  return out;
}

Instance read_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string emit_instance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n  \"attributes\": " << names_json(instance.attributes) << ",\n";
  out << "  \"constraints\": [";
  for (std::size_t i = 0; i < instance.family.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"itemset\": " << itemset_json(instance.attributes, instance.family[i])
        << ", \"frequency\": " << quoted(to_string(instance.theta[i])) << "}";
  }
  out << (instance.family.size() ? "\n  ]" : "]");
  if (instance.query) out << ",\n  \"query\": " << itemset_json(instance.attributes, *instance.query);
  if (instance.threshold) out << ",\n  \"threshold\": " << quoted(to_string(*instance.threshold));
  out << "\n}\n";
  return out.str();
}

Instance to_instance(const ReductionInstance& reduction) {
  Instance out;
  out.attributes = reduction.attribute_names;
  out.family = reduction.family;
  out.theta = reduction.theta;
  out.query = reduction.query;
  if (reduction.mode == ReductionMode::max_query) out.threshold = reduction.threshold;
  return out;
}

Itemset parse_itemset(const std::vector<std::string>& attributes, std::string_view names) {
  std::vector<int> indices;
  std::size_t start = 0;
  while (start <= names.size() && !names.empty()) {
    const auto comma = names.find(',', start);
    const auto token = names.substr(start, comma == std::string_view::npos ? names.npos : comma - start);
    if (token.empty()) throw MalformedInput("empty attribute name in '" + std::string(names) + "'");
    indices.push_back(attribute_index(attributes, std::string(token)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Itemset::from_indices(indices);
}

std::string itemset_names(const std::vector<std::string>& attributes, Itemset itemset) {
  std::string out;
  for (int a : itemset.indices()) {
    if (!out.empty()) out += ",";
    out += static_cast<std::size_t>(a) < attributes.size() ? attributes[static_cast<std::size_t>(a)]
                                                            : "#" + std::to_string(a);
  }
  return out;
}

std::string emit_distribution(const ExactDistribution& p, const std::vector<std::string>& attributes) {
  std::ostringstream out;
  out << "{\n  \"attributes\": " << names_json(attributes) << ",\n  \"mode\": \"exact\",\n  \"entries\": [";
  bool first = true;
  p.for_each([&](State s, const Rational& m) {
    out << (first ? "\n" : ",\n") << "    {\"state\": \"" << state_string(s, p.attribute_count())
        << "\", \"mass\": " << quoted(to_string(m)) << "}";
    first = false;
  });
  out << (first ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

std::string emit_distribution(const FloatDistribution& p, const std::vector<std::string>& attributes,
                              double min_mass) {
  std::ostringstream out;
  out << "{\n  \"attributes\": " << names_json(attributes) << ",\n  \"mode\": \"float\",\n  \"entries\": [";
  bool first = true;
  char buf[32];
  p.for_each([&](State s, const double& m) {
    if (m <= min_mass) return;
    std::snprintf(buf, sizeof buf, "%.17g", m);
    out << (first ? "\n" : ",\n") << "    {\"state\": \"" << state_string(s, p.attribute_count())
        << "\", \"mass\": " << buf << "}";
    first = false;
  });
  out << (first ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

DistributionFile parse_distribution(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw MalformedInput("distribution file must hold a JSON object");
  DistributionFile out;
  out.attributes = parse_attributes(doc);
  const int k = static_cast<int>(out.attributes.size());
  const json& mode = field(doc, "mode");
  const json& entries = field(doc, "entries");
  if (!entries.is_array()) throw MalformedInput("'entries' must be an array");

  if (mode == "exact") {
    std::vector<ExactDistribution::Entry> list;
    for (const auto& e : entries) {
      const Rational m = rational_field(field(e, "mass"), "mass");
      if (m < 0) throw MalformedInput("negative mass " + to_string(m));
      list.emplace_back(parse_state(field(e, "state").get<std::string>(), out.attributes.size()), m);
    }
    auto p = ExactDistribution::sparse(k, std::move(list));
    if (p.total_mass() != 1) throw MalformedInput("masses sum to " + to_string(p.total_mass()) + ", not 1");
    out.distribution = std::move(p);
  } else if (mode == "float") {
    std::vector<FloatDistribution::Entry> list;
    for (const auto& e : entries) {
      const json& mass = field(e, "mass");
      if (!mass.is_number()) throw MalformedInput("float masses must be JSON numbers");
      const double m = mass.get<double>();
      if (!(m >= 0.0)) throw MalformedInput("negative or NaN mass");
      list.emplace_back(parse_state(field(e, "state").get<std::string>(), out.attributes.size()), m);
    }
    auto p = FloatDistribution::sparse(k, std::move(list));
    if (std::abs(p.total_mass() - 1.0) > 1e-9) throw MalformedInput("masses do not sum to 1 within 1e-9");
    out.distribution = std::move(p);
  } else {
    throw MalformedInput("'mode' must be \"exact\" or \"float\"");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << content;
}

}  // namespace itemq::io
