#include "mtc/theories.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "mtc/error.hpp"

namespace mtc {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

TheorySpec parse_theory_spec(const std::string& text) {
  TheorySpec spec;
  if (text.rfind("builtin:", 0) != 0) {
    spec.kind = TheorySpec::Kind::file;
    spec.path = text;
    return spec;
  }
  spec.kind = TheorySpec::Kind::builtin;
  std::string rest = text.substr(8);
  const auto q = rest.find('?');
  std::string params;
  if (q != std::string::npos) {
    params = rest.substr(q + 1);
    rest = rest.substr(0, q);
  }
  spec.builtin_name = rest;
  if (rest == "su2") {
    if (params.rfind("k=", 0) != 0)
      fail(errc::usage, "builtin:su2 requires a level parameter, e.g. builtin:su2?k=3");
    try {
      spec.level = std::stoll(params.substr(2));
    } catch (const std::exception&) {
      fail(errc::usage, "could not parse su2 level in '" + text + "'");
    }
  } else if (rest == "ising" || rest == "trivial") {
    if (!params.empty()) fail(errc::usage, "builtin:" + rest + " takes no parameters");
  } else {
    fail(errc::usage, "unknown builtin theory '" + rest + "' (expected su2, ising, trivial)");
  }
  return spec;
}

ModularData load_theory(const TheorySpec& spec, std::vector<std::string>* warnings) {
  if (spec.kind == TheorySpec::Kind::builtin) {
    if (spec.builtin_name == "su2") return builtin_su2(spec.level);
    if (spec.builtin_name == "ising") return builtin_ising();
    return builtin_trivial();
  }
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open theory file '" + spec.path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str(), warnings);
}

ModularData builtin_su2(std::int64_t k) {
  if (k < 1) fail(errc::usage, "su2 level must be >= 1 (use builtin:trivial for k = 0)");
  const std::size_t m = static_cast<std::size_t>(k) + 1;
  ModularData md;
  md.name = "su2_k" + std::to_string(k);
  md.vacuum = 0;
  md.central_charge = Rational(3 * k, k + 2);
  md.s = CMatrix(m);
  const double norm = std::sqrt(2.0 / static_cast<double>(k + 2));
  for (std::size_t j = 0; j < m; ++j) {
    md.labels.push_back(std::to_string(j));
    md.weights.push_back(Rational(static_cast<std::int64_t>(j) * (static_cast<std::int64_t>(j) + 2),
                                  4 * (k + 2))
                             .mod1());
    for (std::size_t l = 0; l < m; ++l)
      md.s(j, l) = norm * std::sin(std::numbers::pi * static_cast<double>((j + 1) * (l + 1)) /
                                   static_cast<double>(k + 2));
  }
  return md;
}

ModularData builtin_ising() {
  ModularData md;
  md.name = "ising";
  md.labels = {"1", "psi", "sigma"};
  md.vacuum = 0;
  md.central_charge = Rational(1, 2);
  md.weights = {Rational(0, 1), Rational(1, 2), Rational(1, 16)};
  md.s = CMatrix(3);
  const double r = std::sqrt(2.0);
  const double e[3][3] = {{1, 1, r}, {1, 1, -r}, {r, -r, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) md.s(i, j) = 0.5 * e[i][j];
  return md;
}

ModularData builtin_trivial() {
  ModularData md;
  md.name = "trivial";
  md.labels = {"1"};
  md.vacuum = 0;
  md.central_charge = Rational(0, 1);
  md.weights = {Rational(0, 1)};
  md.s = CMatrix(1);
  md.s(0, 0) = 1.0;
  return md;
}

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j["num"].is_number_integer() || !j["den"].is_number_integer())
    fail(errc::schema_error, "field '" + field + "' must be an object {\"num\": int, \"den\": int}");
  const std::int64_t den = j["den"].get<std::int64_t>();
  if (den <= 0) fail(errc::schema_error, "field '" + field + "' must have positive denominator");
  return Rational(j["num"].get<std::int64_t>(), den);
}

}  // namespace

ModularData parse_theory(std::string_view text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, "JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail(errc::schema_error, "top-level document must be an object");
  for (const char* key : {"name", "labels", "vacuum", "central_charge", "weights", "S"})
    if (!doc.contains(key)) fail(errc::schema_error, std::string("missing field '") + key + "'");
  for (const auto& [key, _] : doc.items())
    if (key != "name" && key != "labels" && key != "vacuum" && key != "central_charge" &&
        key != "weights" && key != "S")
      fail(errc::schema_error, "unknown field '" + key + "'");

  ModularData md;
  if (!doc["name"].is_string()) fail(errc::schema_error, "field 'name' must be a string");
  md.name = doc["name"].get<std::string>();

  if (!doc["labels"].is_array() || doc["labels"].empty())
    fail(errc::schema_error, "field 'labels' must be a non-empty array of strings");
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) fail(errc::schema_error, "field 'labels' must contain strings");
    md.labels.push_back(l.get<std::string>());
  }
  for (std::size_t i = 0; i < md.labels.size(); ++i)
    for (std::size_t j = i + 1; j < md.labels.size(); ++j)
      if (md.labels[i] == md.labels[j])
        fail(errc::schema_error, "field 'labels' contains duplicate name '" + md.labels[i] + "'");
  const std::size_t m = md.labels.size();

  if (!doc["vacuum"].is_number_unsigned() && !doc["vacuum"].is_number_integer())
    fail(errc::schema_error, "field 'vacuum' must be a label index");
  const std::int64_t vac = doc["vacuum"].get<std::int64_t>();
  if (vac < 0 || static_cast<std::size_t>(vac) >= m)
    fail(errc::schema_error, "field 'vacuum' is out of range");
  md.vacuum = static_cast<std::size_t>(vac);

  md.central_charge = parse_rational_field(doc["central_charge"], "central_charge");

  if (!doc["weights"].is_array() || doc["weights"].size() != m)
    fail(errc::schema_error, "field 'weights' must list one rational per label");
  for (std::size_t i = 0; i < m; ++i) {
    Rational w = parse_rational_field(doc["weights"][i], "weights");
    Rational reduced = w.mod1();
    if (reduced != w) {
      if (warnings)
        warnings->push_back("weight " + w.str() + " of label '" + md.labels[i] +
                            "' reduced mod 1 to " + reduced.str());
      w = reduced;
    }
    md.weights.push_back(w);
  }

  if (!doc["S"].is_array() || doc["S"].size() != m * m)
    fail(errc::schema_error, "field 'S' must be a row-major list of rank^2 [re, im] pairs");
  md.s = CMatrix(m);
  for (std::size_t i = 0; i < m * m; ++i) {
    const auto& e = doc["S"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      fail(errc::schema_error, "field 'S' entries must be [re, im] number pairs");
    md.s(i / m, i % m) = Complex{e[0].get<double>(), e[1].get<double>()};
  }
  return md;
}

std::string serialize_theory(const ModularData& md) {
  // Hand-rolled emitter: fixed key order and %.17g floats keep the output
  // byte-identical across runs and round-trippable.
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << nlohmann::json(md.name).dump() << ",\n";
  os << "  \"labels\": [";
  for (std::size_t i = 0; i < md.labels.size(); ++i)
    os << (i ? ", " : "") << nlohmann::json(md.labels[i]).dump();
  os << "],\n";
  os << "  \"vacuum\": " << md.vacuum << ",\n";
  os << "  \"central_charge\": {\"num\": " << md.central_charge.num
     << ", \"den\": " << md.central_charge.den << "},\n";
  os << "  \"weights\": [";
  for (std::size_t i = 0; i < md.weights.size(); ++i)
    os << (i ? ", " : "") << "{\"num\": " << md.weights[i].num << ", \"den\": " << md.weights[i].den
       << "}";
  os << "],\n";
  os << "  \"S\": [\n";
  const std::size_t m = md.rank();
  for (std::size_t i = 0; i < m; ++i) {
    os << "    ";
    for (std::size_t j = 0; j < m; ++j) {
      const Complex e = md.s(i, j);
      os << "[" << fmt17(e.real()) << ", " << fmt17(e.imag()) << "]";
      if (i * m + j + 1 < m * m) os << ",";
      if (j + 1 < m) os << " ";
    }
    os << "\n";
  }
  os << "  ]\n";
  os << "}\n";
  return os.str();
}

}  // namespace mtc
