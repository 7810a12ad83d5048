#include "pga/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "pga/error.hpp"

namespace pga {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::parse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing key \"" + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, std::size_t count, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of numbers");
  if (v.size() != count) fail(where, "expected " + std::to_string(count) + " entries, got " + std::to_string(v.size()));
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "/" + std::to_string(i)));
  return out;
}

Multivector blades(const json& v, const Signature& sig, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object mapping blade names to coefficients");
  std::vector<Multivector::Term> terms;
  for (const auto& [key, coeff] : v.items()) {
    const auto b = parse_blade_name(key, sig);
    if (!b) fail(where + "/" + key, "malformed blade name \"" + key + "\" (need \"e\" + strictly ascending indices <= n)");
    terms.emplace_back(*b, number(coeff, where + "/" + key));
  }
  return Multivector(sig, std::move(terms));
}

GeometricObject object(const json& v, const Signature& sig, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object descriptor");
  const json& kind_v = member(v, "kind", where);
  if (!kind_v.is_string()) fail(where + "/kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  const auto n = static_cast<std::size_t>(sig.n());
  try {
    if (kind == "point") {
      const double w = v.contains("weight") ? number(v["weight"], where + "/weight") : 1.0;
      return point(numbers(member(v, "coords", where), n, where + "/coords"), w);
    }
    if (kind == "ideal_point") return ideal_point(numbers(member(v, "direction", where), n, where + "/direction"));
    if (kind == "hyperplane") {
      const double offset = v.contains("offset") ? number(v["offset"], where + "/offset") : 0.0;
      return hyperplane(numbers(member(v, "normal", where), n, where + "/normal"), offset);
    }
    if (kind == "flat" || kind == "raw") {
      auto obj = GeometricObject::from_blade(blades(member(v, "blades", where), sig, where + "/blades"));
      if (kind == "flat" && obj.role() != Role::flat)
        fail(where, "flat needs a grade strictly between 1 and " + std::to_string(sig.n()));
      return obj;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    throw Error(e.kind(), where + ": " + e.what());
  }
  fail(where + "/kind", "unknown object kind \"" + kind + "\"");
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double x) {
  return std::isinf(x) ? json_string(format_number(x)) : format_number(x);
}

double read_number(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "+inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    fail(where, "expected a number, \"+inf\" or \"-inf\"");
  }
  return number(v, where);
}

std::vector<std::pair<std::string, double>> named_terms(const Multivector& m) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [b, c] : m.terms()) out.emplace_back(blade_name(b), c);
  return out;
}

// Display width of a UTF-8 string, counting code points.
std::size_t width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

std::string pad(std::string_view s, std::size_t w) {
  std::string out(s);
  for (std::size_t i = width(s); i < w; ++i) out += ' ';
  return out;
}

}  // namespace

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int exit_code(ErrorKind kind) noexcept {
  if (is_classification_error(kind)) return 2;
  if (kind == ErrorKind::indeterminate) return 3;
  return 1;
}

std::string to_json(const Error& e) {
  return "{\"error\": " + json_string(to_string(e.kind())) + ", \"message\": " + json_string(e.what()) + "}\n";
}

Quad InputDocument::quad() const {
  if (objects.size() != 4) throw Error(ErrorKind::parse, "/objects: expected exactly four objects");
  return {objects[0], objects[1], objects[2], objects[3]};
}

InputDocument parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object");
  InputDocument out;
  const json& dim = member(doc, "dimension", "");
  if (!dim.is_number_integer() || dim.get<long long>() < 1 || dim.get<long long>() > 30)
    fail("/dimension", "expected an integer between 1 and 30");
  out.dimension = dim.get<int>();
  if (doc.contains("tolerance")) {
    const double t = number(doc["tolerance"], "/tolerance");
    if (!(t > 0.0)) fail("/tolerance", "expected a positive number");
    out.tolerance = t;
  }
  const json& objs = member(doc, "objects", "");
  if (!objs.is_array()) fail("/objects", "expected an array");
  if (objs.size() != 4) fail("/objects", "expected exactly four objects, got " + std::to_string(objs.size()));
  const Signature sig(out.dimension);
  for (std::size_t i = 0; i < objs.size(); ++i) out.objects.push_back(object(objs[i], sig, "/objects/" + std::to_string(i)));
  return out;
}

ReportDocument make_report(const CrossRatioResult& r, int dimension, double tol) {
  ReportDocument d;
  d.dimension = dimension;
  d.tolerance = tol;
  d.value = r.value;
  d.configuration = std::string(name(r.configuration.variant));
  d.dualize_operands = r.configuration.op.dualize_operands;
  d.product = std::string(symbol(r.configuration.op.product));
  d.operator_description = describe(r.configuration.op);
  d.common_blade = named_terms(r.common_blade);
  d.max_residual = r.max_residual;
  d.permutation = r.permutation;
  return d;
}

ReportDocument make_report(const PencilAnalysis& a, int dimension, double tol) {
  ReportDocument d;
  d.command = "classify";
  d.dimension = dimension;
  d.tolerance = tol;
  d.configuration = std::string(name(a.configuration.variant));
  d.dualize_operands = a.configuration.op.dualize_operands;
  d.product = std::string(symbol(a.configuration.op.product));
  d.operator_description = describe(a.configuration.op);
  d.common_blade = named_terms(a.common_blade);
  d.max_residual = a.max_residual;
  return d;
}

std::string to_json(const ReportDocument& r) {
  std::string s = "{\n";
  s += "  \"command\": " + json_string(r.command) + ",\n";
  s += "  \"dimension\": " + std::to_string(r.dimension) + ",\n";
  s += "  \"tolerance\": " + json_number(r.tolerance) + ",\n";
  if (r.value) s += "  \"value\": " + json_number(*r.value) + ",\n";
  s += "  \"configuration\": " + json_string(r.configuration) + ",\n";
  s += "  \"operator\": {\"dualize_operands\": " + std::string(r.dualize_operands ? "true" : "false") +
       ", \"product\": " + json_string(r.product) + ", \"description\": " + json_string(r.operator_description) + "},\n";
  s += "  \"common_blade\": {";
  for (std::size_t i = 0; i < r.common_blade.size(); ++i)
    s += (i ? ", " : "") + json_string(r.common_blade[i].first) + ": " + json_number(r.common_blade[i].second);
  s += "},\n";
  s += "  \"max_residual\": " + json_number(r.max_residual) + ",\n";
  s += "  \"permutation\": [";
  for (int i = 0; i < 4; ++i) s += (i ? ", " : "") + std::to_string(r.permutation[i]);
  s += "]\n}\n";
  return s;
}

ReportDocument parse_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object");
  ReportDocument r;
  auto str = [&](const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
  };
  r.command = str(member(doc, "command", ""), "/command");
  const json& dim = member(doc, "dimension", "");
  if (!dim.is_number_integer()) fail("/dimension", "expected an integer");
  r.dimension = dim.get<int>();
  r.tolerance = read_number(member(doc, "tolerance", ""), "/tolerance");
  if (doc.contains("value")) r.value = read_number(doc["value"], "/value");
  r.configuration = str(member(doc, "configuration", ""), "/configuration");
  const json& op = member(doc, "operator", "");
  const json& dual = member(op, "dualize_operands", "/operator");
  if (!dual.is_boolean()) fail("/operator/dualize_operands", "expected a boolean");
  r.dualize_operands = dual.get<bool>();
  r.product = str(member(op, "product", "/operator"), "/operator/product");
  r.operator_description = str(member(op, "description", "/operator"), "/operator/description");
  const json& blade = member(doc, "common_blade", "");
  if (!blade.is_object()) fail("/common_blade", "expected an object");
  // nlohmann sorts keys; the emitter writes blades in ascending mask order.
  std::map<std::uint32_t, std::pair<std::string, double>> ordered;
  const Signature sig(std::max(1, r.dimension));
  for (const auto& [key, v] : blade.items()) {
    const auto b = parse_blade_name(key, sig);
    if (!b) fail("/common_blade/" + key, "malformed blade name");
    ordered[b->bits] = {key, read_number(v, "/common_blade/" + key)};
  }
  for (auto& [bits, term] : ordered) r.common_blade.push_back(term);
  r.max_residual = read_number(member(doc, "max_residual", ""), "/max_residual");
  const json& perm = member(doc, "permutation", "");
  if (!perm.is_array() || perm.size() != 4) fail("/permutation", "expected four indices");
  for (int i = 0; i < 4; ++i) {
    if (!perm[i].is_number_integer()) fail("/permutation/" + std::to_string(i), "expected an integer");
    r.permutation[i] = perm[i].get<int>();
  }
  return r;
}

std::string to_text(const ReportDocument& r) {
  std::string s;
  if (r.value) s += "value          " + format_number(*r.value) + "\n";
  s += "configuration  " + r.configuration + "\n";
  s += "operator       " + r.operator_description + "\n";
  s += "common blade   ";
  if (r.common_blade.empty()) s += "0";
  for (std::size_t i = 0; i < r.common_blade.size(); ++i)
    s += (i ? " + " : "") + format_number(r.common_blade[i].second) + "*" + r.common_blade[i].first;
  s += "\nmax residual   " + format_number(r.max_residual) + "\n";
  if (r.permutation != std::array<int, 4>{0, 1, 2, 3}) {
    s += "permutation   ";
    for (int p : r.permutation) s += " " + std::to_string(p);
    s += "\n";
  }
  return s;
}

std::string to_json(const VerifyReport& r) {
  std::string s = "{\n";
  s += "  \"dimension\": " + std::to_string(r.options.dim) + ",\n";
  s += "  \"trials\": " + std::to_string(r.options.trials) + ",\n";
  s += "  \"seed\": " + std::to_string(r.options.seed) + ",\n";
  s += "  \"tolerance\": " + json_number(r.options.tol) + ",\n";
  s += "  \"exact_tolerance\": " + json_number(r.options.exact_tol) + ",\n";
  s += "  \"rows\": [";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    s += std::string(i ? "," : "") + "\n    {\"suite\": " + json_string(name(row.suite)) +
         ", \"configuration\": " + json_string(name(row.variant)) + ", \"trials\": " + std::to_string(row.trials) +
         ", \"passed\": " + std::to_string(row.passed) + ", \"worst\": " + json_number(row.worst);
    if (!row.first_failure.empty()) s += ", \"first_failure\": " + json_string(row.first_failure);
    s += "}";
  }
  s += r.rows.empty() ? "],\n" : "\n  ],\n";
  s += "  \"passed\": " + std::string(r.all_passed() ? "true" : "false") + "\n}\n";
  return s;
}

std::string to_text(const VerifyReport& r) {
  char head[160];
  std::snprintf(head, sizeof head, "verify: dim %d, %d trials per row, seed %llu, tol %g (exact %g)\n",
                r.options.dim, r.options.trials, static_cast<unsigned long long>(r.options.seed),
                r.options.tol, r.options.exact_tol);
  std::string s = head;
  if (r.rows.empty()) return s + "no rows\n";
  s += pad("suite", 16) + pad("configuration", 34) + pad("passed", 12) + "worst\n";
  for (const auto& row : r.rows) {
    s += pad(name(row.suite), 16) + pad(name(row.variant), 34) +
         pad(std::to_string(row.passed) + "/" + std::to_string(row.trials), 12) + format_number(row.worst);
    if (!row.ok()) s += "  FAIL " + row.first_failure;
    s += "\n";
  }
  s += r.all_passed() ? "all suites passed\n" : "FAILURES present\n";
  return s;
}

namespace {

struct RowLabel {
  const char* objects;
  const char* letter;
  const char* support;
};

RowLabel label(ConfigVariant v) {
  switch (v) {
    case ConfigVariant::finite_points_collinear: return {"finite points", "P", "finite support line"};
    case ConfigVariant::ideal_points_on_ideal_line: return {"ideal points", "V", "support line at infinity"};
    case ConfigVariant::hyperplanes_meet_off_origin: return {"hyperplanes", "Π", "axis off the origin"};
    case ConfigVariant::hyperplanes_meet_through_origin: return {"hyperplanes", "Π", "axis through the origin"};
    case ConfigVariant::flats_meet_off_origin: return {"flats", "F", "finite meet off the origin"};
    case ConfigVariant::flats_through_origin: return {"flats", "F", "meet through the origin"};
    case ConfigVariant::finite_flats_parallel: return {"finite flats", "F", "parallel, meet at infinity"};
    case ConfigVariant::ideal_flats_secant: return {"ideal flats", "F", "secant, meet at infinity"};
  }
  return {"?", "?", "?"};
}

std::string formula(const char* letter, bool dualized, std::string_view op) {
  const std::string star = dualized ? "⋆" : "";
  return std::string(letter) + "_i" + star + " " + std::string(op) + " " + letter + "_j" + star;
}

}  // namespace

std::string render_tables(int dimension) {
  if (dimension < 2) throw Error(ErrorKind::invalid_argument, "tables need --dim >= 2");
  const int n = dimension;
  std::string s;
  for (int table = 1; table <= 2; ++table) {
    s += table == 1 ? "Table 1: classical pairwise measures, n = " : "Table 2: unified pairwise measures, n = ";
    s += std::to_string(n) + "\n";
    s += "  " + pad("configuration", 33) + pad("objects", 15) + pad("grade", 7) + pad("support", 29) +
         pad("measure", 14) + (table == 1 ? "dual row" : "dispatch") + "\n";
    for (ConfigVariant v : kAllVariants) {
      const Configuration cfg = configuration(v);
      const RowLabel l = label(v);
      const auto g = object_grade(v, n);
      const std::string op = table == 1 ? std::string(symbol(classical_product(cfg, g.value_or(0), n)))
                                        : std::string(symbol(cfg.op.product));
      s += "  " + pad(name(v), 33) + pad(l.objects, 15) + pad(g ? std::to_string(*g) : "k", 7) +
           pad(l.support, 29) + pad(formula(l.letter, cfg.op.dualize_operands, op), 14) +
           (table == 1 ? std::string(name(dual_partner(v))) : describe(cfg.op)) + "\n";
    }
    if (table == 1) s += "\n";
  }
  return s;
}

}  // namespace pga
