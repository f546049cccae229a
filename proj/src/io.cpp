#include "pvs/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pvs {

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const QuadExt& x) {
  if (x.is_rational()) return to_json(x.a());
  return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", x.d()}};
}

Json to_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational values must be strings \"p/q\" or integers");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const DomainError&) {
    throw ParseError("zero denominator");
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

QuadExt quadext_from_json(const Json& j, long d) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  if (!j.contains("a") || !j.contains("b")) throw ParseError("quadext values need \"a\" and \"b\"");
  const long dd = j.contains("d") ? j["d"].get<long>() : d;
  if (dd == 0) throw ParseError("quadext value without d");
  if (d != 0 && dd != d) throw ParseError("quadext value with d = " + std::to_string(dd) + " in a form over d = " +
                                          std::to_string(d));
  const Rational b = rational_from_json(j["b"]);
  if (b.is_zero()) return QuadExt(rational_from_json(j["a"]));
  try {
    return {rational_from_json(j["a"]), b, dd};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Blade parse_blade_key(const std::string& key, int dim, int degree) {
  std::vector<int> idx;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad index tuple \"" + key + "\"");
    }
    if (used != tok.size()) throw ParseError("bad index tuple \"" + key + "\"");
    idx.push_back(v);
  }
  if (static_cast<int>(idx.size()) != degree)
    throw ParseError("index tuple \"" + key + "\" has " + std::to_string(idx.size()) + " entries, expected " +
                     std::to_string(degree));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > dim) throw ParseError("index out of range in \"" + key + "\"");
    if (k > 0 && idx[k] <= idx[k - 1]) throw ParseError("indices not strictly increasing");
  }
  return make_blade(idx, dim);
}

namespace {

int int_field(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer()) throw ParseError(std::string("missing integer field \"") + name + "\"");
  return j[name].get<int>();
}

template <class T, class Conv>
AlternatingForm<T> read_coeffs(const Json& j, int dim, int degree, Conv conv) {
  AlternatingForm<T> x(dim, degree);
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) throw ParseError("missing object field \"coeffs\"");
  for (const auto& [key, v] : j["coeffs"].items()) x.set(parse_blade_key(key, dim, degree), conv(v));
  return x;
}

double double_from_json(const Json& v) {
  if (v.is_number()) return v.get<double>();
  return rational_from_json(v).to_double();
}

}  // namespace

AnyForm form_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("form file must be a JSON object");
  const int dim = int_field(j, "dim");
  const int degree = int_field(j, "degree");
  if (dim < 1 || dim > kMaxDim || degree < 0 || degree > dim) throw ParseError("bad form shape");
  const std::string scalar = j.value("scalar", std::string("rational"));
  if (scalar == "rational") return read_coeffs<Rational>(j, dim, degree, rational_from_json);
  if (scalar == "float") {
    return read_coeffs<double>(j, dim, degree, [](const Json& v) {
      if (!v.is_number()) throw ParseError("float values must be JSON numbers");
      return v.get<double>();
    });
  }
  if (scalar == "quadext") {
    const long d = j.contains("d") ? j["d"].get<long>() : 0;
    return read_coeffs<QuadExt>(j, dim, degree, [d](const Json& v) { return quadext_from_json(v, d); });
  }
  throw ParseError("unknown scalar \"" + scalar + "\"");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

AnyForm parse_form(const std::string& path) { return form_from_json(read_json_file(path)); }

PartialTarget target_from_json(const Json& j, FormCase c, int n) {
  PartialTarget y{c, n, {}};
  if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
    throw ParseError("target file needs an object field \"values\"");
  if (j.contains("dim") && j["dim"].get<int>() != y.dim()) throw ParseError("target dim does not match the case");
  if (j.contains("degree") && j["degree"].get<int>() != y.degree())
    throw ParseError("target degree does not match the case");
  for (const auto& [key, v] : j["values"].items())
    y.values[parse_blade_key(key, y.dim(), y.degree())] = double_from_json(v);
  try {
    y.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return y;
}

Json to_json(const PartialTarget& y) {
  Json values = Json::object();
  for (const auto& [b, v] : y.values) values[blade_key(b)] = v;
  return {{"dim", y.dim()}, {"degree", y.degree()}, {"values", values}};
}

Json to_json(const OrbitReport& r) {
  Json j{{"case", static_cast<int>(r.form_case)},
         {"real_orbit", to_string(r.real_orbit)},
         {"real_rank_positive", r.real_rank_positive}};
  if (r.field_kx) j["field_kx"] = *r.field_kx;
  return j;
}

Json to_json(const PointVerdict& v) {
  return {{"applicable", v.applicable}, {"rational", v.rational}, {"certified", v.certified}, {"label", v.label()}};
}

Json to_json(const IrrationalityReport& r) {
  Json j{{"case", static_cast<int>(r.form_case)}, {"mode", r.mode}, {"x", to_json(r.x)}};
  if (r.q) j["q"] = to_json(*r.q);
  if (r.e1) j["e1"] = to_json(*r.e1);
  if (r.e2) j["e2"] = to_json(*r.e2);
  if (r.gr) j["gr"] = to_json(*r.gr);
  return j;
}

Json to_json(const PerturbationCertificate& c) {
  Json aux = Json::object();
  for (const auto& [name, v] : c.aux) aux[name] = v;
  return {{"z", to_json(c.z)},
          {"z_exact", to_json(c.z_exact)},
          {"epsilon", c.epsilon},
          {"deviation", c.deviation},
          {"requested", to_string(c.requested)},
          {"orbit", to_json(c.orbit)},
          {"ok", c.ok()},
          {"nudges", c.nudges},
          {"doublings", c.doublings},
          {"aux", aux}};
}

Json to_json(const HypothesisReport& h) {
  return {{"pass", h.pass},
          {"warnings", h.warnings},
          {"orbit", to_json(h.orbit)},
          {"irrationality", to_json(h.irrationality)}};
}

Json to_json(const SearchResult& r, const AlternatingForm<double>& x) {
  const int n = r.best.h.n;
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    // u_i is column i of h
    Json u = Json::array();
    for (int k = 0; k < n; ++k) u.push_back(r.best.h(k, i));
    rows.push_back(std::move(u));
  }
  Json dev = Json::object();
  for (const auto& [b, v] : deviations(x, r.target, r.best.h)) dev[blade_key(b)] = v;
  Json j{{"basis", rows},
         {"word", r.best.word},
         {"objective", r.best.objective},
         {"success", r.success},
         {"depth_reached", r.depth_reached},
         {"evaluated", r.evaluated},
         {"deviations", dev},
         {"hypothesis", to_json(r.hypothesis)},
         {"trace", {{"note", "empirical beam-search trace; no convergence rate is claimed"},
                    {"best_so_far", r.trace},
                    {"level_best", r.level_best}}}};
  if (r.via_orbit) {
    j["via_orbit"] = to_json(*r.via_orbit);
    j["searched_target"] = to_json(r.target);
  }
  return j;
}

}  // namespace pvs
