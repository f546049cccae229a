#pragma once

// JSON serialization of scalars, forms, targets and reports.

#include <json.hpp>

#include <string>
#include <variant>

#include "pvs/cayley_dickson.hpp"
#include "pvs/invariants.hpp"
#include "pvs/lie_stab.hpp"
#include "pvs/multilinear.hpp"
#include "pvs/orbit_class.hpp"
#include "pvs/perturb.hpp"
#include "pvs/scalars.hpp"
#include "pvs/search.hpp"

namespace pvs {

using Json = nlohmann::json;

/// Malformed input files. Messages are distinct per cause.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AnyForm = std::variant<AlternatingForm<Rational>, AlternatingForm<QuadExt>, AlternatingForm<double>>;

Json to_json(const Rational& q);
Json to_json(const QuadExt& x);
inline Json to_json(double v) { return v; }
Json to_json(const std::complex<double>& z);

Rational rational_from_json(const Json& j);
QuadExt quadext_from_json(const Json& j, long d);

template <class T>
Json to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

/// "1,2,3" -> blade, checking count, range and strict increase.
Blade parse_blade_key(const std::string& key, int dim, int degree);

template <class T>
Json to_json(const AlternatingForm<T>& x) {
  Json coeffs = Json::object();
  for (const auto& [b, c] : x.coeffs()) coeffs[blade_key(b)] = to_json(c);
  Json j{{"dim", x.dim()}, {"degree", x.degree()}, {"scalar", ScalarTraits<T>::name}, {"coeffs", coeffs}};
  if constexpr (std::is_same_v<T, QuadExt>) {
    long d = 0;
    for (const auto& [b, c] : x.coeffs())
      if (!c.is_rational()) d = c.d();
    if (d != 0) j["d"] = d;
  }
  return j;
}

AnyForm form_from_json(const Json& j);
Json read_json_file(const std::string& path);
AnyForm parse_form(const std::string& path);

/// {"values": {"1,2,3": 0.5, ...}} with optional "dim"/"degree" checked
/// against the case. Values may be numbers or rational strings.
PartialTarget target_from_json(const Json& j, FormCase c, int n);
Json to_json(const PartialTarget& y);

Json to_json(const OrbitReport& r);
Json to_json(const PointVerdict& v);
Json to_json(const IrrationalityReport& r);
Json to_json(const PerturbationCertificate& c);
Json to_json(const HypothesisReport& h);
Json to_json(const SearchResult& r, const AlternatingForm<double>& x);

template <class T>
Json to_json(const InvariantReport<T>& r) {
  Json j{{"case", static_cast<int>(r.form_case)}};
  if (r.form_case != FormCase::case3) j["delta"] = to_json(r.delta);
  if (r.delta2) {
    j["delta_cube"] = to_json(r.delta2->cube);
    j["delta_exact"] = r.delta2->value.has_value();
    if constexpr (!FloatScalar<T>)
      if (!r.delta2->value) j["delta"] = r.delta2->approx;
  }
  if (r.s_matrix) j["s_matrix"] = to_json(*r.s_matrix);
  if (r.q_form) j["q_gram"] = to_json(r.q_form->gram);
  if (r.pfaffian) j["pfaffian"] = to_json(*r.pfaffian);
  return j;
}

template <class T>
Json to_json(const LieSubalgebra<T>& l) {
  Json basis = Json::array();
  for (const auto& m : l.basis) basis.push_back(to_json(m));
  return {{"dim", l.dim()}, {"n", l.n}, {"basis", basis}};
}

template <class T>
Json to_json(const AlgebraStructure<T>& a) {
  Json table = Json::array();
  for (const auto& row : a.table()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    table.push_back(std::move(r));
  }
  return {{"name", a.name()}, {"dim", a.dim()}, {"unit", a.unit_index()}, {"table", table},
          {"norm_gram", to_json(a.norm_form().gram)}};
}

}  // namespace pvs
