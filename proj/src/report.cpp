#include "cyhopf/report.hpp"

namespace cyhopf {

namespace {

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
  if (v)
    j[key] = *v;
  else
    j[key] = nullptr;
}

template <class T>
void get_optional(const Json& j, const char* key, std::optional<T>& v) {
  if (j.at(key).is_null())
    v.reset();
  else
    v = j.at(key).get<T>();
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto i : v) out.push_back(i + 1);
  return out;
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto i : v) {
    if (i == 0) throw Error("indices are 1-based");
    out.push_back(i - 1);
  }
  return out;
}

}  // namespace

std::string to_string(AlgebraKind k) { return k == AlgebraKind::pointed ? "pointed" : "nichols"; }

std::string to_string(IsomorphismResult::Status s) {
  switch (s) {
    case IsomorphismResult::Status::found: return "found";
    case IsomorphismResult::Status::none: return "none";
    case IsomorphismResult::Status::inconclusive: return "inconclusive";
  }
  return "";
}

std::string to_string(ClassificationResult::Status s) {
  switch (s) {
    case ClassificationResult::Status::classified: return "classified";
    case ClassificationResult::Status::not_cy: return "not_cy";
    case ClassificationResult::Status::dimension_too_large: return "dimension_too_large";
  }
  return "";
}

void to_json(Json& j, const Monomial& m) { j = m.to_string(); }
void from_json(const Json& j, Monomial& m) { m = Monomial::parse(j.get<std::string>()); }

void to_json(Json& j, const IntMatrix& m) {
  j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
}

void from_json(const Json& j, IntMatrix& m) {
  const auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
  m = IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

void to_json(Json& j, const DatumData& d) {
  j = Json::object();
  j["group_rank"] = d.group_rank;
  j["parameters"] = d.parameters;
  j["cartan"] = d.cartan;
  j["g"] = d.g;
  j["chi"] = d.chi;
  Json linking = Json::array();
  for (const auto& [a, b] : d.linking) linking.push_back({a + 1, b + 1});
  j["linking"] = linking;
}

void from_json(const Json& j, DatumData& d) {
  d.group_rank = j.at("group_rank").get<std::size_t>();
  d.parameters = j.at("parameters").get<std::vector<std::string>>();
  d.cartan = j.at("cartan").get<std::vector<std::vector<std::int64_t>>>();
  d.g = j.at("g").get<std::vector<ExponentVector>>();
  d.chi = j.at("chi").get<std::vector<Character>>();
  d.linking.clear();
  for (const auto& p : j.at("linking")) {
    const auto v = zero_based(p.get<std::vector<std::size_t>>());
    if (v.size() != 2) throw Error("linking entries are pairs");
    d.linking.insert({v[0], v[1]});
  }
}

void to_json(Json& j, const DiagonalAutomorphism& a) {
  j = Json::object();
  j["x_scalars"] = a.x_scalars;
  j["y_scalars"] = a.y_scalars;
}

void from_json(const Json& j, DiagonalAutomorphism& a) {
  a.x_scalars = j.at("x_scalars").get<std::vector<Monomial>>();
  a.y_scalars = j.at("y_scalars").get<std::vector<Monomial>>();
}

void to_json(Json& j, const CYReport& r) {
  j = Json::object();
  j["algebra"] = to_string(r.algebra);
  j["dimension"] = r.dimension;
  j["is_cy"] = r.is_cy;
  j["integral_character"] = r.integral_character;
  j["nakayama"] = r.nakayama;
  put_optional(j, "conjugator", r.conjugator);
  j["failures"] = r.failures;
  j["dualizing_shift"] = r.dualizing_shift;
  j["dualizing_complex"] = r.dualizing_complex;
}

void from_json(const Json& j, CYReport& r) {
  const auto kind = j.at("algebra").get<std::string>();
  if (kind != "pointed" && kind != "nichols") throw Error("unknown algebra kind '" + kind + "'");
  r.algebra = kind == "pointed" ? AlgebraKind::pointed : AlgebraKind::nichols;
  r.dimension = j.at("dimension").get<std::int64_t>();
  r.is_cy = j.at("is_cy").get<bool>();
  r.integral_character = j.at("integral_character").get<Character>();
  r.nakayama = j.at("nakayama").get<DiagonalAutomorphism>();
  get_optional(j, "conjugator", r.conjugator);
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.dualizing_shift = j.at("dualizing_shift").get<std::int64_t>();
  r.dualizing_complex = j.at("dualizing_complex").get<std::string>();
}

void to_json(Json& j, const DatumIsomorphism& iso) {
  j = Json::object();
  j["matrix"] = iso.matrix;
  j["sigma"] = one_based(iso.sigma);
  j["alpha"] = iso.alpha;
}

void from_json(const Json& j, DatumIsomorphism& iso) {
  iso.matrix = j.at("matrix").get<IntMatrix>();
  iso.sigma = zero_based(j.at("sigma").get<std::vector<std::size_t>>());
  iso.alpha = j.at("alpha").get<std::vector<Monomial>>();
}

void to_json(Json& j, const ClassificationLabel& l) {
  j = Json::object();
  j["dimension"] = l.dimension;
  j["case_name"] = l.case_name;
  j["integers"] = l.integers;
  j["scalars"] = l.scalars;
  put_optional(j, "canonical", l.canonical);
  put_optional(j, "witness", l.witness);
  j["text"] = l.to_string();
}

void from_json(const Json& j, ClassificationLabel& l) {
  l.dimension = j.at("dimension").get<std::int64_t>();
  l.case_name = j.at("case_name").get<std::string>();
  l.integers = j.at("integers").get<std::vector<std::pair<std::string, std::int64_t>>>();
  l.scalars = j.at("scalars").get<std::vector<std::pair<std::string, Monomial>>>();
  get_optional(j, "canonical", l.canonical);
  get_optional(j, "witness", l.witness);
}

void to_json(Json& j, const IsomorphismResult& r) {
  j = Json::object();
  j["status"] = to_string(r.status);
  put_optional(j, "witness", r.witness);
  j["message"] = r.message;
}

void from_json(const Json& j, IsomorphismResult& r) {
  const auto s = j.at("status").get<std::string>();
  if (s == "found")
    r.status = IsomorphismResult::Status::found;
  else if (s == "none")
    r.status = IsomorphismResult::Status::none;
  else if (s == "inconclusive")
    r.status = IsomorphismResult::Status::inconclusive;
  else
    throw Error("unknown isomorphism status '" + s + "'");
  get_optional(j, "witness", r.witness);
  r.message = j.at("message").get<std::string>();
}

void to_json(Json& j, const ClassificationResult& r) {
  j = Json::object();
  j["status"] = to_string(r.status);
  j["dimension"] = r.dimension;
  put_optional(j, "label", r.label);
}

void from_json(const Json& j, ClassificationResult& r) {
  const auto s = j.at("status").get<std::string>();
  if (s == "classified")
    r.status = ClassificationResult::Status::classified;
  else if (s == "not_cy")
    r.status = ClassificationResult::Status::not_cy;
  else if (s == "dimension_too_large")
    r.status = ClassificationResult::Status::dimension_too_large;
  else
    throw Error("unknown classification status '" + s + "'");
  r.dimension = j.at("dimension").get<std::int64_t>();
  get_optional(j, "label", r.label);
}

Json root_system_json(const RootSystem& rs) {
  Json j = Json::object();
  j["cartan"] = rs.cartan.entries();
  j["word"] = one_based(rs.reduced_word);
  Json roots = Json::array();
  for (std::size_t t = 0; t < rs.size(); ++t) {
    Json r = Json::object();
    r["coefficients"] = rs.positive_roots[t];
    r["label"] = root_to_string(rs.positive_roots[t]);
    r["height"] = rs.heights[t];
    roots.push_back(r);
  }
  j["roots"] = roots;
  return j;
}

}  // namespace cyhopf
