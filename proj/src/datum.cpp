#include "cyhopf/datum.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cyhopf {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

std::vector<std::string> datum_violations(const DatumData& raw) {
  std::vector<std::string> out;
  const std::size_t theta = raw.g.size(), s = raw.group_rank;
  if (theta == 0) return {"theta must be positive"};
  if (s == 0) out.push_back("group_rank must be positive");
  if (raw.chi.size() != theta) out.push_back("chi has " + std::to_string(raw.chi.size()) + " rows, expected " + std::to_string(theta));
  if (raw.cartan.size() != theta)
    out.push_back("cartan has size " + std::to_string(raw.cartan.size()) + ", expected " + std::to_string(theta));
  for (std::size_t i = 0; i < theta; ++i) {
    if (raw.g[i].size() != s) out.push_back("g_" + std::to_string(i + 1) + " has wrong length");
    if (i < raw.chi.size() && raw.chi[i].size() != s) out.push_back("chi_" + std::to_string(i + 1) + " has wrong length");
  }
  if (!out.empty()) return out;

  std::optional<CartanMatrix> cartan;
  try {
    cartan = CartanMatrix::validate(raw.cartan);
  } catch (const CartanError& e) {
    return {e.what()};
  }
  const auto& d = cartan->symmetrizer();
  auto q = [&](std::size_t i, std::size_t j) { return evaluate(raw.chi[j], raw.g[i]); };

  for (std::size_t i = 0; i < theta; ++i)
    for (std::size_t j = i + 1; j < theta; ++j) {
      const Monomial prod = q(i, j) * q(j, i);
      bool ok = prod == q(i, i).pow((*cartan)(i, j)) && prod == q(j, j).pow((*cartan)(j, i));
      // Same component: q_ii = q_I^{d_i}, q_jj = q_I^{d_j}, i.e. q_ii^{d_j} = q_jj^{d_i}.
      if (cartan->same_component(i, j)) ok = ok && q(i, i).pow(d[j]) == q(j, j).pow(d[i]);
      if (!ok) out.push_back("q-compatibility failed at " + pair_label(i, j));
    }
  for (std::size_t i = 0; i < theta; ++i)
    if (q(i, i).is_root_of_unity()) out.push_back("chi_i(g_i) is a root of unity at " + std::to_string(i + 1));
  for (const auto& [i, j] : raw.linking) {
    bool ok = i < j && j < theta;
    ok = ok && !cartan->same_component(i, j);
    ok = ok && is_trivial(character_product(raw.chi[i], raw.chi[j]));
    ok = ok && !is_zero(add(raw.g[i], raw.g[j]));
    if (!ok) out.push_back("illegal linking at " + pair_label(i, j));
  }
  return out;
}

GenericDatum GenericDatum::validate(DatumData raw) {
  auto violations = datum_violations(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  GenericDatum out;
  out.roots_ = root_system(CartanMatrix::validate(raw.cartan));
  out.data_ = std::move(raw);
  return out;
}

Character chi_of_root(const GenericDatum& d, const Root& beta) {
  Character out(d.s());
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) out = character_product(out, character_power(d.chi(i), beta[i]));
  return out;
}

ExponentVector g_of_root(const GenericDatum& d, const Root& beta) {
  ExponentVector out(d.s(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) out = add(out, scale(d.g(i), beta[i]));
  return out;
}

Character chi_beta(const GenericDatum& d, const RootSystem& rs, std::size_t t) {
  if (t >= rs.size()) throw Error("root index out of range");
  return chi_of_root(d, rs.positive_roots[t]);
}

ExponentVector g_beta(const GenericDatum& d, const RootSystem& rs, std::size_t t) {
  if (t >= rs.size()) throw Error("root index out of range");
  return g_of_root(d, rs.positive_roots[t]);
}

PBWDegree pbw_degree(const RootSystem& rs, const std::vector<std::int64_t>& a) {
  if (a.size() != rs.size()) throw Error("PBW exponent vector has wrong length");
  PBWDegree out{a, 0};
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] < 0) throw Error("negative PBW exponent");
    out.total = checked_add(out.total, checked_mul(a[t], rs.heights[t]));
  }
  return out;
}

std::strong_ordering pbw_compare(const PBWDegree& x, const PBWDegree& y) {
  if (x.a.size() != y.a.size()) throw Error("PBW degrees of different length");
  if (auto c = x.total <=> y.total; c != 0) return c;
  for (std::size_t t = x.a.size(); t-- > 0;)
    if (auto c = x.a[t] <=> y.a[t]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t k = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, k == std::string_view::npos ? k : k - start)));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

std::vector<std::string> words(std::string_view s) {
  std::stringstream ss{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::int64_t to_int(const std::string& tok, std::size_t line, const std::string& key) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw ParseError(line, key, "expected an integer, got '" + tok + "'");
  return v;
}

struct Entry {
  std::size_t line;
  std::string value;
};

}  // namespace

DatumData parse_datum(std::string_view text) {
  static const std::vector<std::string> known{"group_rank", "parameters", "cartan", "g", "chi", "linking"};
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "", "expected 'key: value'");
    const std::string key(trim(line.substr(0, colon)));
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError(line_no, key, "unknown key");
    if (entries.count(key)) throw ParseError(line_no, key, "repeated key");
    entries[key] = {line_no, std::string(trim(line.substr(colon + 1)))};
  }
  for (const char* required : {"group_rank", "parameters", "cartan", "g", "chi"})
    if (!entries.count(required)) throw ParseError(line_no, required, "missing key");

  DatumData d;
  {
    const auto& [ln, v] = entries["group_rank"];
    const auto s = to_int(v, ln, "group_rank");
    if (s <= 0) throw ParseError(ln, "group_rank", "must be positive");
    d.group_rank = static_cast<std::size_t>(s);
  }
  {
    const auto& [ln, v] = entries["parameters"];
    d.parameters = words(v);
    if (d.parameters.empty()) throw ParseError(ln, "parameters", "at least one parameter is required");
    for (const auto& p : d.parameters) {
      try {
        if (Monomial::parse(p) != Monomial::parameter(p)) throw Error("");
      } catch (const Error&) {
        throw ParseError(ln, "parameters", "invalid parameter name '" + p + "'");
      }
    }
  }
  {
    const auto& [ln, v] = entries["cartan"];
    try {
      d.cartan = parse_cartan(v);
    } catch (const CartanError& e) {
      throw ParseError(ln, "cartan", e.what());
    }
  }
  {
    const auto& [ln, v] = entries["g"];
    for (const auto& row : split(v, ';')) {
      ExponentVector g;
      for (const auto& tok : words(row)) g.push_back(to_int(tok, ln, "g"));
      if (g.size() != d.group_rank)
        throw ParseError(ln, "g", "row '" + row + "' has " + std::to_string(g.size()) + " entries, expected " +
                                      std::to_string(d.group_rank));
      d.g.push_back(std::move(g));
    }
  }
  {
    const auto& [ln, v] = entries["chi"];
    for (const auto& row : split(v, ';')) {
      Character chi;
      for (const auto& tok : words(row)) {
        Monomial m;
        try {
          m = Monomial::parse(tok);
        } catch (const Error& e) {
          throw ParseError(ln, "chi", e.what());
        }
        for (const auto& [name, e] : m.terms())
          if (std::find(d.parameters.begin(), d.parameters.end(), name) == d.parameters.end())
            throw ParseError(ln, "chi", "undeclared parameter '" + name + "'");
        chi.push_back(std::move(m));
      }
      if (chi.size() != d.group_rank)
        throw ParseError(ln, "chi", "row '" + row + "' has " + std::to_string(chi.size()) + " entries, expected " +
                                        std::to_string(d.group_rank));
      d.chi.push_back(std::move(chi));
    }
  }
  if (d.chi.size() != d.g.size())
    throw ParseError(entries["chi"].line, "chi", "expected " + std::to_string(d.g.size()) + " rows to match g");
  if (d.cartan.size() != d.g.size())
    throw ParseError(entries["cartan"].line, "cartan", "size does not match the number of rows of g");
  if (entries.count("linking")) {
    const auto& [ln, v] = entries["linking"];
    if (!v.empty())
      for (const auto& triple : split(v, ';')) {
        const auto w = words(triple);
        if (w.size() != 3) throw ParseError(ln, "linking", "expected 'i j value', got '" + triple + "'");
        const auto i = to_int(w[0], ln, "linking"), j = to_int(w[1], ln, "linking"), val = to_int(w[2], ln, "linking");
        const auto theta = static_cast<std::int64_t>(d.g.size());
        if (i < 1 || j < 1 || i > theta || j > theta || i == j)
          throw ParseError(ln, "linking", "index out of range in '" + triple + "'");
        if (val != 0 && val != 1) throw ParseError(ln, "linking", "value must be 0 or 1");
        const auto a = static_cast<std::size_t>(std::min(i, j) - 1), b = static_cast<std::size_t>(std::max(i, j) - 1);
        if (val == 1) d.linking.insert({a, b});
      }
  }
  return d;
}

DatumData read_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

std::string format_datum(const DatumData& d) {
  std::string out = "group_rank: " + std::to_string(d.group_rank) + "\nparameters:";
  for (const auto& p : d.parameters) out += " " + p;
  out += "\ncartan: ";
  for (std::size_t i = 0; i < d.cartan.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < d.cartan[i].size(); ++j) out += (j ? " " : "") + std::to_string(d.cartan[i][j]);
  }
  out += "\ng: ";
  for (std::size_t i = 0; i < d.g.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t h = 0; h < d.g[i].size(); ++h) out += (h ? " " : "") + std::to_string(d.g[i][h]);
  }
  out += "\nchi: ";
  for (std::size_t i = 0; i < d.chi.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t h = 0; h < d.chi[i].size(); ++h) out += (h ? " " : "") + d.chi[i][h].to_string();
  }
  out += "\n";
  if (!d.linking.empty()) {
    out += "linking: ";
    bool first = true;
    for (const auto& [i, j] : d.linking) {
      if (!first) out += "; ";
      first = false;
      out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " 1";
    }
    out += "\n";
  }
  return out;
}

}  // namespace cyhopf
