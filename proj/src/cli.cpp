#include "cyhopf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cyhopf/report.hpp"

#ifndef CYHOPF_CORPUS_DIR
#define CYHOPF_CORPUS_DIR "corpus"
#endif

namespace cyhopf::cli {

namespace fs = std::filesystem;

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string matrix_string(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + std::to_string(m(r, c));
  }
  return out;
}

std::string scalars_string(const std::vector<Monomial>& v, const char* var) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < v.size(); ++i) parts.push_back(std::string(var) + std::to_string(i + 1) + " -> " + v[i].to_string());
  return join(parts, ", ");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Output fail(int code, std::string msg) { return Output{code, "", "error: " + msg + "\n"}; }

Output invalid(const std::vector<std::string>& violations, bool json) {
  Output o{negative, "", ""};
  if (json) {
    Json j = Json::object();
    j["valid"] = false;
    j["violations"] = violations;
    o.out = dump(j);
  } else {
    o.out = "INVALID\n";
    for (const auto& v : violations) o.out += "  " + v + "\n";
  }
  return o;
}

Output do_validate(const Command& cmd) {
  const auto raw = read_datum_file(cmd.inputs.at(0));
  const auto violations = datum_violations(raw);
  if (!violations.empty()) return invalid(violations, cmd.json);
  if (cmd.json) {
    Json j = Json::object();
    j["valid"] = true;
    j["violations"] = Json::array();
    return {ok, dump(j), ""};
  }
  return {ok, "VALID\n", ""};
}

Output do_roots(const Command& cmd) {
  const auto rs = root_system(CartanMatrix::validate(parse_cartan(cmd.inputs.at(0))));
  if (cmd.json) {
    Json j = root_system_json(rs);
    return {ok, dump(j), ""};
  }
  std::vector<std::string> word, labels;
  for (auto i : rs.reduced_word) word.push_back(std::to_string(i + 1));
  for (const auto& r : rs.positive_roots) labels.push_back(root_to_string(r));
  std::vector<std::string> d;
  for (auto x : rs.cartan.symmetrizer()) d.push_back(std::to_string(x));
  std::string out = "cartan: " + rs.cartan.to_string() + "\n";
  out += "symmetrizer: " + join(d, " ") + "\n";
  out += "word: [" + join(word, ",") + "]\n";
  out += "roots: " + join(labels, ", ") + "\n";
  for (std::size_t t = 0; t < rs.size(); ++t)
    out += "  beta_" + std::to_string(t + 1) + " = " + labels[t] + "  height " + std::to_string(rs.heights[t]) + "\n";
  return {ok, out, ""};
}

std::string cy_text(const char* title, const CYReport& r) {
  std::string out = std::string(title) + ": CY: " + (r.is_cy ? "yes" : "no") + ", dimension " + std::to_string(r.dimension) + "\n";
  if (r.algebra == AlgebraKind::pointed) out += "  integral character: " + scalars_string(r.integral_character, "y") + "\n";
  out += "  nakayama: " + scalars_string(r.nakayama.x_scalars, "x");
  if (r.algebra == AlgebraKind::pointed) out += "; " + scalars_string(r.nakayama.y_scalars, "y");
  out += "\n";
  if (r.algebra == AlgebraKind::pointed)
    out += "  S^2 conjugator: " + (r.conjugator ? "y^" + vec_string(*r.conjugator) : std::string("none")) + "\n";
  for (const auto& f : r.failures) out += "  failure: " + f + "\n";
  out += "  dualizing complex: " + r.dualizing_complex + "\n";
  return out;
}

Output do_cy(const Command& cmd) {
  const auto raw = read_datum_file(cmd.inputs.at(0));
  const auto violations = datum_violations(raw);
  if (!violations.empty()) return invalid(violations, cmd.json);
  const auto d = GenericDatum::validate(raw);
  const auto u = is_cy_U(d);
  const auto b = is_cy_nichols(d);
  const int code = u.is_cy ? ok : negative;
  if (cmd.json) {
    Json j = Json::object();
    j["pointed"] = u;
    j["nichols"] = b;
    return {code, dump(j), ""};
  }
  std::vector<std::string> word;
  for (auto i : d.roots().reduced_word) word.push_back(std::to_string(i + 1));
  std::string out = "CY: " + std::string(u.is_cy ? "yes" : "no") + ", dimension " + std::to_string(u.dimension) + "\n";
  out += "word: [" + join(word, ",") + "]\n";
  out += cy_text("U(D,lambda)", u);
  out += cy_text("B(V)", b);
  return {code, out, ""};
}

std::string iso_text(const DatumIsomorphism& w) {
  std::vector<std::string> sigma, alpha;
  for (auto i : w.sigma) sigma.push_back(std::to_string(i + 1));
  for (const auto& a : w.alpha) alpha.push_back(a.to_string());
  return "  matrix: " + matrix_string(w.matrix) + "\n  sigma: [" + join(sigma, ",") + "]\n  alpha: " + join(alpha, ", ") + "\n";
}

Output do_isom(const Command& cmd) {
  std::vector<GenericDatum> data;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto raw = read_datum_file(cmd.inputs.at(i));
    const auto violations = datum_violations(raw);
    if (!violations.empty()) {
      std::vector<std::string> tagged;
      for (const auto& v : violations) tagged.push_back(cmd.inputs[i] + ": " + v);
      return invalid(tagged, cmd.json);
    }
    data.push_back(GenericDatum::validate(raw));
  }
  IsomorphismOptions opts;
  opts.bound = cmd.bound;
  const auto r = find_isomorphism(data[0], data[1], opts);
  const int code = r.status == IsomorphismResult::Status::found  ? ok
                   : r.status == IsomorphismResult::Status::none ? negative
                                                                 : inconclusive;
  if (cmd.json) {
    Json j = r;
    return {code, dump(j), ""};
  }
  std::string out;
  switch (r.status) {
    case IsomorphismResult::Status::found: out = "ISOMORPHIC\n" + iso_text(*r.witness); break;
    case IsomorphismResult::Status::none: out = "NOT ISOMORPHIC: " + r.message + "\n"; break;
    case IsomorphismResult::Status::inconclusive: out = "INCONCLUSIVE: " + r.message + "\n"; break;
  }
  return {code, out, ""};
}

Output classification_output(const ClassificationResult& r, bool json) {
  const int code = r.status == ClassificationResult::Status::classified ? ok : negative;
  if (json) {
    Json j = r;
    return {code, dump(j), ""};
  }
  std::string out;
  switch (r.status) {
    case ClassificationResult::Status::classified:
      out = r.label->to_string() + "\n";
      if (r.label->canonical) {
        out += "canonical datum:\n";
        std::istringstream lines(format_datum(*r.label->canonical));
        for (std::string line; std::getline(lines, line);) out += "  " + line + "\n";
      }
      if (r.label->witness) out += "witness:\n" + iso_text(*r.label->witness);
      break;
    case ClassificationResult::Status::not_cy: out = "not CY (dimension " + std::to_string(r.dimension) + ")\n"; break;
    case ClassificationResult::Status::dimension_too_large:
      out = "dimension " + std::to_string(r.dimension) + " > 4: outside the classified range\n";
      break;
  }
  return {code, out, ""};
}

Output do_classify(const Command& cmd) {
  if (cmd.group_algebra > 0) return classification_output(classify_group_algebra(static_cast<std::size_t>(cmd.group_algebra)), cmd.json);
  const auto raw = read_datum_file(cmd.inputs.at(0));
  const auto violations = datum_violations(raw);
  if (!violations.empty()) return invalid(violations, cmd.json);
  return classification_output(classify(GenericDatum::validate(raw)), cmd.json);
}

// Verdict columns of the corpus table.
struct Verdicts {
  std::string validity, cy_U = "-", cy_nichols = "-", classification = "-";
  friend bool operator==(const Verdicts&, const Verdicts&) = default;
  std::string to_string() const { return validity + " " + cy_U + " " + cy_nichols + " " + classification; }
};

Verdicts evaluate_fixture(const fs::path& p) {
  Verdicts v;
  DatumData raw;
  try {
    raw = read_datum_file(p.string());
  } catch (const ParseError&) {
    v.validity = "parse_error";
    return v;
  }
  if (!datum_violations(raw).empty()) {
    v.validity = "invalid";
    return v;
  }
  v.validity = "valid";
  const auto d = GenericDatum::validate(raw);
  v.cy_U = is_cy_U(d).is_cy ? "yes" : "no";
  v.cy_nichols = is_cy_nichols(d).is_cy ? "yes" : "no";
  const auto c = classify(d);
  switch (c.status) {
    case ClassificationResult::Status::classified: v.classification = c.label->case_name; break;
    case ClassificationResult::Status::not_cy: v.classification = "not_cy"; break;
    case ClassificationResult::Status::dimension_too_large: v.classification = "dim>4"; break;
  }
  return v;
}

}  // namespace

std::string default_corpus_dir() { return CYHOPF_CORPUS_DIR; }

Output run_corpus(const std::string& dir, bool json) {
  if (!fs::is_directory(dir)) return fail(usage, "corpus directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".datum") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) return fail(usage, "corpus directory '" + dir + "' has no .datum fixtures");

  // EXPECTED: "<file> <validity> <cy_U> <cy_nichols> <classification>" per line.
  std::ifstream in(fs::path(dir) / "EXPECTED");
  if (!in) return fail(usage, "corpus directory '" + dir + "' has no EXPECTED file");
  std::map<std::string, Verdicts> expected;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    Verdicts v;
    if (!(ls >> name >> v.validity >> v.cy_U >> v.cy_nichols >> v.classification))
      return fail(usage, "EXPECTED line " + std::to_string(lineno) + ": expected 5 fields");
    expected[name] = v;
  }
  for (const auto& [name, v] : expected)
    if (!fs::exists(fs::path(dir) / name)) return fail(usage, "missing fixture '" + name + "'");

  std::size_t mismatches = 0;
  Json rows = Json::array();
  std::string table;
  for (const auto& p : files) {
    const auto name = p.filename().string();
    const auto it = expected.find(name);
    if (it == expected.end()) return fail(usage, "no expectation for fixture '" + name + "'");
    Verdicts actual;
    try {
      actual = evaluate_fixture(p);
    } catch (const std::exception&) {
      actual.validity = "error";
    }
    const bool match = actual == it->second;
    if (!match) ++mismatches;
    Json row = Json::object();
    row["fixture"] = name;
    row["expected"] = it->second.to_string();
    row["actual"] = actual.to_string();
    row["match"] = match;
    rows.push_back(row);
    if (match)
      table += "ok        " + name + "  " + actual.to_string() + "\n";
    else
      table += "MISMATCH  " + name + "  expected " + it->second.to_string() + ", got " + actual.to_string() + "\n";
  }
  Output o;
  o.exit_code = mismatches ? negative : ok;
  if (json) {
    Json j = Json::object();
    j["fixtures"] = rows;
    j["mismatches"] = mismatches;
    o.out = dump(j);
  } else {
    o.out = table + std::to_string(files.size() - mismatches) + "/" + std::to_string(files.size()) + " fixtures matched\n";
  }
  return o;
}

Output run(const Command& cmd) {
  static const std::map<std::string, std::size_t> arity{{"validate", 1}, {"roots", 1}, {"cy", 1},
                                                        {"isom", 2},     {"classify", 1}, {"corpus", 0}};
  const auto a = arity.find(cmd.verb);
  if (a == arity.end()) return fail(usage, "unknown command '" + cmd.verb + "'");
  const bool group = cmd.verb == "classify" && cmd.group_algebra > 0;
  if (cmd.verb == "corpus") {
    if (cmd.inputs.size() > 1) return fail(usage, "corpus takes at most one directory");
  } else if (cmd.inputs.size() != (group ? 0 : a->second)) {
    return fail(usage, cmd.verb + " takes " + std::to_string(a->second) + " input(s)");
  }
  if (cmd.bound < 0) return fail(usage, "--bound must be non-negative");
  try {
    if (cmd.verb == "validate") return do_validate(cmd);
    if (cmd.verb == "roots") return do_roots(cmd);
    if (cmd.verb == "cy") return do_cy(cmd);
    if (cmd.verb == "isom") return do_isom(cmd);
    if (cmd.verb == "classify") return do_classify(cmd);
    return run_corpus(cmd.inputs.empty() ? default_corpus_dir() : cmd.inputs[0], cmd.json);
  } catch (const std::exception& e) {
    return fail(usage, e.what());
  }
}

Output run_args(const std::vector<std::string>& args) {
  CLI::App app{"Calabi-Yau decisions for pointed Hopf algebras U(D, lambda) and Nichols algebras"};
  app.require_subcommand(1);
  Command cmd;
  const std::vector<std::pair<std::string, std::string>> verbs{
      {"validate", "check a datum file"},
      {"roots", "positive roots of a named type or matrix \"2 -1; -1 2\""},
      {"cy", "CY report for U(D, lambda) and B(V)"},
      {"isom", "isomorphism of two data"},
      {"classify", "classify a CY datum of global dimension at most 4"},
      {"corpus", "run the fixture corpus (default: bundled)"}};
  for (const auto& [verb, help] : verbs) {
    auto* sub = app.add_subcommand(verb, help);
    sub->add_option("inputs", cmd.inputs, "input files or type names");
    sub->add_flag("--json", cmd.json, "structured output");
    if (verb == "isom") sub->add_option("--bound", cmd.bound, "coefficient bound of the lattice search")->capture_default_str();
    if (verb == "classify") sub->add_option("--group-algebra", cmd.group_algebra, "classify the group algebra of Z^n");
  }
  std::vector<const char*> argv{"cyhopf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? ok : usage, out.str(), err.str()};
  }
  for (const auto* sub : app.get_subcommands()) cmd.verb = sub->get_name();
  return run(cmd);
}

}  // namespace cyhopf::cli
