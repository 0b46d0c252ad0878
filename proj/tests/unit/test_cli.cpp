#include <filesystem>
#include <fstream>

#include "cyhopf/cli.hpp"
#include "cyhopf/report.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace cyhopf;
using cli::run_args;

namespace {

std::string fixture(const std::string& name) { return (fs::path(cli::default_corpus_dir()) / name).string(); }

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("cyhopf_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("cy report for U_q(sl2)") {
  const auto r = run_args({"cy", fixture("uqsl2.datum")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("CY: yes, dimension 3\n", 0) == 0);
  CHECK(r.out.find("_ψ A[3]") != std::string::npos);
  CHECK(r.out.find("_φ R[2]") != std::string::npos);
  CHECK(r.out.find("S^2 conjugator: y^(-1)") != std::string::npos);
  CHECK(run_args({"cy", fixture("a2_dj.datum")}).exit_code == 1);
}

TEST_CASE("roots of A2") {
  const auto r = run_args({"roots", "A2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("word: [1,2,1]\n") != std::string::npos);
  CHECK(r.out.find("roots: a1, a1+a2, a2\n") != std::string::npos);
  CHECK(run_args({"roots", "2 -1; -1 2"}).out == r.out);
  CHECK(run_args({"roots", "2 -3; -3 2"}).exit_code == 2);
  CHECK(run_args({"roots", "E8"}).exit_code == 2);
}

TEST_CASE("validate exit codes and messages") {
  const auto good = run_args({"validate", fixture("uqsl2.datum")});
  CHECK(good.exit_code == 0);
  CHECK(good.out == "VALID\n");
  const auto bad = run_args({"validate", fixture("bad_linking.datum")});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("illegal linking at (1,2)") != std::string::npos);

  const auto dir = scratch("parse");
  write(dir / "broken.datum", "group_rank: 1\nparameters: q\ncartan: A1\ng: 1 x\nchi: q\n");
  const auto parse = run_args({"validate", (dir / "broken.datum").string()});
  CHECK(parse.exit_code == 2);
  CHECK(parse.err.find("line 4") != std::string::npos);
  CHECK(parse.err.find("(g)") != std::string::npos);
  CHECK(run_args({"validate", (dir / "absent.datum").string()}).exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_args({}).exit_code == 2);
  CHECK(run_args({"frobnicate"}).exit_code == 2);
  CHECK(run_args({"cy"}).exit_code == 2);
  CHECK(run_args({"isom", fixture("uqsl2.datum")}).exit_code == 2);
  CHECK(run_args({"isom", fixture("uqsl2.datum"), fixture("uqsl2.datum"), "--bound", "-1"}).exit_code == 2);
  CHECK(run_args({"validate", "--help"}).exit_code == 0);
}

TEST_CASE("isom verdicts") {
  const auto same = run_args({"isom", fixture("dim4_sheared.datum"), fixture("dim4_sheared.datum")});
  CHECK(same.exit_code == 0);
  CHECK(same.out.rfind("ISOMORPHIC\n", 0) == 0);
  const auto differ = run_args({"isom", fixture("dim4_sheared.datum"), fixture("dim4_case_vi.datum")});
  CHECK(differ.exit_code == 1);

  const auto dir = scratch("isom");
  write(dir / "free.datum", "group_rank: 2\nparameters: q\ncartan: A1xA1\ng: 1 0; 1 0\nchi: q 1; q^-1 1\n");
  const auto free = (dir / "free.datum").string();
  const auto cut = run_args({"isom", free, free, "--bound", "0"});
  CHECK(cut.exit_code == 3);
  CHECK(cut.out.rfind("INCONCLUSIVE", 0) == 0);
  CHECK(run_args({"isom", free, free}).exit_code == 0);
}

TEST_CASE("classify output") {
  const auto r = run_args({"classify", fixture("uqsl2.datum")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("dim3 Case 2 (II), k=1, q=q^2\n", 0) == 0);
  CHECK(run_args({"classify", fixture("a2_dj.datum")}).exit_code == 1);
  CHECK(run_args({"classify", fixture("a2xa1_pointed.datum")}).exit_code == 1);
  CHECK(run_args({"classify", "--group-algebra", "2"}).out == "dim2 Case 1\n");
}

TEST_CASE("structured output round-trips") {
  const auto cy = run_args({"cy", "--json", fixture("uqsl2.datum")});
  const auto j = Json::parse(cy.out);
  const auto pointed = j.at("pointed").get<CYReport>();
  const auto d = GenericDatum::validate(read_datum_file(fixture("uqsl2.datum")));
  CHECK(pointed == is_cy_U(d));
  CHECK(j.at("nichols").get<CYReport>() == is_cy_nichols(d));
  CHECK(Json(pointed).dump() == j.at("pointed").dump());

  for (const auto* name : {"uqsl2.datum", "dim4_sheared.datum", "dim4_case_i.datum"}) {
    const auto out = run_args({"classify", "--json", fixture(name)}).out;
    const auto back = Json::parse(out).get<ClassificationResult>();
    REQUIRE(back.label);
    const auto direct = classify(GenericDatum::validate(read_datum_file(fixture(name))));
    CHECK(back.label->case_name == direct.label->case_name);
    CHECK(back.label->integers == direct.label->integers);
    CHECK(back.label->scalars == direct.label->scalars);
    CHECK(back.label->canonical == direct.label->canonical);
    CHECK(back.label->witness == direct.label->witness);
    CHECK(Json(back).dump(2) + "\n" == out);
  }

  const auto iso = Json::parse(run_args({"isom", "--json", fixture("dim4_sheared.datum"), fixture("dim4_sheared.datum")}).out);
  const auto res = iso.get<IsomorphismResult>();
  CHECK(res.status == IsomorphismResult::Status::found);
  CHECK(Json(res).dump() == iso.dump());

  const auto raw = read_datum_file(fixture("dim4_case_vi.datum"));
  CHECK(Json(raw).get<DatumData>() == raw);
}

TEST_CASE("output is byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"cy", fixture("a2xa1_pointed.datum")}, {"classify", "--json", fixture("dim4_sheared.datum")}, {"corpus"}}) {
    const auto a = run_args(args), b = run_args(args);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("bundled corpus") {
  const auto r = run_args({"corpus"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("12/12 fixtures matched") != std::string::npos);
}

TEST_CASE("corpus negative controls") {
  const auto dir = scratch("corpus");
  for (const auto& e : fs::directory_iterator(cli::default_corpus_dir())) fs::copy(e.path(), dir / e.path().filename());
  // drop the linking of a Case VI fixture: it becomes Case V
  const auto p = dir / "dim4_case_vi.datum";
  auto text = slurp(p);
  text.erase(text.find("linking: 1 2 1\n"));
  write(p, text);
  const auto r = run_args({"corpus", dir.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("MISMATCH  dim4_case_vi.datum") != std::string::npos);
  CHECK(r.out.find("11/12 fixtures matched") != std::string::npos);

  fs::remove(dir / "uqsl2.datum");
  CHECK(run_args({"corpus", dir.string()}).exit_code == 2);
  CHECK(run_args({"corpus", scratch("empty").string()}).exit_code == 2);
  CHECK(run_args({"corpus", (dir / "nowhere").string()}).exit_code == 2);
}
