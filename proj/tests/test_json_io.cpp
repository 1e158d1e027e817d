// Document parsing, canonical echoes, serialization round trips, and the
// engine envelope (statuses, determinism, flattened text output).

#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "core/corpus.hpp"
#include "core/engine.hpp"
#include "core/json_io.hpp"

using namespace focal;

namespace {

const char* kSystemDoc = R"({
  "field": {"kind": "rational"},
  "algebra": {"preset": "matrix", "n": 2},
  "atoms": [
    {"name": "C", "basis": [[1, 0, 0, 1]]},
    {"name": "sigma", "basis": [["1", -2, 2, "-1"]]},
    {"name": "V", "basis": [[2, -1, 1, -2], [1, 1, 2, -1]]}
  ],
  "identity": "C"
})";

const char* kAbstractDoc = R"({
  "atoms": ["e", "s", "v"],
  "identity": "e",
  "table": {
    "e,e": ["e"], "e,s": ["s"], "e,v": ["v"],
    "s,e": ["s"], "s,s": ["e"], "s,v": ["v"],
    "v,e": ["v"], "v,s": ["v"], "v,v": ["e", "s"]
  }
})";

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::internal;
}

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.where();
  }
  FAIL("expected an Error");
  return {};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), ("cannot open " + path));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sample(const std::string& name) {
  return std::string(FOCAL_SOURCE_DIR) + "/problems/" + name;
}

}  // namespace

TEST_CASE("atom system documents parse with canonical echoes") {
  ProblemDocument doc = parse_problem_text(kSystemDoc);
  REQUIRE(doc.system.has_value());
  CHECK_FALSE(doc.is_abstract());

  const AtomSystem& sys = *doc.system;
  REQUIRE(sys.atoms.size() == 3);
  CHECK(sys.atoms[0].name == "C");
  CHECK(sys.atoms[1].name == "sigma");
  CHECK(sys.atoms[2].name == "V");
  CHECK(sys.atoms[2].space.dim() == 2);
  CHECK(sys.declared_identity == 0);

  // Bases echo in reduced row form regardless of how the rows were given.
  Json v_basis = doc.echo.at("atoms").at(2).at("basis");
  Json expected = Json::array({Json::array({"1", "0", "1", "-1"}), Json::array({"0", "1", "1", "0"})});
  CHECK(v_basis == expected);
  CHECK(doc.echo.at("identity") == "C");
  CHECK(doc.echo.at("algebra") == Json({{"preset", "matrix"}, {"n", 2}}));

  // The echo is a fixed point of normalization.
  ProblemDocument again = parse_problem_text(doc.echo.dump());
  CHECK(again.echo == doc.echo);
}

TEST_CASE("abstract table documents parse and echo") {
  ProblemDocument doc = parse_problem_text(kAbstractDoc);
  REQUIRE(doc.is_abstract());
  CHECK_FALSE(doc.system.has_value());

  const HyperTable& t = *doc.abstract;
  CHECK(t.atom_names == std::vector<std::string>{"e", "s", "v"});
  REQUIRE(t.identity.has_value());
  CHECK(*t.identity == 0);
  CHECK(t.at(2, 2) == AtomSet{0, 1});
  CHECK(t.is_entire());
  CHECK(t.source == TableSource::abstract_table);

  ProblemDocument again = parse_problem_text(doc.echo.dump());
  CHECK(again.echo == doc.echo);
  CHECK(again.abstract->at(1, 1) == AtomSet{0});
}

TEST_CASE("scalar serialization round trips") {
  FieldDescriptor q = FieldDescriptor::rationals();
  FieldDescriptor c12 = FieldDescriptor::cyclotomic(12);

  CHECK(scalar_from_json(Json(7), q, "/x") == Scalar(Rational(7)));
  CHECK(scalar_from_json(Json("3/4"), q, "/x") == Scalar(Rational(3, 4)));
  CHECK(scalar_to_json(Scalar(Rational(-5, 3))) == Json("-5/3"));

  Scalar z = Scalar::zeta(12);
  Json zj = scalar_to_json(z + Scalar(Rational(1, 2)));
  Scalar back = scalar_from_json(zj, c12, "/x");
  CHECK(back == z + Scalar(Rational(1, 2)));

  // A coordinate array that collapses to a rational stays comparable.
  Scalar three = scalar_from_json(Json::parse("[3, 0]"), c12, "/x");
  CHECK(three == Scalar(Rational(3)));

  CHECK(code_of([&] { scalar_from_json(Json::parse("[1, 2]"), q, "/x"); }) == Errc::invalid_document);
  CHECK(code_of([&] { scalar_from_json(Json::parse("[1, 1, 1, 1, 1]"), c12, "/x"); }) == Errc::invalid_document);
  CHECK(code_of([&] { scalar_from_json(Json::parse("[true]"), c12, "/x"); }) == Errc::invalid_document);
  CHECK(code_of([&] { scalar_from_json(Json("1/0"), q, "/x"); }) == Errc::division_by_zero);
}

TEST_CASE("schema violations are rejected with document locations") {
  auto parse = [](const std::string& text) { return [text] { parse_problem_text(text); }; };

  SUBCASE("malformed json") {
    CHECK(code_of(parse("{")) == Errc::invalid_document);
    CHECK(code_of(parse("")) == Errc::invalid_document);
  }
  SUBCASE("unknown keys carry their pointer") {
    Json doc = Json::parse(kSystemDoc);
    doc["extra"] = 1;
    CHECK(code_of(parse(doc.dump())) == Errc::invalid_document);
    CHECK(where_of(parse(doc.dump())) == "/extra");
  }
  SUBCASE("algebra and table are mutually exclusive") {
    Json doc = Json::parse(kAbstractDoc);
    doc["algebra"] = Json{{"preset", "matrix"}, {"n", 2}};
    CHECK(code_of(parse(doc.dump())) == Errc::invalid_document);
  }
  SUBCASE("partial tables name the table") {
    Json doc = Json::parse(kAbstractDoc);
    doc["table"].erase("v,s");
    auto f = parse(doc.dump());
    CHECK(code_of(f) == Errc::invalid_document);
    CHECK(where_of(f) == "/table");
  }
  SUBCASE("atom names must not contain commas") {
    Json doc = Json::parse(kSystemDoc);
    doc["atoms"][1]["name"] = "si,gma";
    auto f = parse(doc.dump());
    CHECK(code_of(f) == Errc::invalid_document);
    CHECK(where_of(f) == "/atoms/1/name");
  }
  SUBCASE("duplicate atom names") {
    Json doc = Json::parse(kSystemDoc);
    doc["atoms"][1]["name"] = "C";
    CHECK(code_of(parse(doc.dump())) == Errc::invalid_document);
  }
  SUBCASE("basis rows must match the algebra dimension") {
    Json doc = Json::parse(kSystemDoc);
    doc["atoms"][0]["basis"] = Json::array({Json::array({1, 0, 0})});
    auto f = parse(doc.dump());
    CHECK(code_of(f) == Errc::invalid_document);
    CHECK(where_of(f) == "/atoms/0/basis/0");
  }
  SUBCASE("unknown identity name") {
    Json doc = Json::parse(kSystemDoc);
    doc["identity"] = "Q";
    auto f = parse(doc.dump());
    CHECK(code_of(f) == Errc::invalid_document);
    CHECK(where_of(f) == "/identity");
  }
  SUBCASE("size limits") {
    Json doc = Json::parse(kSystemDoc);
    doc["algebra"] = Json{{"preset", "matrix"}, {"n", 13}};
    CHECK(code_of(parse(doc.dump())) == Errc::invalid_document);

    doc = Json::parse(kSystemDoc);
    doc["field"] = Json{{"kind", "cyclotomic"}, {"order", 513}};
    CHECK(code_of(parse(doc.dump())) == Errc::invalid_document);

    doc = Json::parse(kSystemDoc);
    doc["field"] = Json{{"kind", "galois"}};
    auto f = parse(doc.dump());
    CHECK(code_of(f) == Errc::invalid_document);
    CHECK(where_of(f) == "/field/kind");
  }
  SUBCASE("table entries must use known names") {
    Json doc = Json::parse(kAbstractDoc);
    doc["table"]["v,v"] = Json::array({"ghost"});
    CHECK(code_of(parse(doc.dump())) == Errc::invalid_document);
  }
}

TEST_CASE("engine statuses separate bad input from failed checks") {
  // Dependent atoms: the document is well formed, the semiring check fails.
  Json doc = Json::parse(kSystemDoc);
  doc["atoms"][1] = Json{{"name", "sigma"}, {"basis", Json::array({Json::array({2, 0, 0, 2})})}};
  RunResult dependent = run_document_command("verify", doc.dump());
  CHECK(dependent.status == 1);
  Json report = Json::parse(dependent.json);
  CHECK(report.at("status") == "failed");
  CHECK(report.at("error").at("code") == "not_independent");

  RunResult ok = run_document_command("verify", kSystemDoc);
  CHECK(ok.status == 0);
  Json ok_report = Json::parse(ok.json);
  CHECK(ok_report.at("status") == "ok");
  CHECK(ok_report.at("result").at("entire") == true);
  CHECK(ok_report.at("problem") == parse_problem_text(kSystemDoc).echo);

  RunResult tower_abstract = run_document_command("tower", kAbstractDoc);
  CHECK(tower_abstract.status == 2);
  CHECK(Json::parse(tower_abstract.json).at("status") == "invalid_input");

  RunResult unknown = run_document_command("summon", kSystemDoc);
  CHECK(unknown.status == 2);
  CHECK(Json::parse(unknown.json).at("error").at("code") == "unknown_command");

  RunResult garbage = run_document_command("verify", "not json");
  CHECK(garbage.status == 2);

  RunResult named = run_corpus_command("no_such_item");
  CHECK(named.status == 2);
  CHECK(Json::parse(named.json).at("error").at("code") == "unknown_name");
}

TEST_CASE("reports are byte deterministic and end with a newline") {
  RunResult a = run_document_command("tower", kSystemDoc);
  RunResult b = run_document_command("tower", kSystemDoc);
  CHECK(a.status == 0);
  CHECK(a.json == b.json);
  REQUIRE_FALSE(a.json.empty());
  CHECK(a.json.back() == '\n');

  // Text output carries a timing line, so strip it before comparing.
  auto strip_timing = [](std::string s) {
    auto pos = s.find("timing_ms:");
    REQUIRE(pos != std::string::npos);
    return s.substr(0, pos);
  };
  CHECK(strip_timing(a.text) == strip_timing(b.text));
}

TEST_CASE("text reports flatten nested objects into dotted lines") {
  Json j{{"alpha", Json{{"beta", 1}}}, {"list", Json::array({"x", "y"})}, {"flag", true}};
  std::string text = report_text(j);
  CHECK(text.find("alpha.beta: 1\n") != std::string::npos);
  CHECK(text.find("list: x y\n") != std::string::npos);
  CHECK(text.find("flag: true\n") != std::string::npos);

  RunResult run = run_document_command("condense", kAbstractDoc);
  CHECK(run.text.find("result.monoid.size: 2") != std::string::npos);
  CHECK(run.text.find("status: ok") != std::string::npos);
}

TEST_CASE("shipped sample documents run clean") {
  for (const char* name : {"s3_standard.json", "s3_abstract.json", "t_squared_minus_one.json",
                           "galois_biquadratic.json", "a4_fragment.json"}) {
    CAPTURE(name);
    RunResult r = run_document_command("verify", slurp(sample(name)));
    CHECK(r.status == 0);
  }

  // The matrix-form sample describes the same system the corpus builds.
  ProblemDocument s3 = parse_problem_text(slurp(sample("s3_standard.json")));
  PreparedSystem built = s3_standard_system();
  REQUIRE(s3.system.has_value());
  REQUIRE(s3.system->atoms.size() == built.system.atoms.size());
  for (size_t i = 0; i < built.system.atoms.size(); ++i) {
    CAPTURE(i);
    CHECK(s3.system->atoms[i].space == built.system.atoms[i].space);
  }

  // The committed fragment file matches the built-in table entry for entry.
  ProblemDocument frag = parse_problem_text(slurp(sample("a4_fragment.json")));
  REQUIRE(frag.is_abstract());
  HyperTable built_frag = a4_fragment_table();
  REQUIRE(frag.abstract->size() == built_frag.size());
  CHECK(frag.abstract->atom_names == built_frag.atom_names);
  CHECK(frag.abstract->identity == built_frag.identity);
  for (int i = 0; i < built_frag.size(); ++i)
    for (int j = 0; j < built_frag.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(frag.abstract->at(i, j) == built_frag.at(i, j));
    }
}
