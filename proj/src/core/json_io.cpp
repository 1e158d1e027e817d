#include "core/json_io.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace focal {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::order_mismatch: return "order_mismatch";
    case Errc::bad_order: return "bad_order";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::not_monic: return "not_monic";
    case Errc::not_associative: return "not_associative";
    case Errc::unit_fails: return "unit_fails";
    case Errc::not_a_monoid: return "not_a_monoid";
    case Errc::not_independent: return "not_independent";
    case Errc::identity_missing: return "identity_missing";
    case Errc::not_closed: return "not_closed";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::table_not_entire: return "table_not_entire";
    case Errc::not_well_defined: return "not_well_defined";
    case Errc::empty_seed: return "empty_seed";
    case Errc::not_subalgebra: return "not_subalgebra";
    case Errc::not_a_group: return "not_a_group";
    case Errc::not_an_action: return "not_an_action";
    case Errc::field_too_small: return "field_too_small";
    case Errc::incomplete_characters: return "incomplete_characters";
    case Errc::size_cap_exceeded: return "size_cap_exceeded";
    case Errc::unknown_name: return "unknown_name";
    case Errc::invalid_document: return "invalid_document";
    case Errc::unknown_command: return "unknown_command";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& where) {
  fail(Errc::invalid_document, what, where);
}

// Re-raise engine errors from nested constructors with a document location.
template <typename F>
auto at_location(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.where().empty()) throw;
    throw Error(e.code(), e.what(), where);
  }
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad("unknown key '" + key + "'", where + "/" + key);
  }
}

const Json& require_key(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad("expected an object", where);
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing key '") + key + "'", where);
  return *it;
}

long require_int(const Json& j, long lo, long hi, const std::string& where) {
  if (!j.is_number_integer()) bad("expected an integer", where);
  long v = j.get<long>();
  if (v < lo || v > hi)
    bad("value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
        where);
  return v;
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad("expected a string", where);
  std::string s = j.get<std::string>();
  if (s.empty()) bad("expected a nonempty string", where);
  return s;
}

std::string require_name(const Json& j, const std::string& where) {
  std::string s = require_string(j, where);
  if (s.find(',') != std::string::npos) bad("atom names must not contain commas", where);
  return s;
}

FieldDescriptor parse_field(const Json& doc) {
  if (!doc.contains("field")) return FieldDescriptor::rationals();
  const Json& f = doc.at("field");
  if (!f.is_object()) bad("'field' must be an object", "/field");
  check_keys(f, {"kind", "order"}, "/field");
  std::string kind = require_string(require_key(f, "kind", "/field"), "/field/kind");
  if (kind == "rational") {
    if (f.contains("order")) bad("'order' only applies to cyclotomic fields", "/field/order");
    return FieldDescriptor::rationals();
  }
  if (kind == "cyclotomic") {
    long n = require_int(require_key(f, "order", "/field"), 1, 512, "/field/order");
    return FieldDescriptor::cyclotomic(static_cast<unsigned>(n));
  }
  bad("unknown field kind '" + kind + "'", "/field/kind");
}

std::shared_ptr<const Algebra> parse_algebra(const Json& a, const FieldDescriptor& field, Json& echo) {
  const std::string where = "/algebra";
  if (!a.is_object()) bad("'algebra' must be an object", where);

  if (a.contains("preset")) {
    std::string preset = require_string(a.at("preset"), where + "/preset");
    if (preset == "matrix") {
      check_keys(a, {"preset", "n"}, where);
      long n = require_int(require_key(a, "n", where), 1, 12, where + "/n");
      echo = Json{{"preset", "matrix"}, {"n", n}};
      return std::make_shared<const Algebra>(Algebra::matrix_algebra(static_cast<int>(n), field));
    }
    if (preset == "poly_quotient") {
      check_keys(a, {"preset", "coeffs"}, where);
      const Json& cj = require_key(a, "coeffs", where);
      if (!cj.is_array() || cj.size() < 2) bad("'coeffs' must list a polynomial of degree >= 1", where + "/coeffs");
      if (cj.size() > 65) bad("polynomial degree limit is 64", where + "/coeffs");
      std::vector<Scalar> coeffs;
      Json coeff_echo = Json::array();
      for (size_t i = 0; i < cj.size(); ++i) {
        coeffs.push_back(scalar_from_json(cj[i], field, where + "/coeffs/" + std::to_string(i)));
        coeff_echo.push_back(scalar_to_json(coeffs.back()));
      }
      echo = Json{{"preset", "poly_quotient"}, {"coeffs", coeff_echo}};
      return at_location(where + "/coeffs", [&] {
        return std::make_shared<const Algebra>(Algebra::poly_quotient(coeffs, field));
      });
    }
    if (preset == "monoid_algebra") {
      check_keys(a, {"preset", "table"}, where);
      const Json& tj = require_key(a, "table", where);
      if (!tj.is_array() || tj.empty() || tj.size() > 64) bad("'table' must be a nonempty square array", where + "/table");
      long m = static_cast<long>(tj.size());
      std::vector<std::vector<int>> table;
      for (size_t i = 0; i < tj.size(); ++i) {
        std::string rw = where + "/table/" + std::to_string(i);
        if (!tj[i].is_array() || tj[i].size() != tj.size()) bad("expected a row of length " + std::to_string(m), rw);
        std::vector<int> row;
        for (size_t j = 0; j < tj[i].size(); ++j)
          row.push_back(static_cast<int>(require_int(tj[i][j], 0, m - 1, rw + "/" + std::to_string(j))));
        table.push_back(std::move(row));
      }
      echo = Json{{"preset", "monoid_algebra"}, {"table", table}};
      return at_location(where + "/table", [&] {
        return std::make_shared<const Algebra>(Algebra::monoid_algebra(table, field));
      });
    }
    bad("unknown preset '" + preset + "'", where + "/preset");
  }

  check_keys(a, {"dim", "structure", "one"}, where);
  long d = require_int(require_key(a, "dim", where), 1, 64, where + "/dim");
  const Json& sj = require_key(a, "structure", where);
  if (!sj.is_array() || static_cast<long>(sj.size()) != d) bad("'structure' must have one block per basis vector", where + "/structure");
  std::vector<std::vector<std::vector<Scalar>>> c(
      d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
  Json structure_echo = Json::array();
  for (long i = 0; i < d; ++i) {
    const Json& bi = sj[i];
    std::string wi = where + "/structure/" + std::to_string(i);
    if (!bi.is_array() || static_cast<long>(bi.size()) != d) bad("expected " + std::to_string(d) + " rows", wi);
    Json ei = Json::array();
    for (long j = 0; j < d; ++j) {
      const Json& bij = bi[j];
      std::string wj = wi + "/" + std::to_string(j);
      if (!bij.is_array() || static_cast<long>(bij.size()) != d) bad("expected " + std::to_string(d) + " coefficients", wj);
      Json ej = Json::array();
      for (long l = 0; l < d; ++l) {
        c[i][j][l] = scalar_from_json(bij[l], field, wj + "/" + std::to_string(l));
        ej.push_back(scalar_to_json(c[i][j][l]));
      }
      ei.push_back(std::move(ej));
    }
    structure_echo.push_back(std::move(ei));
  }
  const Json& oj = require_key(a, "one", where);
  if (!oj.is_array() || static_cast<long>(oj.size()) != d) bad("'one' must have " + std::to_string(d) + " coefficients", where + "/one");
  std::vector<Scalar> one;
  Json one_echo = Json::array();
  for (long i = 0; i < d; ++i) {
    one.push_back(scalar_from_json(oj[i], field, where + "/one/" + std::to_string(i)));
    one_echo.push_back(scalar_to_json(one.back()));
  }
  echo = Json{{"dim", d}, {"structure", structure_echo}, {"one", one_echo}};
  return at_location(where, [&] {
    return std::make_shared<const Algebra>(
        Algebra::from_structure_constants(field, static_cast<int>(d), c, one));
  });
}

ProblemDocument parse_abstract(const Json& doc) {
  check_keys(doc, {"atoms", "identity", "table"}, "");
  const Json& aj = require_key(doc, "atoms", "");
  if (!aj.is_array() || aj.empty()) bad("'atoms' must be a nonempty array of names", "/atoms");
  if (aj.size() > 64) bad("too many atoms (limit 64)", "/atoms");
  int n = static_cast<int>(aj.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(require_name(aj[i], "/atoms/" + std::to_string(i)));
    for (int j = 0; j < i; ++j)
      if (names[i] == names[j]) bad("duplicate atom name '" + names[i] + "'", "/atoms/" + std::to_string(i));
  }
  auto index_of = [&](const std::string& name, const std::string& where) {
    for (int i = 0; i < n; ++i)
      if (names[i] == name) return i;
    bad("unknown atom name '" + name + "'", where);
  };

  std::optional<int> identity;
  if (doc.contains("identity"))
    identity = index_of(require_string(doc.at("identity"), "/identity"), "/identity");

  const Json& tj = require_key(doc, "table", "");
  if (!tj.is_object()) bad("'table' must be an object keyed by 'a,b' pairs", "/table");
  std::vector<std::vector<AtomSet>> entries(n, std::vector<AtomSet>(n));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& [key, value] : tj.items()) {
    std::string where = "/table/" + key;
    size_t comma = key.find(',');
    if (comma == std::string::npos) bad("entry keys have the form 'a,b'", where);
    int i = index_of(key.substr(0, comma), where);
    int j = index_of(key.substr(comma + 1), where);
    if (!value.is_array()) bad("entry values are arrays of atom names", where);
    for (size_t k = 0; k < value.size(); ++k)
      entries[i][j].insert(index_of(require_string(value[k], where + "/" + std::to_string(k)),
                                    where + "/" + std::to_string(k)));
    seen[i][j] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!seen[i][j]) bad("missing entry '" + names[i] + "," + names[j] + "' (the table must be total)", "/table");

  ProblemDocument out;
  Json table_echo = Json::object();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (int z : entries[i][j]) cell.push_back(names[z]);
      table_echo[names[i] + "," + names[j]] = std::move(cell);
    }
  out.echo = Json{{"atoms", names}, {"table", std::move(table_echo)}};
  if (identity) out.echo["identity"] = names[*identity];
  out.abstract = at_location("/table", [&] {
    return make_hyper_table(std::move(names), identity, std::move(entries), TableSource::abstract_table);
  });
  return out;
}

}  // namespace

Scalar scalar_from_json(const Json& j, const FieldDescriptor& field, const std::string& where) {
  return at_location(where, [&]() -> Scalar {
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_array()) {
      if (field.order == 1 && j.size() > 1)
        bad("coordinate arrays longer than 1 need a cyclotomic field", where);
      if (j.size() > euler_phi(field.order))
        bad("too many coordinates for the field (degree " + std::to_string(euler_phi(field.order)) + ")", where);
      std::vector<Rational> coords;
      for (const auto& cj : j) {
        if (cj.is_number_integer())
          coords.emplace_back(cj.get<long>());
        else if (cj.is_string())
          coords.push_back(Rational::parse(cj.get<std::string>()));
        else
          bad("coordinates must be integers or rational strings", where);
      }
      return Scalar::from_coords(field.order, std::move(coords));
    }
    bad("expected an integer, a rational string, or a coordinate array", where);
  });
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational_value().str();
  Json arr = Json::array();
  for (const auto& c : s.coords()) arr.push_back(c.str());
  return arr;
}

Json field_json(const FieldDescriptor& field) {
  if (field.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "cyclotomic"}, {"order", field.order}};
}

ProblemDocument parse_problem(const Json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object", "");
  bool has_table = doc.contains("table"), has_algebra = doc.contains("algebra");
  if (has_table && has_algebra) bad("a document holds either an 'algebra' with atoms or an abstract 'table', not both", "");
  if (has_table) return parse_abstract(doc);
  if (!has_algebra) bad("document needs an 'algebra' block (atom system) or a 'table' block (abstract)", "");

  check_keys(doc, {"field", "algebra", "atoms", "identity"}, "");
  FieldDescriptor field = parse_field(doc);

  ProblemDocument out;
  AtomSystem sys;
  Json algebra_echo;
  sys.algebra = parse_algebra(doc.at("algebra"), field, algebra_echo);
  int d = sys.algebra->dim();

  const Json& aj = require_key(doc, "atoms", "");
  if (!aj.is_array() || aj.empty()) bad("'atoms' must be a nonempty array", "/atoms");
  if (aj.size() > 64) bad("too many atoms (limit 64)", "/atoms");
  Json atoms_echo = Json::array();
  for (size_t i = 0; i < aj.size(); ++i) {
    std::string where = "/atoms/" + std::to_string(i);
    const Json& one = aj[i];
    if (!one.is_object()) bad("expected an object with 'name' and 'basis'", where);
    check_keys(one, {"name", "basis"}, where);
    std::string name = one.contains("name") ? require_name(one.at("name"), where + "/name")
                                            : "atom_" + std::to_string(i);
    for (const auto& prev : sys.atoms)
      if (prev.name == name) bad("duplicate atom name '" + name + "'", where + "/name");
    const Json& bj = require_key(one, "basis", where);
    if (!bj.is_array()) bad("'basis' must be an array of rows", where + "/basis");
    std::vector<std::vector<Scalar>> rows;
    for (size_t r = 0; r < bj.size(); ++r) {
      std::string rw = where + "/basis/" + std::to_string(r);
      if (!bj[r].is_array() || static_cast<int>(bj[r].size()) != d)
        bad("expected a row of length " + std::to_string(d), rw);
      std::vector<Scalar> v;
      for (size_t c = 0; c < bj[r].size(); ++c)
        v.push_back(scalar_from_json(bj[r][c], field, rw + "/" + std::to_string(c)));
      rows.push_back(std::move(v));
    }
    Subspace space = Subspace::span(rows, d);
    atoms_echo.push_back(Json{{"name", name}, {"basis", subspace_basis_json(space)}});
    sys.atoms.push_back({std::move(name), std::move(space)});
  }

  out.echo = Json{{"field", field_json(field)}, {"algebra", std::move(algebra_echo)}, {"atoms", std::move(atoms_echo)}};
  if (doc.contains("identity")) {
    std::string id = require_string(doc.at("identity"), "/identity");
    int idx = -1;
    for (size_t i = 0; i < sys.atoms.size(); ++i)
      if (sys.atoms[i].name == id) idx = static_cast<int>(i);
    if (idx < 0) bad("unknown atom name '" + id + "'", "/identity");
    sys.declared_identity = idx;
    out.echo["identity"] = id;
  }
  out.system = std::move(sys);
  return out;
}

ProblemDocument parse_problem_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_problem(doc);
}

Json subspace_basis_json(const Subspace& s) {
  Json rows = Json::array();
  for (int r = 0; r < s.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < s.ambient(); ++c) row.push_back(scalar_to_json(s.basis().at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json atom_set_json(const HyperTable& t, const AtomSet& s) {
  Json arr = Json::array();
  for (int i : s) arr.push_back(t.atom_names[i]);
  return arr;
}

}  // namespace

Json hyper_table_json(const HyperTable& t) {
  Json entries = Json::object();
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      entries[t.atom_names[i] + "," + t.atom_names[j]] = atom_set_json(t, t.at(i, j));
  Json out{{"atoms", t.atom_names},
           {"entries", std::move(entries)},
           {"entire", t.is_entire()},
           {"source", t.source == TableSource::semiring ? "semiring" : "abstract"}};
  out["identity"] = t.identity ? Json(t.atom_names[*t.identity]) : Json(nullptr);
  return out;
}

Json partition_json(const HyperTable& t, const Partition& p) {
  Json classes = Json::array();
  for (const auto& cls : p.classes) {
    Json names = Json::array();
    for (int i : cls) names.push_back(t.atom_names[i]);
    classes.push_back(std::move(names));
  }
  Json class_of = Json::object();
  for (int i = 0; i < static_cast<int>(p.class_of.size()); ++i)
    class_of[t.atom_names[i]] = p.class_of[i];
  return Json{{"classes", std::move(classes)}, {"class_of", std::move(class_of)}};
}

Json monoid_json(const MonoidTable& m) {
  Json out{{"size", m.size}, {"product", m.product}, {"is_group", m.is_group}};
  out["identity_class"] = m.identity_class ? Json(*m.identity_class) : Json(nullptr);
  Json inv = Json::array();
  for (int v : m.inverse) inv.push_back(v < 0 ? Json(nullptr) : Json(v));
  out["inverse"] = std::move(inv);
  return out;
}

Json condensation_json(const CondensationReport& r) {
  Json out;
  out["entire"] = r.entire;
  out["associative"] = r.associative ? Json(*r.associative) : Json(nullptr);
  if (r.assoc_witness) {
    Json w = Json::array();
    for (int i : *r.assoc_witness) w.push_back(r.table.atom_names[i]);
    out["assoc_witness"] = std::move(w);
  } else {
    out["assoc_witness"] = nullptr;
  }
  out["weakly_reproducible"] = r.weakly_reproducible;
  out["reproducible"] = r.reproducible;
  out["partition"] = partition_json(r.table, r.partition);
  out["monoid"] = r.monoid ? monoid_json(*r.monoid) : Json(nullptr);
  out["monoid_error"] = r.monoid_error ? Json(*r.monoid_error) : Json(nullptr);
  out["focus"] = r.focus ? atom_set_json(r.table, *r.focus) : Json(nullptr);
  return out;
}

Json tower_json(const Tower& t) {
  Json levels = Json::array();
  for (size_t i = 0; i < t.levels.size(); ++i) {
    const TowerLevel& lv = t.levels[i];
    Json entry;
    entry["level"] = i + 1;
    entry["atoms"] = lv.table.atom_names;
    entry["group_or_monoid_table"] = lv.report.monoid ? monoid_json(*lv.report.monoid) : Json(nullptr);
    entry["focus_atom_names"] = atom_set_json(lv.table, lv.focus);
    entry["focal_dim"] = lv.focal_space.dim();
    entry["corollary_max"] = Json{{"holds", lv.corollary_max.holds},
                                  {"quotient_trivial", lv.corollary_max.quotient_trivial},
                                  {"focal_is_top", lv.corollary_max.focal_is_top}};
    levels.push_back(std::move(entry));
  }
  return Json{{"stabilized", t.stabilized}, {"levels", std::move(levels)}};
}

Json corpus_report_json(const CorpusReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"item", r.item}, {"pass", r.pass}, {"checks", std::move(checks)}};
}

Json character_row_json(const CharacterRow& row) {
  Json values = Json::array();
  for (const auto& v : row.values) values.push_back(scalar_to_json(v));
  return Json{{"name", row.name}, {"degree", row.degree}, {"values_by_element", std::move(values)}};
}

namespace {

std::string primitive_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty() && !prefix.empty()) {
      out << prefix << ": {}\n";
      return;
    }
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    bool all_primitive = true;
    for (const auto& v : j) all_primitive = all_primitive && v.is_primitive();
    if (all_primitive) {
      out << prefix << ":";
      for (const auto& v : j) out << ' ' << primitive_str(v);
      out << '\n';
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << primitive_str(j) << '\n';
}

}  // namespace

std::string report_text(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace focal
