#pragma once

#include <json.hpp>

#include "core/corpus.hpp"

namespace focal {

// All reports use alphabetically sorted object keys and canonical scalar
// strings, so identical inputs serialize byte-identically.
using Json = nlohmann::json;

// A parsed problem file: either an algebra with named atom subspaces, or an
// abstract hyperoperation table.  `echo` is the normalized document; feeding
// it back to parse_problem yields an equivalent problem.
struct ProblemDocument {
  std::optional<AtomSystem> system;
  std::optional<HyperTable> abstract;
  Json echo;

  bool is_abstract() const { return abstract.has_value(); }
};

ProblemDocument parse_problem_text(const std::string& text);
ProblemDocument parse_problem(const Json& doc);

// Scalars serialize as "p/q" strings over the rationals and as arrays of
// coordinate strings (power basis of zeta_n) over a cyclotomic field; the
// parser accepts integers, strings, and such arrays.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldDescriptor& field, const std::string& where);

Json subspace_basis_json(const Subspace& s);
Json field_json(const FieldDescriptor& field);

Json hyper_table_json(const HyperTable& t);
Json partition_json(const HyperTable& t, const Partition& p);
Json monoid_json(const MonoidTable& m);

// Mirrors CondensationReport field-for-field (atom indices become names).
Json condensation_json(const CondensationReport& r);

Json tower_json(const Tower& t);
Json corpus_report_json(const CorpusReport& r);
Json character_row_json(const CharacterRow& row);

// Flattens a report object into stable "key: value" lines (arrays of scalars
// join with spaces; nested objects use dotted keys).
std::string report_text(const Json& report);

}  // namespace focal
