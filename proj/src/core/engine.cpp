#include "core/engine.hpp"

#include <chrono>

#include "core/errors.hpp"

namespace focal {

namespace {

using Clock = std::chrono::steady_clock;

Json base_report(const std::string& command) {
  Json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["command"] = command;
  return r;
}

Json error_json(const Error& e) {
  Json out{{"code", errc_name(e.code())}, {"message", e.what()}};
  out["where"] = e.where().empty() ? Json(nullptr) : Json(e.where());
  return out;
}

int status_for(const Error& e) {
  switch (e.code()) {
    case Errc::invalid_document:
    case Errc::unknown_command:
    case Errc::unknown_name:
      return 2;
    case Errc::internal:
      return 3;
    default:
      return 1;
  }
}

const char* status_name(int status) {
  switch (status) {
    case 0: return "ok";
    case 1: return "failed";
    case 2: return "invalid_input";
    default: return "internal_error";
  }
}

RunResult finalize(Json report, int status, Clock::time_point t0) {
  report["status"] = status_name(status);
  RunResult out;
  out.status = status;
  out.json = report.dump(2) + "\n";
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  out.text = report_text(report) + "timing_ms: " + std::to_string(ms) + "\n";
  return out;
}

struct CommandOutcome {
  Json result;
  bool ok = true;
};

HyperTable table_of(const ProblemDocument& doc) {
  if (doc.is_abstract()) return *doc.abstract;
  return verify_atom_system(*doc.system);
}

CommandOutcome do_verify(const ProblemDocument& doc) {
  Json result;
  if (doc.is_abstract()) {
    const HyperTable& t = *doc.abstract;
    result["valid"] = true;
    result["source"] = "abstract";
    result["atoms"] = t.atom_names;
    result["identity"] = t.identity ? Json(t.atom_names[*t.identity]) : Json(nullptr);
    result["entire"] = t.is_entire();
    return {result, true};
  }
  const AtomSystem& sys = *doc.system;
  HyperTable t = verify_atom_system(sys);
  Json atoms = Json::array();
  for (const auto& a : sys.atoms) atoms.push_back(Json{{"name", a.name}, {"dim", a.space.dim()}});
  result["valid"] = true;
  result["source"] = "semiring";
  result["ambient_dim"] = sys.algebra->dim();
  result["atoms"] = std::move(atoms);
  result["identity"] = t.atom_names[*t.identity];
  result["top_dim"] = top_subspace(sys).dim();
  result["entire"] = t.is_entire();
  return {result, true};
}

CommandOutcome do_condense(const ProblemDocument& doc, bool with_beta) {
  HyperTable t = table_of(doc);
  CondensationReport r = condense(t);
  Json result = condensation_json(r);
  if (with_beta) result["beta"] = r.entire ? partition_json(t, beta_classes(t)) : Json(nullptr);
  return {result, r.structurally_sound()};
}

CommandOutcome do_tower(const ProblemDocument& doc, const RunOptions& opt) {
  if (doc.is_abstract())
    fail(Errc::invalid_document,
         "the tower command needs an algebra-backed document; an abstract table has no subspaces to restrict to");
  Tower tower = focal_tower(*doc.system, opt.max_depth);
  bool ok = true;
  for (const auto& level : tower.levels) ok = ok && level.corollary_max.holds;
  return {tower_json(tower), ok};
}

CommandOutcome dispatch(const std::string& command, const ProblemDocument& doc, const RunOptions& opt) {
  if (command == "verify") return do_verify(doc);
  if (command == "table") return {hyper_table_json(table_of(doc)), true};
  if (command == "condense") return do_condense(doc, false);
  if (command == "hyper") return do_condense(doc, true);
  if (command == "tower") return do_tower(doc, opt);
  fail(Errc::unknown_command, "unknown command '" + command + "'");
}

Json corpus_item_json(const CorpusReport& r) {
  Json j = corpus_report_json(r);
  if (r.item == "s3_standard") {
    Json rows = Json::array();
    for (const auto& row : s3_characters()) rows.push_back(character_row_json(row));
    j["characters"] = std::move(rows);
  }
  return j;
}

}  // namespace

RunResult run_parsed_command(const std::string& command, const ProblemDocument& doc,
                             const RunOptions& options) {
  auto t0 = Clock::now();
  Json report = base_report(command);
  report["problem"] = doc.echo;
  try {
    CommandOutcome outcome = dispatch(command, doc, options);
    report["result"] = std::move(outcome.result);
    return finalize(std::move(report), outcome.ok ? 0 : 1, t0);
  } catch (const Error& e) {
    report["error"] = error_json(e);
    return finalize(std::move(report), status_for(e), t0);
  } catch (const std::exception& e) {
    report["error"] = Json{{"code", "internal"}, {"message", e.what()}, {"where", nullptr}};
    return finalize(std::move(report), 3, t0);
  }
}

RunResult run_document_command(const std::string& command, const std::string& document_json,
                               const RunOptions& options) {
  auto t0 = Clock::now();
  Json report = base_report(command);
  ProblemDocument doc;
  try {
    doc = parse_problem_text(document_json);
  } catch (const Error& e) {
    report["error"] = error_json(e);
    return finalize(std::move(report), e.code() == Errc::internal ? 3 : 2, t0);
  } catch (const std::exception& e) {
    report["error"] = Json{{"code", "internal"}, {"message", e.what()}, {"where", nullptr}};
    return finalize(std::move(report), 3, t0);
  }
  return run_parsed_command(command, doc, options);
}

RunResult run_corpus_command(const std::string& name) {
  auto t0 = Clock::now();
  Json report = base_report("corpus");
  try {
    if (name.empty() || name == "all") {
      Json items = Json::array();
      bool all_ok = true;
      for (const auto& item : corpus_item_names()) {
        CorpusReport r = run_corpus_item(item);
        all_ok = all_ok && r.pass;
        items.push_back(corpus_item_json(r));
      }
      report["result"] = Json{{"items", std::move(items)}, {"pass", all_ok}};
      return finalize(std::move(report), all_ok ? 0 : 1, t0);
    }
    CorpusReport r = run_corpus_item(name);
    report["result"] = corpus_item_json(r);
    return finalize(std::move(report), r.pass ? 0 : 1, t0);
  } catch (const Error& e) {
    report["error"] = error_json(e);
    return finalize(std::move(report), status_for(e), t0);
  } catch (const std::exception& e) {
    report["error"] = Json{{"code", "internal"}, {"message", e.what()}, {"where", nullptr}};
    return finalize(std::move(report), 3, t0);
  }
}

RunResult run_a4_command() {
  auto t0 = Clock::now();
  Json report = base_report("a4-checks");
  try {
    CorpusReport r = a4_checks();
    report["result"] = corpus_report_json(r);
    return finalize(std::move(report), r.pass ? 0 : 1, t0);
  } catch (const Error& e) {
    report["error"] = error_json(e);
    return finalize(std::move(report), status_for(e), t0);
  } catch (const std::exception& e) {
    report["error"] = Json{{"code", "internal"}, {"message", e.what()}, {"where", nullptr}};
    return finalize(std::move(report), 3, t0);
  }
}

RunResult failure_result(const std::string& command, const Error& e, bool parse_stage) {
  auto t0 = Clock::now();
  Json report = base_report(command);
  report["error"] = error_json(e);
  int status = parse_stage ? (e.code() == Errc::internal ? 3 : 2) : status_for(e);
  return finalize(std::move(report), status, t0);
}

std::string corpus_names_text() {
  std::string out;
  for (const auto& name : corpus_item_names()) {
    out += name;
    out += '\n';
  }
  return out;
}

}  // namespace focal
