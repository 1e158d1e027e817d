#include "focal/focal.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "core/engine.hpp"
#include "core/errors.hpp"

struct focal_problem {
  focal::ProblemDocument doc;
};

struct focal_report {
  int status = FOCAL_INTERNAL_ERROR;
  std::string json;
  std::string text;
};

namespace {

focal_report* wrap(focal::RunResult r) noexcept {
  try {
    auto* out = new focal_report;
    out->status = r.status;
    out->json = std::move(r.json);
    out->text = std::move(r.text);
    return out;
  } catch (...) {
    return nullptr;
  }
}

focal_report* bad_argument(const char* command, const std::string& message) noexcept {
  try {
    focal::Error e(focal::Errc::invalid_document, message);
    return wrap(focal::failure_result(command ? command : "(null)", e, true));
  } catch (...) {
    return nullptr;
  }
}

focal_report* internal_failure(const char* command, const char* message) noexcept {
  try {
    focal::Error e(focal::Errc::internal, message);
    return wrap(focal::failure_result(command ? command : "(null)", e, true));
  } catch (...) {
    return nullptr;
  }
}

}  // namespace

extern "C" {

int focal_abi_version(void) { return 1; }

focal_problem* focal_problem_parse(const char* document_json, focal_report** error_report) {
  if (error_report) *error_report = nullptr;
  try {
    if (!document_json) {
      if (error_report) *error_report = bad_argument("parse", "document text is null");
      return nullptr;
    }
    auto* p = new focal_problem{focal::parse_problem_text(document_json)};
    return p;
  } catch (const focal::Error& e) {
    if (error_report) *error_report = wrap(focal::failure_result("parse", e, true));
    return nullptr;
  } catch (const std::exception& e) {
    if (error_report) *error_report = internal_failure("parse", e.what());
    return nullptr;
  } catch (...) {
    if (error_report) *error_report = internal_failure("parse", "unknown exception");
    return nullptr;
  }
}

void focal_problem_free(focal_problem* problem) { delete problem; }

focal_report* focal_problem_run(const focal_problem* problem, const char* command, int max_depth) {
  if (!command) return bad_argument(command, "command is null");
  if (!problem) return bad_argument(command, "problem handle is null");
  try {
    focal::RunOptions opt;
    opt.max_depth = max_depth;
    return wrap(focal::run_parsed_command(command, problem->doc, opt));
  } catch (const std::exception& e) {
    return internal_failure(command, e.what());
  } catch (...) {
    return internal_failure(command, "unknown exception");
  }
}

focal_report* focal_run_document(const char* command, const char* document_json, int max_depth) {
  if (!command) return bad_argument(command, "command is null");
  if (!document_json) return bad_argument(command, "document text is null");
  try {
    focal::RunOptions opt;
    opt.max_depth = max_depth;
    return wrap(focal::run_document_command(command, document_json, opt));
  } catch (const std::exception& e) {
    return internal_failure(command, e.what());
  } catch (...) {
    return internal_failure(command, "unknown exception");
  }
}

focal_report* focal_run_corpus(const char* name) {
  try {
    return wrap(focal::run_corpus_command(name ? name : "all"));
  } catch (const std::exception& e) {
    return internal_failure("corpus", e.what());
  } catch (...) {
    return internal_failure("corpus", "unknown exception");
  }
}

focal_report* focal_run_a4_checks(void) {
  try {
    return wrap(focal::run_a4_command());
  } catch (const std::exception& e) {
    return internal_failure("a4-checks", e.what());
  } catch (...) {
    return internal_failure("a4-checks", "unknown exception");
  }
}

focal_status focal_report_status(const focal_report* report) {
  if (!report) return FOCAL_INTERNAL_ERROR;
  return static_cast<focal_status>(report->status);
}

const char* focal_report_json(const focal_report* report) {
  return report ? report->json.c_str() : "";
}

const char* focal_report_text(const focal_report* report) {
  return report ? report->text.c_str() : "";
}

void focal_report_free(focal_report* report) { delete report; }

char* focal_corpus_names(void) {
  try {
    std::string names = focal::corpus_names_text();
    char* out = static_cast<char*>(std::malloc(names.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, names.c_str(), names.size() + 1);
    return out;
  } catch (...) {
    return nullptr;
  }
}

void focal_string_free(char* s) { std::free(s); }

}  // extern "C"
