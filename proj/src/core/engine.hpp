#pragma once

#include <string>

#include "core/errors.hpp"
#include "core/json_io.hpp"

namespace focal {

inline constexpr const char* kToolName = "focal";
inline constexpr const char* kToolVersion = "1.0.0";

struct RunOptions {
  int max_depth = 0;  // tower level bound; <= 0 means unbounded
  int threads = 1;    // accepted for interface stability; evaluation is sequential
};

// Status values mirror the C API: 0 = ok, 1 = computation finished but a
// structural check or expectation failed, 2 = invalid input, 3 = internal.
struct RunResult {
  int status = 0;
  std::string json;  // byte-stable for identical inputs
  std::string text;  // same report flattened to "key: value" lines + timing
};

// command is one of verify | table | condense | tower | hyper.
RunResult run_document_command(const std::string& command, const std::string& document_json,
                               const RunOptions& options = {});
RunResult run_parsed_command(const std::string& command, const ProblemDocument& doc,
                             const RunOptions& options = {});

// Runs one corpus item, or all of them when name is empty or "all".
RunResult run_corpus_command(const std::string& name);
RunResult run_a4_command();

// Report for a request that never reached computation (bad handle, bad
// arguments).  parse_stage forces status 2 unless the error is internal.
RunResult failure_result(const std::string& command, const Error& e, bool parse_stage);

// Newline-terminated corpus item names.
std::string corpus_names_text();

}  // namespace focal
