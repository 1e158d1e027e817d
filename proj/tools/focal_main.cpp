// Command-line front end.  Talks to the engine exclusively through the C API
// so it doubles as a living example of embedding the shared library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "focal/focal.h"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return f.good() || f.eof();
}

// Prints the chosen body, frees the report, and turns the report status into
// a process exit code (internal errors collapse to 1).
int emit(focal_report* report, bool as_json, const std::string& out_path) {
  if (!report) {
    std::cerr << "focal: out of memory\n";
    return 1;
  }
  const char* body = as_json ? focal_report_json(report) : focal_report_text(report);
  int status = static_cast<int>(focal_report_status(report));
  bool wrote = true;
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (f) f << body;
    wrote = f.good();
  }
  focal_report_free(report);
  if (!wrote) {
    std::cerr << "focal: cannot write '" << out_path << "'\n";
    return 1;
  }
  return status == FOCAL_INTERNAL_ERROR ? 1 : status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact condensation and focal-tower analysis of atomistic subsemirings "
               "of subspace lattices of finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_body = false;
  bool text_body = false;
  std::string out_path;
  int max_depth = 0;
  int threads = 1;
  auto* opt_json = app.add_flag("--json", json_body, "emit the JSON report");
  auto* opt_text = app.add_flag("--text", text_body, "emit the flattened text report (default)");
  opt_json->excludes(opt_text);
  app.add_option("--out", out_path, "write the report body to a file instead of stdout");
  app.add_option("--max-depth", max_depth, "bound the number of tower levels (0 = unbounded)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", threads,
                 "worker threads; results never depend on this (evaluation is sequential)")
      ->check(CLI::PositiveNumber);

  struct DocCommand {
    const char* name;
    const char* help;
    CLI::App* sub = nullptr;
  };
  DocCommand doc_commands[] = {
      {"verify", "validate a problem document and summarize its atoms"},
      {"table", "compute the hyperoperation table of the atoms"},
      {"condense", "compute the condensation partition, quotient, and focus"},
      {"hyper", "condense plus the beta relation on atoms"},
      {"tower", "iterate focal restriction until the subalgebra stabilizes"},
  };
  std::string file;
  for (auto& c : doc_commands) {
    c.sub = app.add_subcommand(c.name, c.help);
    c.sub->add_option("file", file, "problem document (JSON), or - for stdin")->required();
  }

  auto* corpus = app.add_subcommand("corpus", "run a recorded corpus item and check its expectations");
  std::string corpus_name;
  bool corpus_all = false;
  bool corpus_list = false;
  corpus->add_option("name", corpus_name, "corpus item name (see --list)");
  corpus->add_flag("--all", corpus_all, "run every corpus item");
  corpus->add_flag("--list", corpus_list, "print the available item names and exit");

  auto* a4 = app.add_subcommand(
      "a4-checks", "scripted subspace product checks for the dependent-atom example over Q(zeta_3)");

  CLI11_PARSE(app, argc, argv);
  const bool as_json = json_body;

  if (corpus->parsed()) {
    if (corpus_list) {
      char* names = focal_corpus_names();
      if (names) {
        std::fputs(names, stdout);
        focal_string_free(names);
      }
      return 0;
    }
    if (!corpus_all && corpus_name.empty()) {
      std::cerr << "focal: corpus needs an item name, --all, or --list\n";
      return 2;
    }
    const char* name = corpus_all ? "all" : corpus_name.c_str();
    return emit(focal_run_corpus(name), as_json, out_path);
  }

  if (a4->parsed()) return emit(focal_run_a4_checks(), as_json, out_path);

  for (const auto& c : doc_commands) {
    if (!c.sub->parsed()) continue;
    std::string document;
    if (!read_input(file, document)) {
      std::cerr << "focal: cannot read '" << file << "'\n";
      return 2;
    }
    return emit(focal_run_document(c.name, document.c_str(), max_depth), as_json, out_path);
  }

  return 2;  // unreachable: require_subcommand guarantees one branch above
}
