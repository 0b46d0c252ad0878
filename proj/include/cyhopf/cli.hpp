#pragma once

// Command-line front end: one verb per invocation, text or JSON output.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict (invalid,
// not CY, not isomorphic, corpus mismatch), 2 usage, parse or missing-file
// errors, 3 inconclusive.

#include <cstdint>
#include <string>
#include <vector>

namespace cyhopf::cli {

enum Exit : int { ok = 0, negative = 1, usage = 2, inconclusive = 3 };

struct Command {
  /// validate, roots, cy, isom, classify or corpus.
  std::string verb;
  std::vector<std::string> inputs;
  bool json = false;
  std::int64_t bound = 8;
  /// classify only: the group algebra of Z^n instead of a datum file.
  std::int64_t group_algebra = 0;
};

struct Output {
  int exit_code = ok;
  std::string out;
  std::string err;
};

/// Runs one command. Never throws; errors become exit code 2 with the
/// message on `err`.
Output run(const Command& cmd);

/// Runs every *.datum fixture in `dir` against `dir`/EXPECTED and prints one
/// row per fixture, ordered by file name.
Output run_corpus(const std::string& dir, bool json);

/// Parses argv (without the program name) and runs it.
Output run_args(const std::vector<std::string>& args);

/// Directory of the bundled corpus.
std::string default_corpus_dir();

}  // namespace cyhopf::cli
