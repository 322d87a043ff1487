#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace rct::cli {

/// Exit codes: 0 verdict computed (positive), 1 negative verdict, 2 input or
/// usage error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusCase {
  std::string name;
  bool ok = false;
  std::string diff;  // empty when ok
};

/// Each case is <name>.json ({"args": [...], "exit": k, "tolerance": x?})
/// next to <name>.out holding the expected stdout. Without a tolerance the
/// output must match byte for byte; with one, both sides are parsed as JSON
/// and floating numbers compared within it. `update` rewrites the .out files.
std::vector<CorpusCase> run_corpus(const std::filesystem::path& dir, bool update = false);

}  // namespace rct::cli
