// mlts: run, check or trace MLTS programs, or replay the golden corpus.

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mlts/session.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Every `name.mlts` in `dir` is run in a fresh session; its output, both
// streams interleaved, followed by `exit N`, must equal `name.expected`.
int run_corpus(const fs::path& dir, const mlts::SessionOptions& base, bool update) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".mlts") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  int failed = 0;
  for (const auto& f : files) {
    std::ostringstream got;
    mlts::Session session(got, got, base);
    int status = session.run(slurp(f), f.filename().string());
    got << "exit " << status << "\n";
    fs::path expected = fs::path(f).replace_extension(".expected");
    if (update) {
      std::ofstream(expected) << got.str();
      std::cout << "UPDATED " << f.filename().string() << "\n";
      continue;
    }
    if (fs::exists(expected) && slurp(expected) == got.str()) {
      std::cout << "PASS " << f.filename().string() << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << f.filename().string() << "\n" << got.str();
    }
  }
  std::cout << files.size() - failed << "/" << files.size() << " corpus programs passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MLTS interpreter"};
  mlts::SessionOptions opts;
  std::vector<std::string> files;
  app.add_flag("--trace", opts.trace, "print every reduction step");
  app.add_flag("--bigstep", opts.bigstep, "evaluate with the natural-semantics engine");
  app.add_flag("--differential", opts.differential, "run both engines and compare");
  app.add_option("--fuel", opts.fuel, "step bound")->check(CLI::PositiveNumber);
  app.add_flag("--check", opts.check_only, "type-check only");
  app.add_option("files", files, "source files (none: interactive loop)");

  auto* test = app.add_subcommand("test", "replay a directory of golden programs");
  std::string dir;
  bool update = false;
  test->add_option("dir", dir, "corpus directory")->required()->check(CLI::ExistingDirectory);
  test->add_flag("--update", update, "rewrite the .expected files");

  CLI11_PARSE(app, argc, argv);

  if (*test) return run_corpus(dir, opts, update);

  mlts::Session session(std::cout, std::cerr, opts);
  if (files.empty()) {
    session.repl(std::cin, isatty(STDIN_FILENO));
    return 0;
  }
  int worst = 0;
  for (const auto& f : files) {
    worst = session.run_file(f);
    if (worst != 0) break;
  }
  return worst;
}
