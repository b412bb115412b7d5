// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "defzero.h"

namespace {

void print_line(const char* line, void*) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

int report_failure(dz_status s) {
  std::cerr << "defzero: " << dz_status_name(s) << ": " << dz_last_error() << '\n';
  return 2;
}

struct GroupHandle {
  dz_group* g = nullptr;
  ~GroupHandle() { dz_group_free(g); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace ideals of group algebras against defect-zero block counts"};
  app.set_version_flag("--version", std::string(dz_version()));
  app.require_subcommand(1);

  dz_options opts;
  dz_options_init(&opts);
  std::string q = "auto";
  std::string target;
  bool dump = false;
  bool timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field-degree", opts.field_degree, "Extension degree for the field-invariance check (0 = splitting)");
    sub->add_option("--seed", opts.seed, "Seed for randomized steps");
    sub->add_option("--max-order", opts.max_order, "Refuse groups larger than this");
    sub->add_flag("--dump-bases", dump, "Include basis vectors in the output");
    sub->add_flag("--timings", timings, "Add wall-clock timings to each report");
  };

  auto* verify = app.add_subcommand("verify", "Verify one group for every resolved Q");
  verify->add_option("group", target, "Group file path or builtin, e.g. \"symmetric 4\"")->required();
  verify->add_option("--prime,-p", opts.prime, "Characteristic p")->required();
  verify->add_option("--q", q, "auto | op | trivial | whole | file | gens:<cycles>|... | group file path");
  add_common(verify);

  auto* inspect = app.add_subcommand("inspect", "Spanning elements, defect-zero classes and (FG)_Q^G class sums");
  inspect->add_option("group", target, "Group file path or builtin")->required();
  inspect->add_option("--prime,-p", opts.prime, "Characteristic p")->required();
  inspect->add_option("--q", q, "Q selector");
  add_common(inspect);

  auto* corpus = app.add_subcommand("corpus", "Run every entry of a corpus file");
  corpus->add_option("file", target, "Corpus file: name ; group ; p ; q-selector")->required()->check(CLI::ExistingFile);
  corpus->add_option("--jobs,-j", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here with a success code.
    return app.exit(e) == 0 ? 0 : 2;
  }
  opts.q_selector = q.c_str();
  opts.dump_bases = dump ? 1 : 0;
  opts.timings = timings ? 1 : 0;

  if (*corpus) {
    dz_corpus_summary s{};
    const dz_status st = dz_corpus_run(target.c_str(), &opts, print_line, nullptr, &s);
    if (st != DZ_OK) return report_failure(st);
    std::cerr << "corpus: " << s.entries << " entries, " << s.triples << " triples, " << s.passed << " passed, "
              << s.failed << " failed, " << s.errors << " errors\n";
    return (s.failed == 0 && s.errors == 0) ? 0 : 1;
  }

  GroupHandle h;
  if (const dz_status st = dz_group_load(target.c_str(), opts.max_order, &h.g); st != DZ_OK) return report_failure(st);

  if (*inspect) {
    const dz_status st = dz_inspect(h.g, &opts, print_line, nullptr);
    return st == DZ_OK ? 0 : report_failure(st);
  }

  int ok = 0;
  const dz_status st = dz_verify(h.g, &opts, print_line, nullptr, &ok);
  if (st != DZ_OK) return report_failure(st);
  std::cerr << "verify: " << target << " p=" << opts.prime << (ok ? " all checks passed" : " FAILED") << '\n';
  return ok ? 0 : 1;
}
