#pragma once

// Verification runs over (G, p, Q) triples and their JSON reports.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "defzero/permgroup.hpp"

namespace defzero::report {

using groups::Group;
using groups::Subgroup;

struct Options {
  std::uint32_t prime = 2;
  /// auto | op | trivial | 1 | whole | file | gens:<cycles>|<cycles>... | path to a group file
  std::string q_selector = "auto";
  /// Extension degree for the field-invariance check; 0 picks the splitting degree.
  unsigned field_degree = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t max_order = groups::kDefaultMaxOrder;
  bool dump_bases = false;
  /// Adds wall-clock timings to each report (breaks byte-identical output).
  bool timings = false;
};

/// A group together with where it came from.
struct GroupSource {
  std::string name;
  std::shared_ptr<const Group> group;
  /// Subgroup generators from a group file's subgroup section.
  std::optional<std::vector<groups::Perm>> file_subgroup;
};

/// A path to an existing group file, otherwise a builtin constructor.
GroupSource load_group(const std::string& spec, std::size_t max_order = groups::kDefaultMaxOrder);

std::vector<Subgroup> resolve_q(const GroupSource& source, std::uint32_t p, const std::string& selector);

/// Smallest m with p^m = 1 modulo the p'-part of exp(G).
unsigned splitting_degree(const Group& g, std::uint32_t p);

struct Verdicts {
  bool match = false;
  bool all_properties = false;
  bool ok() const noexcept { return match && all_properties; }
};

/// One JSON object per triple, serialized on a single line.
struct TripleReport {
  std::string json;
  Verdicts verdicts;
};

TripleReport verify_triple(const GroupSource& source, const Subgroup& q, const Options& options);

/// Reports for every Q the selector resolves to.
std::vector<TripleReport> verify(const GroupSource& source, const Options& options);

/// Spanning p'-elements with both condition flags, defect-zero classes, the
/// classes spanning (FG)_Q^G, and optionally bases. One JSON object per Q.
std::vector<std::string> inspect(const GroupSource& source, const Options& options);

struct CorpusEntry {
  std::size_t line = 0;
  std::string name;
  std::string group;
  std::uint32_t prime = 0;
  std::string q_selector;
};

/// "name ; builtin-or-path ; p ; q-selector" per line; '#' comments. Relative
/// group paths resolve against the corpus file's directory.
std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& base_dir = {});
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusSummary {
  std::size_t entries = 0;
  std::size_t triples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  bool ok() const noexcept { return failed == 0 && errors == 0; }
};

/// Runs entries on a pool of options.jobs workers. Lines reach `sink` in
/// corpus order from one thread; the last line is the summary object.
CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, const Options& options,
                         const std::function<void(const std::string&)>& sink);

}  // namespace defzero::report
