#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "defzero/error.hpp"
#include "defzero/report.hpp"

namespace defzero::report {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Relative paths are taken against the corpus directory when they exist there.
std::string resolve_path(const std::string& value, const std::string& base_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (base_dir.empty() || fs::path(value).is_absolute() || fs::is_regular_file(value, ec)) return value;
  const fs::path candidate = fs::path(base_dir) / value;
  return fs::is_regular_file(candidate, ec) ? candidate.string() : value;
}

struct EntryResult {
  std::vector<std::string> lines;
  std::size_t triples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool error = false;
};

EntryResult run_entry(const CorpusEntry& e, const Options& base) {
  EntryResult r;
  Options options = base;
  options.prime = e.prime;
  options.q_selector = e.q_selector;
  try {
    GroupSource source = load_group(e.group, options.max_order);
    source.name = e.name;
    for (auto& report : verify(source, options)) {
      ++r.triples;
      if (report.verdicts.ok()) {
        ++r.passed;
      } else {
        ++r.failed;
      }
      r.lines.push_back(std::move(report.json));
    }
  } catch (const Error& err) {
    r.error = true;
    Json j;
    j["name"] = e.name;
    j["group"] = e.group;
    j["p"] = e.prime;
    j["q_selector"] = e.q_selector;
    j["error"] = {{"code", error_code_name(err.code())}, {"message", err.what()}};
    r.lines.push_back(j.dump());
  } catch (const std::exception& err) {
    r.error = true;
    Json j;
    j["name"] = e.name;
    j["group"] = e.group;
    j["p"] = e.prime;
    j["q_selector"] = e.q_selector;
    j["error"] = {{"code", "Internal"}, {"message", err.what()}};
    r.lines.push_back(j.dump());
  }
  return r;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& base_dir) {
  std::vector<CorpusEntry> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(raw);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(trim(field));
    if (fields.size() != 4) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": expected 'name ; group ; p ; q-selector'");
    }
    CorpusEntry e;
    e.line = line;
    e.name = fields[0];
    e.group = resolve_path(fields[1], base_dir);
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(fields[2], &used);
      if (used != fields[2].size() || v < 2) throw std::invalid_argument("p");
      e.prime = static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": bad prime '" + fields[2] + "'");
    }
    e.q_selector = fields[3].rfind("gens:", 0) == 0 ? fields[3] : resolve_path(fields[3], base_dir);
    if (e.name.empty() || e.group.empty() || e.q_selector.empty()) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": empty field");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open corpus " + path);
  return parse_corpus(in, std::filesystem::path(path).parent_path().string());
}

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, const Options& options,
                         const std::function<void(const std::string&)>& sink) {
  const std::size_t n = entries.size();
  std::vector<std::optional<EntryResult>> results(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      EntryResult r = run_entry(entries[i], options);
      {
        std::lock_guard lock(mu);
        results[i] = std::move(r);
      }
      ready.notify_all();
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  CorpusSummary summary;
  summary.entries = n;
  for (std::size_t i = 0; i < n; ++i) {
    EntryResult r;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      r = std::move(*results[i]);
      results[i].reset();
    }
    for (const auto& line : r.lines) sink(line);
    summary.triples += r.triples;
    summary.passed += r.passed;
    summary.failed += r.failed;
    if (r.error) ++summary.errors;
  }
  pool.clear();

  Json s;
  s["summary"] = {{"entries", summary.entries},
                  {"triples", summary.triples},
                  {"passed", summary.passed},
                  {"failed", summary.failed},
                  {"errors", summary.errors},
                  {"ok", summary.ok()}};
  sink(s.dump());
  return summary;
}

}  // namespace defzero::report
