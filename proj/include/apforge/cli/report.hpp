#pragma once

// Check records and the run report written by the command-line tool.

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apforge::cli {

enum class Status { Pass, Fail, Undecided, UncheckedClaim };

std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  std::string expected;
  std::string actual;
  double runtime_ms = 0;
};

struct Summary {
  std::size_t pass = 0, fail = 0, undecided = 0, unchecked_claim = 0;
};

struct RunReport {
  std::string command;
  std::string corpus_version;
  std::string corpus_hash;
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void add(const std::string& id, bool ok, std::string expected, std::string actual, double ms = 0);
  Summary summary() const;
  bool any_fail() const { return summary().fail > 0; }

  /// timings = false writes runtime_ms as 0 so reports compare byte for byte.
  nlohmann::ordered_json to_json(bool timings = true) const;
  std::string table(bool timings = true) const;
};

}  // namespace apforge::cli
