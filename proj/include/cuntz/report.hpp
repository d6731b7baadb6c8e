#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cuntz {

using Json = nlohmann::json;

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Check {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  std::optional<Json> witness;
};

Check make_check(std::string id, bool ok, std::string detail, std::optional<Json> witness = std::nullopt);

struct CheckReport {
  std::string suite;
  unsigned n = 0;
  std::string backend;
  std::vector<Check> checks;
  std::chrono::milliseconds elapsed{0};

  /// Appends a check; throws InvalidArgument on a duplicate id.
  void add(Check check);
  void add_all(std::vector<Check> checks);

  bool passed() const;
  const Check* find(const std::string& id) const;

  /// Sorted by check id. With include_timing false, elapsed_ms is written as 0
  /// so that reports for a fixed seed are byte-identical.
  Json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

}  // namespace cuntz
