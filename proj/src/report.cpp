#include "cuntz/report.hpp"

#include <algorithm>
#include <sstream>

#include "cuntz/error.hpp"

namespace cuntz {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Check make_check(std::string id, bool ok, std::string detail, std::optional<Json> witness) {
  return Check{std::move(id), ok ? Status::pass : Status::fail, std::move(detail), std::move(witness)};
}

void CheckReport::add(Check check) {
  if (find(check.id) != nullptr) throw InvalidArgument("duplicate check id '" + check.id + "'");
  checks.push_back(std::move(check));
}

void CheckReport::add_all(std::vector<Check> more) {
  for (auto& c : more) add(std::move(c));
}

bool CheckReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

const Check* CheckReport::find(const std::string& id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

Json CheckReport::to_json(bool include_timing) const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
  Json list = Json::array();
  for (const Check* c : sorted) {
    Json entry = {{"id", c->id}, {"status", to_string(c->status)}, {"detail", c->detail}};
    if (c->witness) entry["witness"] = *c->witness;
    list.push_back(std::move(entry));
  }
  return Json{{"suite", suite},
              {"n", n},
              {"backend", backend},
              {"status", passed() ? "pass" : "fail"},
              {"checks", std::move(list)},
              {"elapsed_ms", include_timing ? elapsed.count() : 0}};
}

std::string CheckReport::to_text() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
  std::ostringstream os;
  os << "suite " << suite << "  n=" << n << "  backend=" << backend << '\n';
  for (const Check* c : sorted) {
    os << "  [" << to_string(c->status) << "] " << c->id;
    if (!c->detail.empty()) os << " -- " << c->detail;
    os << '\n';
  }
  os << (passed() ? "PASS" : "FAIL") << "  (" << checks.size() << " checks, " << elapsed.count() << " ms)\n";
  return os.str();
}

}  // namespace cuntz
