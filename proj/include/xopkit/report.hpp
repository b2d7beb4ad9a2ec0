#ifndef XOPKIT_REPORT_HPP
#define XOPKIT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace xop {

struct CheckEntry {
  std::string suite;
  std::string context;
  std::string identity;
  int n = -1;  // -1 when the identity is not indexed by n
  bool pass = false;
  std::string detail;
};

/// Pass/fail log of a verification run. Failures are entries, not exceptions.
class Report {
 public:
  Report() = default;
  Report(std::string suite, std::string context)
      : suite_(std::move(suite)), context_(std::move(context)) {}

  bool check(const std::string& identity, bool ok, int n = -1, std::string detail = {}) {
    entries_.push_back({suite_, context_, identity, n, ok, std::move(detail)});
    return ok;
  }

  void merge(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  bool all_passed() const {
    for (const auto& e : entries_)
      if (!e.pass) return false;
    return true;
  }

  const CheckEntry* first_failure() const {
    for (const auto& e : entries_)
      if (!e.pass) return &e;
    return nullptr;
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& e : entries_) f += e.pass ? 0 : 1;
    return f;
  }

  const std::vector<CheckEntry>& entries() const { return entries_; }
  const std::string& suite() const { return suite_; }
  const std::string& context() const { return context_; }

 private:
  std::string suite_;
  std::string context_;
  std::vector<CheckEntry> entries_;
};

}  // namespace xop

#endif  // XOPKIT_REPORT_HPP
