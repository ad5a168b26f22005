#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lawless {

/// exact: the value is the true quantity. budget_exceeded: the search hit
/// its budget and the value is only a lower bound. not_applicable: nothing to
/// measure (for instance an empty word set).
enum class Status { exact, budget_exceeded, not_applicable };

std::string to_string(Status s);

struct GrowthEntry {
  int n = 0;
  std::int64_t value = 0;
  Status status = Status::exact;
};

/// n -> value table for A(n), M(l) or pi(n).
class GrowthTable {
 public:
  GrowthTable() = default;
  explicit GrowthTable(std::string quantity) : quantity_(std::move(quantity)) {}

  void add(int n, std::int64_t value, Status status);
  const std::vector<GrowthEntry>& entries() const { return entries_; }
  const std::string& quantity() const { return quantity_; }
  const GrowthEntry& at(int n) const;
  /// Values nondecreasing in n over the whole table.
  bool is_monotone() const;
  bool all_exact() const;

  /// `n,value,status` with a header line.
  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::string quantity_;
  std::vector<GrowthEntry> entries_;
};

}  // namespace lawless
