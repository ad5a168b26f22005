#include "lawless/growth_table.hpp"

#include <json.hpp>
#include <sstream>

#include "lawless/errors.hpp"

namespace lawless {

std::string to_string(Status s) {
  switch (s) {
    case Status::exact:
      return "exact";
    case Status::budget_exceeded:
      return "budget_exceeded";
    case Status::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

void GrowthTable::add(int n, std::int64_t value, Status status) {
  entries_.push_back({n, value, status});
}

const GrowthEntry& GrowthTable::at(int n) const {
  for (const auto& e : entries_) {
    if (e.n == n) return e;
  }
  throw NotFound("no table entry for n = " + std::to_string(n));
}

bool GrowthTable::is_monotone() const {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].value < entries_[i - 1].value) return false;
  }
  return true;
}

bool GrowthTable::all_exact() const {
  for (const auto& e : entries_) {
    if (e.status != Status::exact) return false;
  }
  return true;
}

std::string GrowthTable::to_csv() const {
  std::ostringstream os;
  os << "n,value,status\n";
  for (const auto& e : entries_) os << e.n << ',' << e.value << ',' << to_string(e.status) << '\n';
  return os.str();
}

std::string GrowthTable::to_json() const {
  nlohmann::ordered_json j;
  j["quantity"] = quantity_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    j["entries"].push_back({{"n", e.n}, {"value", e.value}, {"status", to_string(e.status)}});
  }
  return j.dump(2);
}

}  // namespace lawless
