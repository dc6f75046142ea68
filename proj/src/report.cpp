#include "grt/report.hpp"

namespace grt {

void Report::record(Violation v) {
  ++violation_count;
  if (violations.size() < kMaxStoredViolations) violations.push_back(std::move(v));
}

void Report::merge(const Report& other) {
  points_checked += other.points_checked;
  violation_count += other.violation_count;
  for (const auto& v : other.violations)
    if (violations.size() < kMaxStoredViolations) violations.push_back(v);
}

nlohmann::json Report::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations)
    vs.push_back({{"check", v.check}, {"point", v.point}, {"detail", v.detail}});
  nlohmann::json j = {{"construction", construction},
                      {"group", group},
                      {"arity", arity},
                      {"points_checked", points_checked},
                      {"violation_count", violation_count},
                      {"violations", std::move(vs)},
                      {"passed", passed()}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

}  // namespace grt
