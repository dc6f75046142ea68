#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace grt {

// One failed identity at one point of a finite domain.
struct Violation {
  std::string check;
  std::vector<std::string> point;
  std::string detail;
};

// Outcome of an exhaustive verification sweep. Only the first
// kMaxStoredViolations are kept; violation_count counts all of them.
struct Report {
  static constexpr std::size_t kMaxStoredViolations = 8;

  std::string construction;
  std::string group;
  int arity = 0;
  std::uint64_t points_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  nlohmann::json extra = nlohmann::json::object();

  bool passed() const { return violation_count == 0; }
  void record(Violation v);
  // Adds the other sweep's counts and violations to this one.
  void merge(const Report& other);
  nlohmann::json to_json() const;
};

// Seeded source for every randomized sweep. mt19937_64 is fully specified by
// the standard, and the conversions below avoid the implementation-defined
// distributions, so a seed reproduces the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n).
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace grt
