#pragma once
#include <string>
#include <vector>

#include "json.hpp"
#include "superint/ratfun.hpp"

namespace si {

// verified: identity holds and agrees with the reference form.
// mismatch: identity holds but the reference (printed) form differs.
// inconsistent: the computation itself fails.
enum class Status { Verified, Mismatch, Inconsistent };
const char* status_name(Status s);

struct Check {
  Check() = default;
  Check(std::string n, std::string a, Mode m = Mode::Symbolic) : name(std::move(n)), anchor(std::move(a)), mode(m) {}

  std::string name;
  std::string anchor;  // which displayed formula or claim this certifies
  Mode mode = Mode::Symbolic;
  Status status = Status::Verified;
  nlohmann::json constants = nlohmann::json::object();
  std::vector<std::string> diffs;
  double wall_time = 0;

  Check& expect(bool ok, const std::string& diff_if_not, Status on_fail = Status::Inconsistent);
};

struct Report {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& o);
  size_t count(Status s) const;
  bool ok() const { return count(Status::Inconsistent) == 0; }
  const Check* find(const std::string& name) const;
  nlohmann::json to_json(bool with_time = false) const;
  std::string dump(bool with_time = false) const;
};

// times a block and stores the result in c.wall_time
template <class F>
void timed(Check& c, F&& f);

}  // namespace si

#include <chrono>
template <class F>
void si::timed(Check& c, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  c.wall_time += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
