#include "superint/report.hpp"

#include <algorithm>

namespace si {

const char* status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Mismatch: return "mismatch";
    case Status::Inconsistent: return "inconsistent";
  }
  return "?";
}

Check& Check::expect(bool ok, const std::string& diff_if_not, Status on_fail) {
  if (ok) return *this;
  if (std::find(diffs.begin(), diffs.end(), diff_if_not) == diffs.end()) diffs.push_back(diff_if_not);
  if (static_cast<int>(on_fail) > static_cast<int>(status)) status = on_fail;
  return *this;
}

void Report::merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

size_t Report::count(Status s) const {
  return std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; });
}

const Check* Report::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json Report::to_json(bool with_time) const {
  std::vector<const Check*> order;
  for (auto& c : checks) order.push_back(&c);
  // stable: duplicate names keep insertion order
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->name < b->name; });
  nlohmann::json arr = nlohmann::json::array();
  for (auto* c : order) {
    nlohmann::json j;
    j["name"] = c->name;
    j["anchor"] = c->anchor;
    j["mode"] = mode_name(c->mode);
    j["status"] = status_name(c->status);
    j["constants"] = c->constants;
    j["diffs"] = c->diffs;
    if (with_time) j["wall_time"] = c->wall_time;
    arr.push_back(std::move(j));
  }
  nlohmann::json out;
  out["schema"] = 1;
  out["checks"] = std::move(arr);
  out["summary"] = {{"verified", count(Status::Verified)},
                    {"mismatch", count(Status::Mismatch)},
                    {"inconsistent", count(Status::Inconsistent)}};
  return out;
}

std::string Report::dump(bool with_time) const { return to_json(with_time).dump(2) + "\n"; }

}  // namespace si
