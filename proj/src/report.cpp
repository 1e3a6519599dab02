#include "hopfoid/report.hpp"

#include <algorithm>

namespace hopfoid {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "skipped";
}

void VerificationReport::append(const VerificationReport& other, const std::string& id_prefix) {
  for (auto c : other.checks_) {
    c.id = id_prefix + c.id;
    checks_.push_back(std::move(c));
  }
  for (const auto& e : other.ledger_) ledger_.push_back(e);
}

const CheckResult* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::all_passed() const { return count(Status::fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.status == s; }));
}

std::vector<const CheckResult*> VerificationReport::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks_)
    if (c.status == Status::fail) out.push_back(&c);
  return out;
}

CheckResult run_check(std::string id, std::string description, std::string formula,
                      const std::function<std::optional<Witness>()>& body) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.formula = std::move(formula);
  const auto t0 = std::chrono::steady_clock::now();
  r.witness = body();
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.status = r.witness ? Status::fail : Status::pass;
  return r;
}

CheckResult skipped_check(std::string id, std::string description, std::string formula, std::string reason) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.formula = std::move(formula);
  r.status = Status::skipped;
  r.witness = Witness{{}, {}, std::move(reason)};
  return r;
}

}  // namespace hopfoid
