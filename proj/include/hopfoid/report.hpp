#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfoid/linalg.hpp"

namespace hopfoid {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Basis coordinates at which an identity failed.
struct Witness {
  std::vector<Index> indices;
  std::vector<std::string> labels;
  std::string note;
};

struct CheckResult {
  std::string id;
  std::string description;
  /// The identity being checked, written as a formula.
  std::string formula;
  Status status = Status::skipped;
  std::optional<Witness> witness;
  double timing_ms = 0.0;
};

/// Outcome of one printed-formula comparison.
struct LedgerEntry {
  std::string formula_id;
  std::string printed;
  std::string computed;
  /// "pass", "documented:<tag>" for a known suspected typo, or "mismatch".
  std::string verdict;
};

class VerificationReport {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const VerificationReport& other, const std::string& id_prefix = "");
  void add_ledger(LedgerEntry e) { ledger_.push_back(std::move(e)); }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  const std::vector<LedgerEntry>& ledger() const noexcept { return ledger_; }
  const CheckResult* find(const std::string& id) const;

  bool all_passed() const;
  std::size_t count(Status s) const;
  std::vector<const CheckResult*> failures() const;

 private:
  std::vector<CheckResult> checks_;
  std::vector<LedgerEntry> ledger_;
};

/// Times `body`; a returned witness marks failure.
CheckResult run_check(std::string id, std::string description, std::string formula,
                      const std::function<std::optional<Witness>()>& body);
CheckResult skipped_check(std::string id, std::string description, std::string formula, std::string reason);

}  // namespace hopfoid
