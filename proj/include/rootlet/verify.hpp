#pragma once

#include <string>
#include <vector>

#include "rootlet/rootsys.hpp"

namespace rootlet {

enum class CheckStatus { pass, fail, reported };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;  // counterexample or informational note
};

struct TypeReport {
  CartanType type;
  std::vector<CheckResult> checks;
  bool all_ok() const;  // no failed check (reported ones never fail a run)
};

struct VerifyOptions {
  std::string filter = "*";   // glob over check names
  int brute_cap = 6;          // highest rank for the brute-force enumeration oracle
  unsigned seed = 20240801;   // for the randomised algebra checks (fixed -> deterministic)
};

// ROOTLET_LAB_MAX_RANK, defaulting to 6.
int default_brute_cap();

bool glob_match(const std::string& pattern, const std::string& text);

// Names in registry order for the given type (the four-column table applies
// to E8 only).
std::vector<std::string> check_names(CartanType type);

// Builds the atlas for the type and runs every registered check whose name
// matches the filter.  Exceptions inside a check are caught and turn into a
// failed result carrying the message.
TypeReport run_checks(CartanType type, const VerifyOptions& opt);

const char* status_word(CheckStatus s);

}  // namespace rootlet
