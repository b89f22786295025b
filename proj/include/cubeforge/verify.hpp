#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubeforge/io.hpp"

namespace cubeforge {

struct StatementResult {
  std::string id;
  int instances = 0;
  int passed = 0;
  std::vector<Json> failures;  // reproducers

  bool ok() const { return failures.empty() && passed == instances; }
};

struct VerifyReport {
  std::vector<StatementResult> statements;

  bool ok() const;
  Json to_json() const;
  /// One line per statement, then one line per failure reproducer.
  std::string to_text() const;
};

/// Size overrides; each suite has its own default.
struct VerifyOptions {
  std::optional<int> k;  // census classes
  std::optional<int> n;  // family size
};

/// Suite names accepted by run_verify, "all" excluded.
const std::vector<std::string>& verify_suites();

/// Runs one suite or "all". Throws InputError for an unknown suite or a bad
/// size option.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

}  // namespace cubeforge
