#pragma once

#include <string>
#include <vector>

namespace diffract {

/// One acceptance check: a measured quantity against its expected value at a
/// fixed tolerance.
struct VerifyRow {
  std::string id;
  std::string description;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifySuite {
  std::string name;
  std::vector<VerifyRow> rows;
  bool pass() const;
  double seconds() const;
};

std::vector<std::string> verify_suite_names();

/// Runs one named suite ("adefect", "lattice", ... or "all").
std::vector<VerifySuite> run_verify(const std::string& name);

/// Fixed-width pass/fail table, one line per row.
std::string verify_table(const std::vector<VerifySuite>& suites);

}  // namespace diffract
