#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rankproj/bigint.hpp"
#include "rankproj/patterns.hpp"

namespace rankproj {

/// Outcome of one named check.  Failures are data: `counterexamples` holds a
/// short description of each failing case (capped), never an exception.
struct CheckResult {
  enum class Status { Pass, Fail, Skip, Info };

  std::string name;
  Status status = Status::Pass;
  long cases = 0;
  std::string detail;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notices;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  long failures() const;
  std::string to_text() const;
  /// Pretty-printed JSON document (two-space indent, trailing newline).
  std::string to_json() const;
};

/// One pattern of the test corpus; patterns with unsupported blocks are
/// kept so the skip path is exercised.
struct CorpusPattern {
  std::string name;
  Pattern pattern;
};
std::vector<CorpusPattern> pattern_corpus();

/// One published value: `compute` evaluates it through the library.
struct GoldenValue {
  std::string name;
  int n = 0;
  std::function<BigInt()> compute;
  BigInt expected;
};
std::vector<GoldenValue> golden_values();

/// Engine-versus-oracle comparisons and every closed-form consistency check;
/// corpus checks cover matrices up to max_n x max_n.
Report cross_check(int max_n);
/// Published tables restricted to n <= max_n.
CheckResult golden_check(int max_n);
/// Conjectural patterns (n-independence, d_{n,n-2,corner} = n-1); reported as Info.
std::vector<CheckResult> observed_checks();

}  // namespace rankproj
