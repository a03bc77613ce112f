#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toriccode/clutter.hpp"
#include "toriccode/eval_code.hpp"
#include "toriccode/toric_set.hpp"

namespace toric {

inline constexpr std::uint64_t kDefaultBruteforceBudget = 10'000'000;

enum class DistanceMethod { kBruteforce, kIsd, kFormula, kBoundOnly };
enum class MethodChoice { kAuto, kBruteforce, kIsd, kFormula };

std::string to_string(DistanceMethod m);
std::string to_string(MethodChoice m);
MethodChoice parse_method(const std::string& name);

struct DistanceResult {
  std::size_t value = 0;
  DistanceMethod method = DistanceMethod::kBoundOnly;
  bool exact = false;
  std::vector<FieldElement> witness;  // a minimum-weight codeword when exact
};

struct SearchOptions {
  std::uint64_t class_budget = kDefaultBruteforceBudget;
  /// Zero means no limit.
  std::chrono::milliseconds time_budget{0};
  unsigned threads = 1;
};

/// Number of nonzero messages up to scalars, (q^k - 1)/(q - 1), saturating.
std::uint64_t projective_message_count(std::uint64_t q, std::size_t k);

/// Exhaustive search over one message per scalar class. Throws
/// BudgetExceeded when the class count exceeds the budget.
DistanceResult min_distance_bruteforce(const LinearCode& code, const SearchOptions& opts = {});

/// Exact minimum weight by information-set enumeration over systematic
/// generators on pairwise-disjoint information sets, stopping once the
/// growing lower bound meets the best weight found. Returns exact = false
/// with the best upper bound if the time budget runs out.
DistanceResult min_distance_isd(const LinearCode& code, const SearchOptions& opts = {});

/// Minimum distance of C_T(d) for the projective torus T in P^{n-1}.
std::uint64_t torus_distance(std::int64_t q, std::int64_t n, std::int64_t d);

struct DistanceReport {
  int d = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  int regularity = 0;
  bool is_torus = false;
  std::optional<DistanceResult> delta;
  std::optional<std::uint64_t> delta_prime;  // torus bound, when it applies
  std::size_t singleton = 0;
  std::vector<std::string> notes;
};

struct ReportOptions {
  MethodChoice method = MethodChoice::kAuto;
  SearchOptions search;
  /// The torus bound needs a uniform clutter of full rank with a normal edge
  /// ideal; normality is taken on the caller's word.
  bool assume_normal = true;
};

/// Assembles delta_d with the Singleton bound, the torus bound and the
/// regularity shortcut. `clutter` may be null for bare point sets.
DistanceReport distance_report(const Clutter* clutter, const ToricSet& x, int d, int reg,
                               const ReportOptions& opts = {});
DistanceReport distance_report(const Clutter& clutter, const FiniteField& f, int d,
                               const ReportOptions& opts = {});

}  // namespace toric
