#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "harbourne/profile.hpp"
#include "harbourne/rational.hpp"

namespace harbourne {

enum class SearchFilter { LTPolynomial, HirzebruchOneOne };

const char* to_string(SearchFilter f) noexcept;

struct SearchQuery {
  static constexpr std::uint64_t default_limit = 10'000'000;

  CurveClass curve_class = CurveClass::conic();
  int k = 3;
  bool require_tk_zero = false;
  std::vector<SearchFilter> filters;
  std::uint64_t limit = default_limit;
};

/// Throws HypothesisError when k < 3, a filter does not match the curve
/// class, a filter is requested without require_tk_zero, or the quadric
/// filter is asked for k < 4.
void check_query(const SearchQuery& query);

struct EnumerationStats {
  std::uint64_t count = 0;
  bool truncated = false;
};

/// Every t-vector with sum_r C(r,2) t_r = I C(k,2), r in 2..k (2..k-1 with
/// require_tk_zero), once each, lexicographic in (t_top, ..., t_3) with t_2
/// forced. Stops after query.limit profiles; truncated is set when more
/// exist. Feasible means combinatorially feasible, not realizable.
EnumerationStats enumerate(const SearchQuery& query, const std::function<void(const ConfigurationProfile&)>& visit);

/// Whether a profile passes every filter of the query.
bool passes_filters(const SearchQuery& query, const ConfigurationProfile& profile);

struct SearchResult {
  /// Empty when no profile survives the filters.
  std::optional<Rational> min_h;
  /// All minimizers in enumeration order.
  std::vector<ConfigurationProfile> argmin_profiles;
  std::uint64_t enumerated_count = 0;
  /// Profiles that passed every filter.
  std::uint64_t filtered_count = 0;
  bool truncated = false;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Exact minimum of the local H-constant over the enumerated, filtered
/// profiles. Top-level branches run in parallel; the result is identical to
/// minimize_h_serial, including under truncation.
SearchResult minimize_h(const SearchQuery& query);
SearchResult minimize_h_serial(const SearchQuery& query);

}  // namespace harbourne
