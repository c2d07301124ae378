#include "harbourne/search.hpp"

#include <algorithm>
#include <exception>

#include "harbourne/constraints.hpp"
#include "harbourne/errors.hpp"
#include "harbourne/harbourne_constant.hpp"

namespace harbourne {

const char* to_string(SearchFilter f) noexcept {
  switch (f) {
    case SearchFilter::LTPolynomial: return "lt";
    case SearchFilter::HirzebruchOneOne: return "hirz11";
  }
  return "?";
}

namespace {

std::int64_t budget(const SearchQuery& q) { return q.curve_class.pairwise_intersection() * choose2(q.k); }

int top_multiplicity(const SearchQuery& q) { return q.require_tk_zero ? q.k - 1 : q.k; }

bool has_filter(const SearchQuery& q, SearchFilter f) {
  return std::find(q.filters.begin(), q.filters.end(), f) != q.filters.end();
}

// Depth-first walk over t_r for r = top..3 with t_2 taking the rest.
class Walker {
 public:
  Walker(const SearchQuery& q, std::uint64_t cap, const std::function<void(const ConfigurationProfile&)>& visit)
      : q_(q), cap_(cap), visit_(visit), counts_(static_cast<std::size_t>(q.k) + 1, 0) {}

  void run(int r, std::int64_t remaining) {
    if (stopped_) return;
    if (r == 2) {
      counts_[2] = remaining;
      emit();
      counts_[2] = 0;
      return;
    }
    const std::int64_t c = choose2(r);
    for (std::int64_t v = 0; v * c <= remaining && !stopped_; ++v) {
      counts_[static_cast<std::size_t>(r)] = v;
      run(r - 1, remaining - v * c);
    }
    counts_[static_cast<std::size_t>(r)] = 0;
  }

  void fix(int r, std::int64_t v) { counts_[static_cast<std::size_t>(r)] = v; }

  EnumerationStats stats() const { return {count_, truncated_}; }

 private:
  void emit() {
    if (count_ == cap_) {
      truncated_ = true;
      stopped_ = true;
      return;
    }
    Multiplicities t;
    for (std::size_t r = 2; r < counts_.size(); ++r) {
      if (counts_[r] != 0) t[static_cast<int>(r)] = counts_[r];
    }
    visit_(ConfigurationProfile(q_.curve_class, q_.k, std::move(t)));
    ++count_;
  }

  const SearchQuery& q_;
  std::uint64_t cap_;
  const std::function<void(const ConfigurationProfile&)>& visit_;
  std::vector<std::int64_t> counts_;
  std::uint64_t count_ = 0;
  bool truncated_ = false;
  bool stopped_ = false;
};

struct Accumulator {
  SearchResult result;

  void add(const SearchQuery& q, const ConfigurationProfile& p) {
    if (!passes_filters(q, p)) return;
    ++result.filtered_count;
    Rational h = local_h(p).h;
    if (!result.min_h || h < *result.min_h) {
      result.min_h = std::move(h);
      result.argmin_profiles.clear();
      result.argmin_profiles.push_back(p);
    } else if (h == *result.min_h) {
      result.argmin_profiles.push_back(p);
    }
  }

  void absorb(const SearchResult& o) {
    result.enumerated_count += o.enumerated_count;
    result.filtered_count += o.filtered_count;
    if (!o.min_h) return;
    if (!result.min_h || *o.min_h < *result.min_h) {
      result.min_h = o.min_h;
      result.argmin_profiles = o.argmin_profiles;
    } else if (*o.min_h == *result.min_h) {
      result.argmin_profiles.insert(result.argmin_profiles.end(), o.argmin_profiles.begin(), o.argmin_profiles.end());
    }
  }
};

// The subtree with t_top = v, capped at `cap` profiles.
SearchResult run_branch(const SearchQuery& q, std::int64_t v, std::uint64_t cap) {
  Accumulator acc;
  std::function<void(const ConfigurationProfile&)> visit = [&](const ConfigurationProfile& p) { acc.add(q, p); };
  const int top = top_multiplicity(q);
  Walker w(q, cap, visit);
  w.fix(top, v);
  w.run(top - 1, budget(q) - v * choose2(top));
  acc.result.enumerated_count = w.stats().count;
  acc.result.truncated = w.stats().truncated;
  return acc.result;
}

}  // namespace

void check_query(const SearchQuery& q) {
  if (q.k < 3) throw HypothesisError("search needs k >= 3");
  if (q.k > ProfileLimits::max_k) throw HypothesisError("k exceeds the supported range");
  if (budget(q) > ProfileLimits::max_count) {
    throw HypothesisError("incidence budget " + std::to_string(budget(q)) + " exceeds the supported count range");
  }
  for (auto f : q.filters) {
    if (!q.require_tk_zero) throw HypothesisError(std::string("filter ") + to_string(f) + " requires t_k = 0");
    if (f == SearchFilter::LTPolynomial && q.curve_class.kind() != CurveKind::ConicP2) {
      throw HypothesisError("the lt filter applies to conic-p2 only");
    }
    if (f == SearchFilter::HirzebruchOneOne) {
      if (q.curve_class.kind() != CurveKind::OneOneQuadric) {
        throw HypothesisError("the hirz11 filter applies to one-one-quadric only");
      }
      if (q.k < 4) throw HypothesisError("the hirz11 filter requires k >= 4");
    }
  }
}

bool passes_filters(const SearchQuery& q, const ConfigurationProfile& p) {
  if (has_filter(q, SearchFilter::LTPolynomial) && !holds_over_integers(lt_polynomial(p)).holds) return false;
  if (has_filter(q, SearchFilter::HirzebruchOneOne) && !hirzebruch_one_one(p).holds) return false;
  return true;
}

EnumerationStats enumerate(const SearchQuery& q, const std::function<void(const ConfigurationProfile&)>& visit) {
  check_query(q);
  Walker w(q, q.limit, visit);
  w.run(top_multiplicity(q), budget(q));
  return w.stats();
}

SearchResult minimize_h_serial(const SearchQuery& q) {
  Accumulator acc;
  const auto stats = enumerate(q, [&](const ConfigurationProfile& p) { acc.add(q, p); });
  acc.result.enumerated_count = stats.count;
  acc.result.truncated = stats.truncated;
  return acc.result;
}

SearchResult minimize_h(const SearchQuery& q) {
  check_query(q);
  const int top = top_multiplicity(q);
  if (top < 3) return minimize_h_serial(q);

  const std::int64_t branches = budget(q) / choose2(top) + 1;
  std::vector<SearchResult> parts(static_cast<std::size_t>(branches));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(branches));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < branches; ++v) {
    try {
      parts[static_cast<std::size_t>(v)] = run_branch(q, v, q.limit);
    } catch (...) {
      errors[static_cast<std::size_t>(v)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Merge in enumeration order. The branch that crosses the limit is redone
  // with the exact remaining allowance so truncation matches the serial walk.
  Accumulator acc;
  for (std::int64_t v = 0; v < branches; ++v) {
    const auto& part = parts[static_cast<std::size_t>(v)];
    const std::uint64_t room = q.limit - acc.result.enumerated_count;
    if (!part.truncated && part.enumerated_count <= room) {
      acc.absorb(part);
      continue;
    }
    acc.absorb(run_branch(q, v, room));
    acc.result.truncated = true;
    break;
  }
  return acc.result;
}

}  // namespace harbourne
