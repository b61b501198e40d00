#pragma once

#include <map>
#include <stop_token>
#include <string>
#include <vector>

#include "dtrip/recurrence/recurrence.hpp"
#include "dtrip/search/factorize.hpp"

namespace dtrip {

// Every n <= max_index with 0 <= F_n <= value_bound, keyed by value. Beyond
// max_index the Binet dominance bound certifies F_n > value_bound (or F_n < 0
// when the dominant coefficient is negative).
struct MembershipIndex {
  RecurrenceSpec spec;
  Integer value_bound;
  std::map<Integer, std::vector<long>> entries;
  long max_index = 0;

  const std::vector<long>* find(const Integer& v) const;
  bool contains(const Integer& v) const { return find(v) != nullptr; }
};

MembershipIndex build_index(const RecurrenceSpec& spec, const Integer& value_bound);

struct TripleHit {
  long a = 0;
  long b = 0;
  long c = 0;
  // all indices with F_x = ab+1, F_y = ac+1, F_z = bc+1
  std::vector<long> xs;
  std::vector<long> ys;
  std::vector<long> zs;
  // some choice of witnesses has x < y < z
  bool increasing_witness = false;

  friend bool operator<(const TripleHit& l, const TripleHit& r) {
    if (l.c != r.c) return l.c < r.c;
    if (l.b != r.b) return l.b < r.b;
    return l.a < r.a;
  }
};

struct SearchOptions {
  long factor_budget_ms = kDefaultFactorBudgetMs;
  unsigned workers = 1;
  std::stop_token stop;
};

// Budget exhaustion or cancellation during find_triples. Values F_z - 1 are
// processed in ascending order; everything up to `checkpoint_value` is done.
class SearchInterrupted : public LimitError {
 public:
  SearchInterrupted(const std::string& what, long failed_z, Integer checkpoint_value);
  long failed_z() const { return failed_z_; }
  const Integer& checkpoint_value() const { return checkpoint_; }

 private:
  long failed_z_;
  Integer checkpoint_;
};

std::vector<TripleHit> find_triples(const RecurrenceSpec& spec, long c_max, int a_min = 1,
                                    const SearchOptions& opts = {});

struct GcdRecord {
  long y = 0;
  long z = 0;
  Integer g;
  double ratio = 0;
};

struct GcdScanReport {
  RecurrenceSpec spec;
  long y_lo = 0;
  long z_hi = 0;
  int k = 0;
  std::vector<GcdRecord> records;
  double max_ratio = 0;
  long max_ratio_y = 0;
  long max_ratio_z = 0;
  double fitted_slack = 0;
  // decimal rendering of the 128-bit value of ln(alpha_hat)
  std::string log_alpha;
};

GcdScanReport gcd_scan(const RecurrenceSpec& spec, long y_lo, long z_hi, unsigned workers = 1);

struct Quadruple {
  Integer a, b, c, d;
};

Quadruple euler_quadruple(const Integer& a, const Integer& b);
Integer dplus_extension(const Integer& a, const Integer& b, const Integer& c);

// xy + 1 is a perfect square for every pair
bool is_diophantine(const std::vector<Integer>& set);

}  // namespace dtrip
