#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "dtrip/nf/splitting_field.hpp"
#include "dtrip/recurrence/recurrence.hpp"

namespace dtrip {

enum class SquareStatus { square, not_square, undecided };
enum class Obstruction { norm_not_rational_square, negative_in_real_embedding, no_root_in_splitting_field };

std::string to_string(SquareStatus s);
std::string to_string(Obstruction o);

struct SquarenessVerdict {
  SquareStatus status = SquareStatus::undecided;
  // square: w with w*w equal to the element (in Q(alpha) if
  // witness_in_base_field, otherwise in the splitting field)
  std::optional<NFElem> witness;
  bool witness_in_base_field = false;
  std::optional<Obstruction> obstruction;
  // norm obstruction data: N = Norm(e) and m = [K:Q(alpha)]
  std::optional<Rational> norm;
  std::optional<int> degree_ratio;
  // index of the certified negative real embedding
  std::optional<int> embedding_index;
  // [K:Q] when the splitting field was built
  std::optional<int> splitting_degree;
  std::string reason;
};

// Shared splitting-field state so that several squareness questions about the
// same Q(alpha) build K at most once.
class SquarenessContext {
 public:
  SquarenessContext(FieldPtr base, int degree_cap, std::stop_token stop = {});

  SquarenessVerdict decide(const NFElem& e);

 private:
  // nullptr when the cap was exceeded
  const SplittingField* splitting();

  FieldPtr base_;
  int cap_;
  std::stop_token stop_;
  bool attempted_ = false;
  std::optional<SplittingField> split_;
  std::string cap_message_;
};

SquarenessVerdict squareness_in_splitting_field(const NFElem& e, int degree_cap = kDefaultDegreeCap,
                                                std::stop_token stop = {});

enum class Verdict { finite_by_nonsquare, finite_by_k5_nonunit, finite_by_k6, unknown };
std::string to_string(Verdict v);

struct ApplicabilityReport {
  int k = 0;
  bool alpha_is_unit = false;
  // empty when a degree clause decided and the squareness run was not forced
  std::optional<SquarenessVerdict> nonsquare_f1;
  std::optional<SquarenessVerdict> nonsquare_f1alpha;
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> clause_citations;
  BinetData binet;
};

ApplicabilityReport theorem_applicability(const RecurrenceSpec& spec, int degree_cap = kDefaultDegreeCap,
                                          bool force_squareness = false, std::stop_token stop = {});

}  // namespace dtrip
