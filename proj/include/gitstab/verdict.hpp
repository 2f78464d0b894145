#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gitstab {

enum class Status { Stable, SemiStable, NotStable, NotSemiStable, Inconclusive };

std::string_view to_string(Status s);
Status parse_status(std::string_view text);

/// Positive statuses rank Stable > SemiStable > Inconclusive.
int positive_strength(Status s);
bool is_positive(Status s);
bool is_negative(Status s);

struct Reason {
  std::string criterion;  // e.g. "hessian-rank", "certificate", "literature"
  std::string margin;     // exact rational or algebraic margin, may be empty
  std::string note;
  std::string provenance = "theorem";  // theorem | certificate | literature | heuristic
};

struct StabilityVerdict {
  Status status = Status::Inconclusive;
  std::vector<Reason> reasons;
  std::optional<std::string> literature;
};

}  // namespace gitstab
