#include "gitstab/verdict.hpp"

#include <stdexcept>
#include <string>

namespace gitstab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Stable: return "Stable";
    case Status::SemiStable: return "SemiStable";
    case Status::NotStable: return "NotStable";
    case Status::NotSemiStable: return "NotSemiStable";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::Stable, Status::SemiStable, Status::NotStable, Status::NotSemiStable,
                   Status::Inconclusive}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

int positive_strength(Status s) {
  switch (s) {
    case Status::Stable: return 2;
    case Status::SemiStable: return 1;
    default: return 0;
  }
}

bool is_positive(Status s) { return s == Status::Stable || s == Status::SemiStable; }
bool is_negative(Status s) { return s == Status::NotStable || s == Status::NotSemiStable; }

}  // namespace gitstab
