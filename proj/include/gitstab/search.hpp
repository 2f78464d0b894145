#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gitstab/polynomial.hpp"
#include "gitstab/singularity.hpp"
#include "gitstab/weights.hpp"

namespace gitstab {

enum class Strategy { SingularPointToQ, Permutations, RandomUnipotent };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

struct SearchConfig {
  int budget = 20;          // coordinate frames to try
  std::uint64_t seed = 1;
  int bound = 2;            // max |entry| of random matrices
  std::vector<Strategy> strategies{Strategy::SingularPointToQ, Strategy::Permutations,
                                   Strategy::RandomUnipotent};
  /// Assumed singular-locus dimension; enables the weight inequality check
  /// on every witness found.
  std::optional<int> assume_s;

  void validate() const;
};

struct FrameRecord {
  int index = 0;
  Strategy strategy = Strategy::Permutations;
  std::string description;
  RationalMatrix sigma;
  bool strict_feasible = false;
  std::optional<bool> nonstrict_feasible;  // only probed until a non-strict witness is known
  std::optional<bool> filter_consistent;   // with assume_s
};

struct SearchResult {
  std::optional<Certificate> strict_certificate;
  std::optional<Certificate> nonstrict_certificate;
  std::vector<FrameRecord> frames;
  std::vector<std::string> notes;

  /// Strict certificate if any, otherwise the non-strict one.
  const std::optional<Certificate>& best() const {
    return strict_certificate ? strict_certificate : nonstrict_certificate;
  }
};

/// Tries coordinate frames (singular points moved to [0:...:0:1], coordinate
/// permutations, random integer unipotent changes) and solves the torus LP in
/// each. Stops at the first strict certificate. Every certificate returned
/// has sorted weights and has been re-verified from scratch. Deterministic
/// for a fixed seed.
SearchResult search_destabilizing(const HomogeneousPoly& f,
                                  const std::vector<ProjectivePoint>& singular_points,
                                  const SearchConfig& cfg);

nlohmann::json to_json(const SearchResult& r);

}  // namespace gitstab
