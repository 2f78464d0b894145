#include "gitstab/search.hpp"

#include <random>
#include <stdexcept>

#include "gitstab/errors.hpp"
#include "gitstab/json_io.hpp"
#include "gitstab/torus.hpp"

namespace gitstab {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::SingularPointToQ: return "singular-point-to-Q";
    case Strategy::Permutations: return "permutations";
    case Strategy::RandomUnipotent: return "random-unipotent";
  }
  return "permutations";
}

Strategy parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::SingularPointToQ, Strategy::Permutations, Strategy::RandomUnipotent}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown search strategy '" + std::string(text) + "'");
}

void SearchConfig::validate() const {
  if (budget < 1) throw std::invalid_argument("search budget must be at least 1");
  if (bound < 1) throw std::invalid_argument("matrix entry bound must be at least 1");
  if (strategies.empty()) throw std::invalid_argument("no search strategy selected");
}

namespace {

struct Frame {
  Strategy strategy;
  std::string description;
  RationalMatrix sigma;
};

bool uses(const SearchConfig& cfg, Strategy s) {
  for (auto t : cfg.strategies) {
    if (t == s) return true;
  }
  return false;
}

// Upper unipotent matrices keep [0:...:0:1] fixed: their last row is e_n.
RationalMatrix random_upper_unipotent(int size, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  RationalMatrix u = identity_matrix(size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) u(i, j) = entry(rng);
  }
  return u;
}

std::vector<Frame> make_frames(int n, const std::vector<ProjectivePoint>& points, const SearchConfig& cfg) {
  std::vector<Frame> frames;
  const int size = n + 1;
  auto full = [&]() { return static_cast<int>(frames.size()) >= cfg.budget; };

  std::vector<RationalMatrix> point_frames;
  for (const auto& p : points) point_frames.push_back(point_to_last_frame(p.coords()));

  for (Strategy s : cfg.strategies) {
    if (s == Strategy::SingularPointToQ) {
      for (std::size_t i = 0; i < points.size() && !full(); ++i) {
        frames.push_back({s, "move " + to_string(points[i]) + " to [0:...:0:1]", point_frames[i]});
      }
    } else if (s == Strategy::Permutations) {
      if (!full()) frames.push_back({s, "identity", identity_matrix(size)});
      for (int k = 0; k < n && !full(); ++k) {
        std::vector<int> perm(size);
        for (int j = 0; j < size; ++j) perm[j] = j;
        std::swap(perm[k], perm[n]);
        frames.push_back({s, "swap x" + std::to_string(k) + " <-> x" + std::to_string(n),
                          permutation_matrix(perm)});
      }
    }
  }
  if (uses(cfg, Strategy::RandomUnipotent)) {
    std::mt19937_64 rng(cfg.seed);
    int counter = 0;
    while (!full()) {
      // Alternate between frames that keep a singular point at [0:...:0:1]
      // and frames that mix all coordinates.
      const bool keep_point = !point_frames.empty() && counter % 2 == 0;
      RationalMatrix base = keep_point ? point_frames[(counter / 2) % point_frames.size()]
                                       : identity_matrix(size);
      RationalMatrix u = random_upper_unipotent(size, cfg.bound, rng);
      RationalMatrix sigma;
      std::string description;
      if (keep_point) {
        sigma = u * base;
        description = "unipotent #" + std::to_string(counter) + " fixing " +
                      to_string(points[(counter / 2) % points.size()]);
      } else {
        RationalMatrix lower = random_upper_unipotent(size, cfg.bound, rng).transpose();
        sigma = u * lower;
        description = "unipotent pair #" + std::to_string(counter);
      }
      frames.push_back({Strategy::RandomUnipotent, std::move(description), std::move(sigma)});
      ++counter;
    }
  }
  return frames;
}

Certificate checked(const HomogeneousPoly& f, Certificate c) {
  Certificate sorted = sort_certificate(c);
  sorted.r = sorted.r.normalized();
  const auto verdict = verify_certificate(f, sorted);
  const Status expected = sorted.strict ? Status::NotSemiStable : Status::NotStable;
  if (verdict.status != expected) {
    throw ConsistencyError("search produced a certificate that fails independent verification");
  }
  return sorted;
}

}  // namespace

SearchResult search_destabilizing(const HomogeneousPoly& f,
                                  const std::vector<ProjectivePoint>& singular_points,
                                  const SearchConfig& cfg) {
  cfg.validate();
  SearchResult out;
  const auto frames = make_frames(f.n(), singular_points, cfg);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame& frame = frames[i];
    FrameRecord rec;
    rec.index = static_cast<int>(i);
    rec.strategy = frame.strategy;
    rec.description = frame.description;
    rec.sigma = frame.sigma;
    const HomogeneousPoly g = apply_linear_change(f, frame.sigma);

    std::optional<Certificate> found;
    const TorusDecision strict = torus_destabilize(g, true);
    rec.strict_feasible = strict.feasible;
    if (strict.feasible) {
      found = checked(f, Certificate{frame.sigma, *strict.witness, true});
      out.strict_certificate = found;
    } else if (!out.nonstrict_certificate) {
      const TorusDecision loose = torus_destabilize(g, false);
      rec.nonstrict_feasible = loose.feasible;
      if (loose.feasible) {
        found = checked(f, Certificate{frame.sigma, *loose.witness, false});
        out.nonstrict_certificate = found;
      }
    }
    if (found && cfg.assume_s) {
      const int s = *cfg.assume_s;
      if (s >= 0 && s <= f.n() - 2) {
        rec.filter_consistent = weight_inequality_filter(found->r, s, f.degree(), found->strict);
        if (!*rec.filter_consistent) {
          out.notes.push_back("frame " + std::to_string(i) +
                              ": certificate weights violate the necessary inequalities for a "
                              "singular locus of dimension <= " + std::to_string(s) +
                              "; the assumed s is too small");
        }
      }
    }
    out.frames.push_back(std::move(rec));
    if (out.strict_certificate) break;
  }
  if (!out.best()) out.notes.push_back("no certificate found within budget");
  return out;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& f : r.frames) {
    nlohmann::json j{{"index", f.index},
                     {"strategy", std::string(to_string(f.strategy))},
                     {"description", f.description},
                     {"sigma", matrix_to_json(f.sigma)},
                     {"strict_feasible", f.strict_feasible}};
    j["nonstrict_feasible"] = f.nonstrict_feasible ? nlohmann::json(*f.nonstrict_feasible) : nlohmann::json(nullptr);
    if (f.filter_consistent) j["filter_consistent"] = *f.filter_consistent;
    frames.push_back(std::move(j));
  }
  nlohmann::json out{{"frames", std::move(frames)}, {"notes", r.notes}};
  out["strict_certificate"] = r.strict_certificate ? to_json(*r.strict_certificate) : nlohmann::json(nullptr);
  out["nonstrict_certificate"] =
      r.nonstrict_certificate ? to_json(*r.nonstrict_certificate) : nlohmann::json(nullptr);
  return out;
}

}  // namespace gitstab
