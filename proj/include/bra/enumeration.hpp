#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bra/circuits.hpp"
#include "bra/core.hpp"
#include "bra/errors.hpp"
#include "bra/geometry.hpp"

namespace bra {

// Rules are numbered big-endian in base k over the canonical profile order,
// so numeric order coincides with lexicographic order of the output vectors.
inline std::uint64_t rule_index(const UpdateRule& f) {
  std::uint64_t idx = 0;
  for (Strategy s : f.outputs()) idx = idx * f.k() + (s - 1);
  return idx;
}

inline UpdateRule rule_from_index(int k, int d, std::uint64_t idx) {
  std::size_t n = profile_count(k, d);
  std::vector<Strategy> out(n);
  for (std::size_t t = n; t-- > 0;) {
    out[t] = static_cast<Strategy>(idx % k) + 1;
    idx /= k;
  }
  if (idx != 0) throw std::out_of_range("rule index out of range");
  return UpdateRule(k, d, std::move(out));
}

// Is F the update rule of some best response game? For d=2 this uses the
// alternating-cycle test (no unacceptable pair of preimages); otherwise the
// hull test. The two agree where both apply.
inline bool classify_rule(const UpdateRule& f) {
  RulePartition p = partition_of(f);
  if (f.d() != 2) return is_realizable(p);
  for (int i = 0; i < p.k; ++i) {
    if (p.cells[i].empty()) continue;
    for (int j = i + 1; j < p.k; ++j) {
      if (p.cells[j].empty()) continue;
      if (is_unacceptable_pair(p.cells[i], p.cells[j], p.k)) return false;
    }
  }
  return true;
}

namespace detail {

// The S_k action precomputed over the profile table: sigma[s] is the 1-based
// relabeling map of permutation s, profile_perm[s][t] the index of the
// relabeled profile t.
struct SymmetryTables {
  std::vector<std::vector<Strategy>> sigma;
  std::vector<std::vector<int>> profile_perm;
};

inline SymmetryTables symmetry_tables(int k, int d) {
  SymmetryTables st;
  auto profs = canonical_profiles(k, d);
  std::vector<Strategy> base(k);
  std::iota(base.begin(), base.end(), 1);
  do {
    std::vector<Strategy> sig(k + 1, 0);
    for (int i = 0; i < k; ++i) sig[i + 1] = base[i];
    std::vector<int> pp(profs.size());
    std::vector<Strategy> tmp;
    for (std::size_t t = 0; t < profs.size(); ++t) {
      tmp = profs[t].entries();
      for (Strategy& s : tmp) s = sig[s];
      std::sort(tmp.begin(), tmp.end());
      pp[t] = profile_index_sorted(k, tmp);
    }
    st.sigma.push_back(std::move(sig));
    st.profile_perm.push_back(std::move(pp));
  } while (std::next_permutation(base.begin(), base.end()));
  return st;
}

// Memoized pair verdicts keyed by the profile-index bitmasks of two cells.
// Each census worker owns one cache; nothing is shared across threads.
class PairVerdictCache {
 public:
  PairVerdictCache(int k, int d) : k_(k), d_(d), profs_(canonical_profiles(k, d)) {}

  bool unacceptable(std::uint32_t ma, std::uint32_t mb) {
    if (ma > mb) std::swap(ma, mb);
    std::uint64_t key = (static_cast<std::uint64_t>(ma) << 32) | mb;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<LocalProfile> x, y;
    for (std::size_t t = 0; t < profs_.size(); ++t) {
      if (ma & (1u << t)) x.push_back(profs_[t]);
      if (mb & (1u << t)) y.push_back(profs_[t]);
    }
    bool verdict = d_ == 2 ? is_unacceptable_pair(x, y, k_)
                           : hulls_intersect(x, y, k_).intersects;
    memo_.emplace(key, verdict);
    return verdict;
  }

  bool realizable(const std::vector<std::uint32_t>& masks) {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!masks[i]) continue;
      for (std::size_t j = i + 1; j < masks.size(); ++j)
        if (masks[j] && unacceptable(masks[i], masks[j])) return false;
    }
    return true;
  }

 private:
  int k_, d_;
  std::vector<LocalProfile> profs_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

inline std::uint64_t checked_rule_space(int k, int d, std::uint64_t max_rules) {
  if (k < 1 || d < 1) throw DimensionError("census requires k >= 1, d >= 1");
  std::uint64_t n = profile_count(k, d);
  if (n > 32) throw RuleSpaceError("profile table too large to enumerate");
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (total > max_rules / k)
      throw RuleSpaceError("rule space k^" + std::to_string(n) + " exceeds the configured bound");
    total *= k;
  }
  return total;
}

}  // namespace detail

// Lexicographically least relabeling of F under the S_k action
// (sigma . F)(D) = sigma(F(inverse(sigma)(D))); idempotent.
inline UpdateRule canonical_form(const UpdateRule& f) {
  auto st = detail::symmetry_tables(f.k(), f.d());
  const auto& out = f.outputs();
  std::vector<Strategy> best, cand(out.size());
  for (std::size_t s = 0; s < st.sigma.size(); ++s) {
    for (std::size_t t = 0; t < out.size(); ++t)
      cand[st.profile_perm[s][t]] = st.sigma[s][out[t]];
    if (best.empty() || cand < best) best = cand;
  }
  return UpdateRule(f.k(), f.d(), std::move(best));
}

struct CensusOptions {
  int jobs = 1;
  bool witnesses = false;
  std::uint64_t max_rules = 1ull << 21;
};

struct CensusClass {
  UpdateRule rule;  // canonical representative
  std::uint64_t orbit_size = 0;
  std::optional<PayoffMatrix> witness;
};

struct RuleCensus {
  int k = 0, d = 0;
  std::uint64_t non_identical = 0;  // realizable rules, non-surjective included
  std::uint64_t classes = 0;        // permutation-equivalence classes
  std::vector<CensusClass> representatives;
};

/*
 * Full census of the (k,d) rule space. The index range is split into
 * contiguous chunks processed independently (the verdict caches are
 * per-worker), so the result is identical for any job count: a rule is a
 * representative iff it is realizable and equal to its own canonical form,
 * which each chunk decides locally.
 */
inline RuleCensus census(int k, int d, const CensusOptions& options = {}) {
  const std::uint64_t total = detail::checked_rule_space(k, d, options.max_rules);
  const std::size_t n = profile_count(k, d);

  struct Partial {
    std::uint64_t realizable = 0;
    std::vector<CensusClass> reps;
  };

  auto run_range = [k, d, n](std::uint64_t lo, std::uint64_t hi, Partial& out) {
    detail::PairVerdictCache cache(k, d);
    auto st = detail::symmetry_tables(k, d);
    std::vector<std::uint64_t> pw(n, 1);  // pw[t] = k^(n-1-t)
    for (std::size_t t = n - 1; t-- > 0;) pw[t] = pw[t + 1] * k;

    std::vector<Strategy> outputs = rule_from_index(k, d, lo).outputs();
    std::vector<std::uint32_t> masks(k);
    std::vector<std::uint64_t> orbit;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::fill(masks.begin(), masks.end(), 0);
      for (std::size_t t = 0; t < n; ++t) masks[outputs[t] - 1] |= 1u << t;
      if (cache.realizable(masks)) {
        ++out.realizable;
        std::uint64_t best = idx;
        orbit.clear();
        for (std::size_t s = 0; s < st.sigma.size(); ++s) {
          std::uint64_t gi = 0;
          for (std::size_t t = 0; t < n; ++t)
            gi += static_cast<std::uint64_t>(st.sigma[s][outputs[t]] - 1) * pw[st.profile_perm[s][t]];
          orbit.push_back(gi);
          best = std::min(best, gi);
        }
        if (best == idx) {
          std::sort(orbit.begin(), orbit.end());
          orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
          out.reps.push_back({UpdateRule(k, d, outputs), orbit.size(), std::nullopt});
        }
      }
      for (std::size_t t = n; t-- > 0;) {  // base-k odometer
        if (outputs[t] < k) {
          ++outputs[t];
          break;
        }
        outputs[t] = 1;
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (static_cast<std::uint64_t>(jobs) > total) jobs = static_cast<int>(total);
  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    run_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
      std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
      threads.emplace_back(run_range, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();
  }

  RuleCensus result;
  result.k = k;
  result.d = d;
  std::uint64_t orbit_total = 0;
  for (auto& p : parts) {
    result.non_identical += p.realizable;
    for (auto& r : p.reps) {
      orbit_total += r.orbit_size;
      result.representatives.push_back(std::move(r));
    }
  }
  result.classes = result.representatives.size();
  if (orbit_total != result.non_identical)
    throw std::logic_error("census orbit sizes do not sum to the realizable count");

  if (options.witnesses)
    for (auto& r : result.representatives) r.witness = synthesize_matrix(r.rule);
  return result;
}

/*
 * Number of genuinely different convex divisions of T_d behind the realizable
 * (k,d) rules: the partition is stripped of its strategy labels (empty cells
 * drop out) and counted up to the S_k symmetry of the simplex.
 */
inline std::uint64_t division_classes(int k, int d, const CensusOptions& options = {}) {
  const std::uint64_t total = detail::checked_rule_space(k, d, options.max_rules);
  const std::size_t n = profile_count(k, d);
  detail::PairVerdictCache cache(k, d);
  auto st = detail::symmetry_tables(k, d);

  std::set<std::vector<std::uint32_t>> divisions;
  std::vector<Strategy> outputs(n, 1);
  std::vector<std::uint32_t> masks(k), cells, image;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::fill(masks.begin(), masks.end(), 0);
    for (std::size_t t = 0; t < n; ++t) masks[outputs[t] - 1] |= 1u << t;
    if (cache.realizable(masks)) {
      cells.clear();
      for (std::uint32_t m : masks)
        if (m) cells.push_back(m);
      std::optional<std::vector<std::uint32_t>> best;
      for (std::size_t s = 0; s < st.sigma.size(); ++s) {
        image.assign(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
          for (std::size_t t = 0; t < n; ++t)
            if (cells[c] & (1u << t)) image[c] |= 1u << st.profile_perm[s][t];
        std::sort(image.begin(), image.end());
        if (!best || image < *best) best = image;
      }
      divisions.insert(*best);
    }
    for (std::size_t t = n; t-- > 0;) {
      if (outputs[t] < k) {
        ++outputs[t];
        break;
      }
      outputs[t] = 1;
    }
  }
  return divisions.size();
}

}  // namespace bra
