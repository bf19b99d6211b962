#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "lukas/path.hpp"

namespace lukas {

// Visits every valid path whose up-step degrees read exactly `degrees`, in
// lexicographic step order (D < U_0 < U_1 < ...). A down-step is feasible at
// a position when the height stays nonnegative there, or all up-steps have
// been placed (the remaining descent is forced and valid); every branch of
// the backtracking completes, so nothing is generated and discarded.
template <class Fn>
void for_each_path_with_profile(const Profile& degrees, Fn&& fn) {
  const int ups = static_cast<int>(degrees.size());
  const int downs = std::accumulate(degrees.begin(), degrees.end(), 0) + 1;
  std::vector<Step> buf;
  buf.reserve(static_cast<std::size_t>(ups + downs));
  auto rec = [&](auto&& self, int u, int d, int h) -> void {
    if (u == ups && d == downs) {
      fn(LukasPath(buf));
      return;
    }
    if (d < downs && (h >= 1 || u == ups)) {
      buf.push_back(Step::down());
      self(self, u, d + 1, h - 1);
      buf.pop_back();
    }
    if (u < ups) {
      buf.push_back(Step::up(degrees[u]));
      self(self, u + 1, d, h + degrees[u]);
      buf.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
}

// Visits every profile realized by paths with exactly `steps` steps: degree
// sequences whose entries cost degree+1 each, with total budget steps-1.
template <class Fn>
void for_each_profile_with_step_count(int steps, Fn&& fn) {
  if (steps < 1) return;
  Profile k;
  auto rec = [&](auto&& self, int budget) -> void {
    if (budget == 0) {
      fn(const_cast<const Profile&>(k));
      return;
    }
    for (int part = 1; part <= budget; ++part) {
      k.push_back(part - 1);
      self(self, budget - part);
      k.pop_back();
    }
  };
  rec(rec, steps - 1);
}

template <class Fn>
void for_each_path_with_step_count(int steps, Fn&& fn) {
  for_each_profile_with_step_count(steps, [&](const Profile& k) {
    for_each_path_with_profile(k, fn);
  });
}

std::vector<LukasPath> enumerate_by_profile(const Profile& degrees);

// All permutation-distinct profiles of the multiset m, extended by the
// first/last constraint degrees when present (a constraint adds its degree to
// the multiset), filtered to those starting/ending as required. Sorted.
std::vector<Profile> distinct_profiles(const DegreeMultiset& m,
                                       std::optional<int> first = {},
                                       std::optional<int> last = {});

// Paths over all qualifying profiles, each exactly once, in lexicographic
// step order across the whole result.
std::vector<LukasPath> enumerate_by_multiset(const DegreeMultiset& m,
                                             std::optional<int> first = {},
                                             std::optional<int> last = {});

}  // namespace lukas
