#include "lukas/enumerate.hpp"

#include <algorithm>

namespace lukas {

std::vector<LukasPath> enumerate_by_profile(const Profile& degrees) {
  std::vector<LukasPath> out;
  for_each_path_with_profile(degrees, [&](const LukasPath& p) { out.push_back(p); });
  return out;
}

std::vector<Profile> distinct_profiles(const DegreeMultiset& m,
                                       std::optional<int> first,
                                       std::optional<int> last) {
  DegreeMultiset full = m;
  if (first) full.insert(*first);
  if (last) full.insert(*last);

  Profile sorted;
  for (auto [degree, mult] : full.entries())
    sorted.insert(sorted.end(), mult, degree);

  std::vector<Profile> out;
  if (sorted.empty()) {
    out.push_back({});  // only the path "D"; constraints always make `full` nonempty
    return out;
  }
  do {
    if (first && sorted.front() != *first) continue;
    if (last && sorted.back() != *last) continue;
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

std::vector<LukasPath> enumerate_by_multiset(const DegreeMultiset& m,
                                             std::optional<int> first,
                                             std::optional<int> last) {
  std::vector<LukasPath> out;
  for (const Profile& k : distinct_profiles(m, first, last))
    for_each_path_with_profile(k, [&](const LukasPath& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lukas
