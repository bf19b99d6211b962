#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lukas {

// Unrecognized token in a textual encoding (path, tree, multiset, profile).
struct TokenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A step sequence that violates a path invariant; the message names it.
struct InvalidPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One lattice step: the down-step (1,-1), or the up-step (1,k) of degree k >= 0.
// Ordered as D < U_0 < U_1 < ... via the height change.
class Step {
 public:
  static Step down() { return Step(-1); }
  static Step up(int degree);

  bool is_down() const { return rise_ == -1; }
  bool is_up() const { return rise_ >= 0; }
  int degree() const;  // up-steps only
  int rise() const { return rise_; }

  friend bool operator==(Step, Step) = default;
  friend std::strong_ordering operator<=>(Step, Step) = default;

 private:
  explicit Step(int rise) : rise_(rise) {}
  int rise_;
};

// Degrees of the up-steps, left to right. Empty for the path "D".
using Profile = std::vector<int>;

// One entry per up-step, left to right; first entry is 0 when nonempty.
using StatVector = std::vector<int>;

// Multiset of up-step degrees, kept canonical: (degree, multiplicity) pairs
// sorted by degree, no zero multiplicities.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;

  // Text format: "k:mult" pairs joined by commas, strictly increasing k,
  // mult >= 1. The empty string is the empty multiset.
  static DegreeMultiset parse(const std::string& text);
  static DegreeMultiset from_profile(const Profile& profile);

  void insert(int degree, int count = 1);
  void erase_one(int degree);  // throws std::out_of_range if absent
  int multiplicity(int degree) const;
  bool contains(int degree) const { return multiplicity(degree) > 0; }
  bool empty() const { return entries_.empty(); }
  int total() const;       // element count with multiplicity
  int degree_sum() const;  // sum of elements with multiplicity
  DegreeMultiset merged(const DegreeMultiset& other) const;

  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  std::string to_text() const;

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
  friend auto operator<=>(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  std::vector<std::pair<int, int>> entries_;
};

// A Lukasiewicz path: nonempty step sequence ending in a down-step, with
// partial height sums >= 0 everywhere except after the last step, and total
// height change exactly -1. Validated on construction.
class LukasPath {
 public:
  explicit LukasPath(std::vector<Step> steps);

  // Accepts either whitespace-separated tokens "D" / "U<k>" or a JSON array
  // of integers (-1 for D, k >= 0 for U_k). Throws TokenError / InvalidPath.
  static LukasPath parse(const std::string& text);

  const std::vector<Step>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }
  std::string to_text() const;

  friend bool operator==(const LukasPath&, const LukasPath&) = default;
  friend auto operator<=>(const LukasPath&, const LukasPath&) = default;

 private:
  std::vector<Step> steps_;
};

// Matching of each non-final down-step to the up-step that absorbs it.
// Keys and values are 1-based step positions; rank l means the down-step is
// the l-th one assigned to its up-step, in position order.
struct MatchTarget {
  int up = 0;
  int rank = 0;
  friend bool operator==(MatchTarget, MatchTarget) = default;
};
using Matching = std::map<int, MatchTarget>;

Profile profile(const LukasPath& path);
DegreeMultiset profile_multiset(const LukasPath& path);

// Degree of the first / last up-step; empty for the path "D".
std::optional<int> first_up_degree(const LukasPath& path);
std::optional<int> last_up_degree(const LukasPath& path);

// Entry i: height at which the i-th up-step starts. area = sum of entries.
StatVector area_vector(const LukasPath& path);
long long area(const LukasPath& path);

// Left-to-right scan: each non-final down-step goes to the nearest preceding
// up-step that still has unfilled degree.
Matching match_downs(const LukasPath& path);

// Geometric route: a leftward ray from the down-step's midpoint height hits
// the first positive-degree up-step whose vertical span strictly contains it.
// Independent of match_downs; the two agree on every valid path.
Matching match_downs_by_ray(const LukasPath& path);

// Value propagation over the matching: the first step carries 0, a matched
// down-step carries its up-step's value plus its rank, and an up-step repeats
// the previous step's value. The vector collects up-step values; the final
// down-step's value is never materialized.
StatVector depth_vector(const LukasPath& path);
long long depth(const LukasPath& path);

// Comma-separated nonnegative integers; empty string is the empty profile.
Profile parse_profile(const std::string& text);
std::string profile_to_text(const Profile& profile);

}  // namespace lukas
