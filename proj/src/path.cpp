#include "lukas/path.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lukas {

Step Step::up(int degree) {
  if (degree < 0) throw InvalidPath("up-step degree must be nonnegative");
  return Step(degree);
}

int Step::degree() const {
  if (!is_up()) throw InvalidPath("down-step carries no degree");
  return rise_;
}

LukasPath::LukasPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw InvalidPath("path must contain at least one step");
  if (!steps_.back().is_down()) throw InvalidPath("last step must be a down-step");
  long long height = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    height += steps_[i].rise();
    if (height < 0) throw InvalidPath("height drops below zero before the last step");
  }
  height += steps_.back().rise();
  if (height != -1) throw InvalidPath("total height change must be -1");
}

namespace {

Step step_from_value(long long v) {
  if (v == -1) return Step::down();
  if (v >= 0 && v <= 1'000'000'000) return Step::up(static_cast<int>(v));
  throw TokenError("step value out of range: " + std::to_string(v));
}

std::vector<Step> steps_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TokenError(std::string("bad JSON path: ") + e.what());
  }
  if (!doc.is_array()) throw TokenError("JSON path must be an array of integers");
  std::vector<Step> steps;
  steps.reserve(doc.size());
  for (const auto& item : doc) {
    if (!item.is_number_integer()) throw TokenError("JSON path entries must be integers");
    steps.push_back(step_from_value(item.get<long long>()));
  }
  return steps;
}

std::vector<Step> steps_from_tokens(const std::string& text) {
  std::vector<Step> steps;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "D") {
      steps.push_back(Step::down());
      continue;
    }
    if (tok.size() >= 2 && tok[0] == 'U') {
      int k = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
      if (ec == std::errc() && ptr == tok.data() + tok.size() && k >= 0) {
        steps.push_back(Step::up(k));
        continue;
      }
    }
    throw TokenError("unrecognized token '" + tok + "'");
  }
  return steps;
}

}  // namespace

LukasPath LukasPath::parse(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[')
    return LukasPath(steps_from_json(text));
  return LukasPath(steps_from_tokens(text));
}

std::string LukasPath::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ' ';
    if (steps_[i].is_down())
      out += 'D';
    else
      out += 'U' + std::to_string(steps_[i].degree());
  }
  return out;
}

DegreeMultiset DegreeMultiset::parse(const std::string& text) {
  DegreeMultiset m;
  if (text.empty()) return m;
  std::size_t pos = 0;
  int prev_degree = -1;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw TokenError("multiset entry '" + item + "' is not 'k:mult'");
    int degree = 0, mult = 0;
    auto r1 = std::from_chars(item.data(), item.data() + colon, degree);
    auto r2 = std::from_chars(item.data() + colon + 1, item.data() + item.size(), mult);
    if (r1.ec != std::errc() || r1.ptr != item.data() + colon ||
        r2.ec != std::errc() || r2.ptr != item.data() + item.size())
      throw TokenError("multiset entry '" + item + "' is not 'k:mult'");
    if (degree < 0) throw TokenError("multiset degree must be nonnegative");
    if (mult < 1) throw TokenError("multiset multiplicity must be positive");
    if (degree <= prev_degree) throw TokenError("multiset entries must have strictly increasing degrees");
    prev_degree = degree;
    m.entries_.emplace_back(degree, mult);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return m;
}

DegreeMultiset DegreeMultiset::from_profile(const Profile& profile) {
  DegreeMultiset m;
  for (int k : profile) m.insert(k);
  return m;
}

void DegreeMultiset::insert(int degree, int count) {
  if (count <= 0) throw std::invalid_argument("insert count must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             std::pair<int, int>(degree, 0));
  if (it != entries_.end() && it->first == degree)
    it->second += count;
  else
    entries_.insert(it, {degree, count});
}

void DegreeMultiset::erase_one(int degree) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             std::pair<int, int>(degree, 0));
  if (it == entries_.end() || it->first != degree)
    throw std::out_of_range("degree " + std::to_string(degree) + " not in multiset");
  if (--it->second == 0) entries_.erase(it);
}

int DegreeMultiset::multiplicity(int degree) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             std::pair<int, int>(degree, 0));
  return (it != entries_.end() && it->first == degree) ? it->second : 0;
}

int DegreeMultiset::total() const {
  int n = 0;
  for (auto [k, mult] : entries_) n += mult;
  return n;
}

int DegreeMultiset::degree_sum() const {
  int s = 0;
  for (auto [k, mult] : entries_) s += k * mult;
  return s;
}

DegreeMultiset DegreeMultiset::merged(const DegreeMultiset& other) const {
  DegreeMultiset out = *this;
  for (auto [k, mult] : other.entries_) out.insert(k, mult);
  return out;
}

std::string DegreeMultiset::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i].first) + ':' + std::to_string(entries_[i].second);
  }
  return out;
}

Profile profile(const LukasPath& path) {
  Profile k;
  for (Step s : path.steps())
    if (s.is_up()) k.push_back(s.degree());
  return k;
}

DegreeMultiset profile_multiset(const LukasPath& path) {
  return DegreeMultiset::from_profile(profile(path));
}

StatVector area_vector(const LukasPath& path) {
  StatVector v;
  int height = 0;
  for (Step s : path.steps()) {
    if (s.is_up()) v.push_back(height);
    height += s.rise();
  }
  return v;
}

long long area(const LukasPath& path) {
  StatVector v = area_vector(path);
  return std::accumulate(v.begin(), v.end(), 0LL);
}

Matching match_downs(const LukasPath& path) {
  Matching out;
  // stack of (1-based up position, remaining capacity); top = nearest candidate
  std::vector<std::pair<int, int>> open;
  std::vector<int> assigned(path.size() + 1, 0);
  const auto& steps = path.steps();
  for (int i = 1; i <= path.size(); ++i) {
    Step s = steps[i - 1];
    if (s.is_up()) {
      if (s.degree() > 0) open.emplace_back(i, s.degree());
      continue;
    }
    if (i == path.size()) break;  // final down-step stays unmatched
    auto& [up, capacity] = open.back();
    out[i] = MatchTarget{up, ++assigned[up]};
    if (--capacity == 0) open.pop_back();
  }
  return out;
}

Matching match_downs_by_ray(const LukasPath& path) {
  const auto& steps = path.steps();
  std::vector<int> start_height(path.size() + 1, 0);
  for (int i = 1; i <= path.size(); ++i)
    start_height[i] = start_height[i - 1] + steps[i - 1].rise();
  // start_height[i-1] = height where step i begins

  Matching out;
  std::vector<int> assigned(path.size() + 1, 0);
  for (int j = 1; j < path.size(); ++j) {
    if (!steps[j - 1].is_down()) continue;
    // midpoint of the down-step sits at mid + 1/2
    int mid = start_height[j];
    for (int i = j - 1; i >= 1; --i) {
      if (!steps[i - 1].is_up() || steps[i - 1].degree() == 0) continue;
      int lo = start_height[i - 1];
      int hi = start_height[i];
      if (lo <= mid && mid < hi) {
        out[j] = MatchTarget{i, 0};
        break;
      }
    }
  }
  // ranks follow position order among each up-step's matched down-steps
  for (auto& [j, target] : out) target.rank = ++assigned[target.up];
  return out;
}

StatVector depth_vector(const LukasPath& path) {
  const auto& steps = path.steps();
  Matching matching = match_downs(path);
  StatVector ups;
  std::vector<long long> value(path.size() + 1, 0);
  for (int i = 1; i <= path.size(); ++i) {
    Step s = steps[i - 1];
    if (s.is_up()) {
      value[i] = (i == 1) ? 0 : value[i - 1];
      ups.push_back(static_cast<int>(value[i]));
    } else if (i < path.size()) {
      const MatchTarget& t = matching.at(i);
      value[i] = value[t.up] + t.rank;
    }
  }
  return ups;
}

long long depth(const LukasPath& path) {
  StatVector v = depth_vector(path);
  return std::accumulate(v.begin(), v.end(), 0LL);
}

Profile parse_profile(const std::string& text) {
  Profile out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int k = 0;
    auto r = std::from_chars(item.data(), item.data() + item.size(), k);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size() || k < 0)
      throw TokenError("profile entry '" + item + "' is not a nonnegative integer");
    out.push_back(k);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string profile_to_text(const Profile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(profile[i]);
  }
  return out;
}

}  // namespace lukas
