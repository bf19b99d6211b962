#include "lukas/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lukas {

ProfileSeries::ProfileSeries(int order, int max_degree)
    : order_(order), max_degree_(max_degree) {
  if (order < 0 || max_degree < 0)
    throw std::invalid_argument("series bounds must be nonnegative");
}

ProfileSeries ProfileSeries::one(int order, int max_degree) {
  ProfileSeries s(order, max_degree);
  s.coeff_[DegreeMultiset()] = QtPolynomial::constant(1);
  return s;
}

const QtPolynomial& ProfileSeries::coefficient(const DegreeMultiset& m) const {
  static const QtPolynomial zero;
  auto it = coeff_.find(m);
  return it == coeff_.end() ? zero : it->second;
}

void ProfileSeries::add_to_coefficient(const DegreeMultiset& m, const QtPolynomial& p) {
  if (p.is_zero()) return;
  if (m.total() > order_) return;
  auto it = coeff_.find(m);
  if (it == coeff_.end()) {
    coeff_.emplace(m, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) coeff_.erase(it);
}

ProfileSeries ProfileSeries::substitute_z(int q_exp, int t_exp) const {
  ProfileSeries out(order_, max_degree_);
  for (const auto& [m, poly] : coeff_) {
    int size = m.total();
    out.coeff_[m] = poly.mono_mul(q_exp * size, t_exp * size);
  }
  return out;
}

ProfileSeries ProfileSeries::truncated(int order) const {
  ProfileSeries out(order, max_degree_);
  for (const auto& [m, poly] : coeff_)
    if (m.total() <= order) out.coeff_[m] = poly;
  return out;
}

nlohmann::ordered_json ProfileSeries::to_json() const {
  std::vector<const std::pair<const DegreeMultiset, QtPolynomial>*> items;
  items.reserve(coeff_.size());
  for (const auto& entry : coeff_) items.push_back(&entry);
  std::stable_sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
    int sa = a->first.total(), sb = b->first.total();
    if (sa != sb) return sa < sb;
    return a->first.to_text() < b->first.to_text();
  });
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto* entry : items) {
    nlohmann::ordered_json item;
    item["multiset"] = entry->first.to_text();
    item["poly"] = entry->second.to_json();
    out.push_back(std::move(item));
  }
  return out;
}

ProfileSeries series_mul(const ProfileSeries& a, const ProfileSeries& b) {
  if (a.order() != b.order() || a.max_degree() != b.max_degree())
    throw std::invalid_argument("series bounds must match");
  ProfileSeries out(a.order(), a.max_degree());
  for (const auto& [ml, pl] : a.coefficients()) {
    for (const auto& [mr, pr] : b.coefficients()) {
      if (ml.total() + mr.total() > out.order()) continue;
      out.add_to_coefficient(ml.merged(mr), pl * pr);
    }
  }
  return out;
}

ProfileSeries solve_profile_series(int order, int max_degree) {
  ProfileSeries f = ProfileSeries::one(order, max_degree);
  for (int pass = 0; pass < order; ++pass) {
    ProfileSeries next = ProfileSeries::one(order, max_degree);
    for (int k = 0; k <= max_degree; ++k) {
      ProfileSeries product = ProfileSeries::one(order, max_degree);
      for (int slot = 1; slot <= k + 1; ++slot)
        product = series_mul(product, f.substitute_z(k + 1 - slot, slot - 1));
      // attach the root: one more internal node of up-degree k
      for (const auto& [m, poly] : product.coefficients()) {
        if (m.total() + 1 > order) continue;
        DegreeMultiset shifted = m;
        shifted.insert(k);
        next.add_to_coefficient(shifted, poly);
      }
    }
    f = std::move(next);
  }
  return f;
}

std::vector<DegreeMultiset> multisets_in_box(int order, int max_degree) {
  std::vector<DegreeMultiset> out;
  DegreeMultiset current;
  auto rec = [&](auto&& self, int min_degree, int remaining) -> void {
    out.push_back(current);
    for (int k = min_degree; k <= max_degree; ++k) {
      if (remaining == 0) break;
      current.insert(k);
      self(self, k, remaining - 1);
      current.erase_one(k);
    }
  };
  rec(rec, 0, order);
  std::sort(out.begin(), out.end(), [](const DegreeMultiset& a, const DegreeMultiset& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.to_text() < b.to_text();
  });
  return out;
}

std::vector<SeriesMismatch> verify_series(int order, int max_degree) {
  ProfileSeries f = solve_profile_series(order, max_degree);
  std::vector<SeriesMismatch> mismatches;
  for (const DegreeMultiset& m : multisets_in_box(order, max_degree)) {
    QtPolynomial expected = area_depth_poly(m);
    const QtPolynomial& got = f.coefficient(m);
    if (!(got == expected)) mismatches.push_back({m, got, expected});
  }
  return mismatches;
}

}  // namespace lukas
