#pragma once

#include <map>
#include <vector>

#include "json.hpp"
#include "lukas/path.hpp"
#include "lukas/qt_poly.hpp"

namespace lukas {

// Truncated power series over degree multisets: one q,t-polynomial per
// multiset M with |M| <= order and entries <= max_degree. The z-degree of a
// term is |M| (counted with multiplicity), so truncation is by |M|.
class ProfileSeries {
 public:
  ProfileSeries(int order, int max_degree);
  static ProfileSeries one(int order, int max_degree);

  int order() const { return order_; }
  int max_degree() const { return max_degree_; }

  // Zero polynomial when absent; zero polynomials are never stored.
  const QtPolynomial& coefficient(const DegreeMultiset& m) const;
  void add_to_coefficient(const DegreeMultiset& m, const QtPolynomial& p);
  const std::map<DegreeMultiset, QtPolynomial>& coefficients() const { return coeff_; }

  // Realizes z -> z * q^q_exp * t^t_exp: the coefficient at M picks up the
  // monomial with exponents scaled by |M|.
  ProfileSeries substitute_z(int q_exp, int t_exp) const;

  ProfileSeries truncated(int order) const;

  // Array of {"multiset": text, "poly": polynomial JSON} sorted by
  // (|M|, lexicographic multiset text).
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const ProfileSeries&, const ProfileSeries&) = default;

 private:
  int order_;
  int max_degree_;
  std::map<DegreeMultiset, QtPolynomial> coeff_;
};

// Cauchy product: the coefficient at M sums coeff_a(L) * coeff_b(R) over all
// splittings M = L (+) R, truncated at |M| <= order. Operands must agree on
// order and max_degree.
ProfileSeries series_mul(const ProfileSeries& a, const ProfileSeries& b);

// Fixed-point solution of the root decomposition: starting from 1, each pass
// adds, for every root up-degree k <= max_degree, a root factor (one z, one
// k-mark) times the product over the k+1 child slots of the series with z
// replaced by z*q^(k+1-l)*t^(l-1). Stationary after `order` passes.
ProfileSeries solve_profile_series(int order, int max_degree);

struct SeriesMismatch {
  DegreeMultiset multiset;
  QtPolynomial from_series;
  QtPolynomial from_paths;
};

// Compares every coefficient of solve_profile_series against the direct path
// enumeration; empty on success.
std::vector<SeriesMismatch> verify_series(int order, int max_degree);

// All multisets with entries <= max_degree and |M| <= order, sorted by
// (|M|, lexicographic multiset text). The coefficient index set of a solved
// series.
std::vector<DegreeMultiset> multisets_in_box(int order, int max_degree);

}  // namespace lukas
