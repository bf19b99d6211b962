#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "lukas/enumerate.hpp"
#include "lukas/exec.hpp"
#include "lukas/path.hpp"

namespace lukas {

// Exact sparse bivariate polynomial in q and t with integer coefficients.
// Term order is canonical: q-exponent descending, then t-exponent ascending;
// zero coefficients are never stored. Coefficient arithmetic is checked and
// throws std::overflow_error rather than wrapping.
class QtPolynomial {
 public:
  struct TermOrder {
    bool operator()(std::pair<int, int> a, std::pair<int, int> b) const {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    }
  };
  using TermMap = std::map<std::pair<int, int>, std::int64_t, TermOrder>;

  QtPolynomial() = default;  // zero
  static QtPolynomial constant(std::int64_t c);
  static QtPolynomial monomial(int q_exp, int t_exp, std::int64_t c = 1);

  void add_term(int q_exp, int t_exp, std::int64_t c);
  std::int64_t coefficient(int q_exp, int t_exp) const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  QtPolynomial& operator+=(const QtPolynomial& other);
  friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
  friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);

  QtPolynomial mono_mul(int q_exp, int t_exp) const;
  QtPolynomial swap_qt() const;
  bool is_symmetric() const;
  std::int64_t value_at_one() const;  // evaluation at q = t = 1

  // Array of {"q": int, "t": int, "c": decimal string} in canonical order.
  nlohmann::ordered_json to_json() const;
  // Terms joined by " + ": "c*q^a*t^b", dropping c when 1, "^1", and absent
  // variables; a constant term is the bare integer. The zero polynomial is "0".
  std::string to_text() const;

  friend bool operator==(const QtPolynomial&, const QtPolynomial&);

 private:
  TermMap terms_;
};

// Sum of q^area * t^depth over all paths with the given profile.
QtPolynomial area_depth_poly_by_profile(const Profile& degrees);

// Sum of q^area * t^depth over enumerate_by_multiset(m, first, last). The
// parallel variant splits the work across permutation-distinct profiles.
QtPolynomial area_depth_poly(const DegreeMultiset& m,
                             std::optional<int> first = {},
                             std::optional<int> last = {},
                             Exec exec = Exec::parallel);

}  // namespace lukas
