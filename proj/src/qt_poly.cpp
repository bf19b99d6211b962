#include "lukas/qt_poly.hpp"

#include <stdexcept>

namespace lukas {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("qt coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("qt coefficient overflow");
  return r;
}

}  // namespace

QtPolynomial QtPolynomial::constant(std::int64_t c) { return monomial(0, 0, c); }

QtPolynomial QtPolynomial::monomial(int q_exp, int t_exp, std::int64_t c) {
  QtPolynomial p;
  p.add_term(q_exp, t_exp, c);
  return p;
}

void QtPolynomial::add_term(int q_exp, int t_exp, std::int64_t c) {
  if (q_exp < 0 || t_exp < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (c == 0) return;
  auto key = std::make_pair(q_exp, t_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t QtPolynomial::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? 0 : it->second;
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& other) {
  for (const auto& [exps, c] : other.terms_) add_term(exps.first, exps.second, c);
  return *this;
}

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
  QtPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, checked_mul(ca, cb));
  return out;
}

QtPolynomial QtPolynomial::mono_mul(int q_exp, int t_exp) const {
  QtPolynomial out;
  for (const auto& [exps, c] : terms_)
    out.add_term(exps.first + q_exp, exps.second + t_exp, c);
  return out;
}

QtPolynomial QtPolynomial::swap_qt() const {
  QtPolynomial out;
  for (const auto& [exps, c] : terms_) out.add_term(exps.second, exps.first, c);
  return out;
}

bool QtPolynomial::is_symmetric() const { return *this == swap_qt(); }

std::int64_t QtPolynomial::value_at_one() const {
  std::int64_t total = 0;
  for (const auto& [exps, c] : terms_) total = checked_add(total, c);
  return total;
}

nlohmann::ordered_json QtPolynomial::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [exps, c] : terms_) {
    nlohmann::ordered_json term;
    term["q"] = exps.first;
    term["t"] = exps.second;
    term["c"] = std::to_string(c);
    out.push_back(std::move(term));
  }
  return out;
}

std::string QtPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms_) {
    if (!out.empty()) out += " + ";
    const auto [qe, te] = exps;
    std::string factors;
    if (qe > 0) factors += qe == 1 ? "q" : "q^" + std::to_string(qe);
    if (te > 0) {
      if (!factors.empty()) factors += '*';
      factors += te == 1 ? "t" : "t^" + std::to_string(te);
    }
    if (factors.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += std::to_string(c) + '*' + factors;
    }
  }
  return out;
}

bool operator==(const QtPolynomial& a, const QtPolynomial& b) {
  return a.terms_ == b.terms_;
}

QtPolynomial area_depth_poly_by_profile(const Profile& degrees) {
  QtPolynomial out;
  for_each_path_with_profile(degrees, [&](const LukasPath& p) {
    out.add_term(static_cast<int>(area(p)), static_cast<int>(depth(p)), 1);
  });
  return out;
}

QtPolynomial area_depth_poly(const DegreeMultiset& m,
                             std::optional<int> first,
                             std::optional<int> last,
                             Exec exec) {
  const std::vector<Profile> profiles = distinct_profiles(m, first, last);
  QtPolynomial out;
  if (exec == Exec::serial) {
    for (const Profile& k : profiles) out += area_depth_poly_by_profile(k);
    return out;
  }
#pragma omp parallel
  {
    QtPolynomial local;
#pragma omp for schedule(dynamic) nowait
    for (long long i = 0; i < static_cast<long long>(profiles.size()); ++i)
      local += area_depth_poly_by_profile(profiles[static_cast<std::size_t>(i)]);
#pragma omp critical
    out += local;
  }
  return out;
}

}  // namespace lukas
