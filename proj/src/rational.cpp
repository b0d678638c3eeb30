#include "qcva/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace qcva {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(to_mpz(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("integer " + str() + " out of range");
  return v_.get_num().get_si();
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long top, long k) {
  if (k < 0) return Rational(0);
  mpz_class num = 1, den = 1;
  for (long s = 0; s < k; ++s) {
    num *= (top - s);
    den *= (s + 1);
  }
  return Rational(mpq_class(num, den));
}

}  // namespace qcva
