#include "tenscert/rational.hpp"

#include <cctype>

#include "tenscert/errors.hpp"

namespace tenscert::algebra {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  v_ /= o.v_;
  return *this;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num.push_back(text[i++]);
  if (i == digits_start) throw DomainError("malformed rational '" + std::string(text) + "'");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    const std::size_t den_start = i;
    den.clear();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (i == den_start) throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  if (i != text.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw DomainError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

}  // namespace tenscert::algebra
