#include "algres/rational.hpp"

#include <cctype>

namespace algres {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("invalid rational literal '" + std::string(text) + "'");
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

bool exact_root(const Rational& value, unsigned k, Rational& root) {
  if (k == 0) return false;
  if (value == 0) {
    root = 0;
    return true;
  }
  bool negative = sgn(value) < 0;
  if (negative && k % 2 == 0) return false;
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
  root = Rational(rn, rd);
  root.canonicalize();
  if (negative) root = -root;
  return true;
}

}  // namespace algres
