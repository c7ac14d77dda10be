#include "rdisc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rdisc {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class digits_to_mpz(std::string_view s) {
  return mpz_class(std::string(s), 10);
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Rat parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  mpz_class n = digits_to_mpz(num);
  mpz_class d = digits_to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view mantissa = s;
  long exponent = 0;
  const auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mantissa = s.substr(0, epos);
    std::string_view exp = s.substr(epos + 1);
    bool exp_neg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_neg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) {
      throw std::invalid_argument("malformed exponent: " + std::string(text));
    }
    exponent = std::stol(std::string(exp));
    if (exp_neg) exponent = -exponent;
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  const auto dot = mantissa.find('.');
  if (dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("malformed number: " + std::string(text));
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("malformed number: " + std::string(text));
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class n = digits_to_mpz(digits.empty() ? "0" : digits);
  if (negative) n = -n;
  const long shift = exponent - static_cast<long>(frac_part.size());
  Rat r;
  if (shift >= 0) {
    r = Rat(n * pow10(static_cast<unsigned long>(shift)), 1);
  } else {
    r = Rat(n, pow10(static_cast<unsigned long>(-shift)));
  }
  r.canonicalize();
  return r;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("empty number");
  if (t.find('/') != std::string_view::npos) return parse_fraction(t);
  return parse_decimal(t);
}

std::string format_rational(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rat& value) { return value.get_d(); }

Rat rat_pow(const Rat& base, unsigned long exponent) {
  if (exponent == 0) return Rat(1);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

}  // namespace rdisc
