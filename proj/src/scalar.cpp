#include "pec/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace pec {

namespace {

const mpq_class& as_rat(const std::variant<mpq_class, double>& v) {
  return std::get<mpq_class>(v);
}

double as_double(const std::variant<mpq_class, double>& v) {
  if (v.index() == 0) return std::get<mpq_class>(v).get_d();
  return std::get<double>(v);
}

}  // namespace

void Scalar::canonicalize() {
  if (v_.index() == 0) std::get<mpq_class>(v_).canonicalize();
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

double Scalar::value() const { return as_double(v_); }

const mpq_class& Scalar::rat() const {
  if (!is_exact()) throw DomainError("rat(): value is not exact");
  return as_rat(v_);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-as_rat(v_)));
  return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) += as_rat(o.v_);
  } else {
    v_ = value() + o.value();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) -= as_rat(o.v_);
  } else {
    v_ = value() - o.value();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) *= as_rat(o.v_);
  } else {
    v_ = value() * o.value();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  if (is_exact() && o.is_exact()) {
    std::get<mpq_class>(v_) /= as_rat(o.v_);
  } else {
    v_ = value() / o.value();
  }
  return *this;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(as_rat(v_));
  double d = std::get<double>(v_);
  return d > 0.0 ? 1 : d < 0.0 ? -1 : 0;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return as_rat(a.v_) == as_rat(b.v_);
  return a.value() == b.value();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return as_rat(a.v_) < as_rat(b.v_);
  return a.value() < b.value();
}

std::string Scalar::str() const {
  if (is_exact()) return as_rat(v_).get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(v_));
  return buf;
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar sqrt(const Scalar& x) {
  int s = x.sign();
  if (s < 0) throw DomainError("sqrt of negative value");
  if (s == 0) return x.is_exact() ? Scalar(0) : Scalar(0.0);
  if (x.is_exact()) {
    const mpq_class& q = x.rat();
    if (mpz_perfect_square_p(q.get_num_mpz_t()) &&
        mpz_perfect_square_p(q.get_den_mpz_t())) {
      mpq_class r;
      mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
      r.canonicalize();
      return Scalar(std::move(r));
    }
    return Scalar(std::sqrt(x.value()));
  }
  return Scalar(std::sqrt(x.value()));
}

int sign_eps(const Scalar& x, double eps, double scale) {
  if (x.is_exact()) return x.sign();
  double d = x.value();
  double tol = eps * std::max(1.0, std::fabs(scale));
  if (std::fabs(d) <= tol) return 0;
  return d > 0.0 ? 1 : -1;
}

namespace {

// Decimal literal -> exact rational via scaled integers.
mpq_class decimal_to_rational(std::string_view text) {
  std::string digits;
  digits.reserve(text.size());
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((ch == 'e' || ch == 'E') && seen_digit) {
      break;
    } else {
      throw ParseError("bad number: '" + std::string(text) + "'");
    }
  }
  long exp10 = 0;
  if (i < text.size()) {  // exponent part
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) throw ParseError("bad exponent: '" + std::string(text) + "'");
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad exponent: '" + std::string(text) + "'");
      exp10 = exp10 * 10 + (text[i] - '0');
      if (exp10 > 4096) throw ParseError("exponent out of range");
    }
    if (exp_neg) exp10 = -exp10;
  }
  if (!seen_digit) throw ParseError("bad number: '" + std::string(text) + "'");
  mpz_class mant(digits.empty() ? "0" : digits, 10);
  if (negative) mant = -mant;
  long net = exp10 - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  mpq_class q;
  if (net >= 0) {
    q = mpq_class(mant * pow10);
  } else {
    q = mpq_class(mant, pow10);
  }
  q.canonicalize();
  return q;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_exact(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty number");
  auto slash = t.find('/');
  if (slash != std::string_view::npos) {
    Scalar num = parse_exact(t.substr(0, slash));
    Scalar den = parse_exact(t.substr(slash + 1));
    if (den.sign() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return Scalar(decimal_to_rational(t));
}

Scalar parse_float(std::string_view text) {
  std::string t(trim(text));
  if (t.empty()) throw ParseError("empty number");
  char* end = nullptr;
  double d = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    // allow rational syntax in float mode too
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      Scalar num = parse_float(std::string_view(t).substr(0, slash));
      Scalar den = parse_float(std::string_view(t).substr(slash + 1));
      if (den.sign() == 0) throw ParseError("zero denominator in '" + t + "'");
      return num / den;
    }
    throw ParseError("bad number: '" + t + "'");
  }
  if (!std::isfinite(d)) throw ParseError("non-finite number: '" + t + "'");
  return Scalar(d);
}

}  // namespace pec
