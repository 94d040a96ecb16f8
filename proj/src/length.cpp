#include "dpm/length.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dpm {

const char* to_string(LengthMode mode) {
  return mode == LengthMode::exact ? "exact" : "approx";
}

Length Length::exact(mpq_class value) {
  value.canonicalize();
  if (sgn(value) < 0) throw std::invalid_argument("negative length " + value.get_str());
  Length l;
  l.exact_ = true;
  l.q_ = std::move(value);
  return l;
}

Length Length::exact(long numerator, unsigned long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  return exact(mpq_class(numerator, denominator));
}

Length Length::approximate(double value) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw std::invalid_argument("invalid approximate length");
  Length l;
  l.exact_ = false;
  l.d_ = value;
  return l;
}

Length Length::zero(LengthMode mode) {
  return mode == LengthMode::exact ? exact(0) : approximate(0.0);
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpq_class parse_exact(std::string_view text) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    std::string digits = std::string(ip) + std::string(fp);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    mpq_class q(mpz_class(digits.empty() ? std::string("0") : digits, 10), den);
    q.canonicalize();
    return q;
  }
  if (!all_digits(s)) throw std::invalid_argument("bad length '" + std::string(text) + "'");
  return mpq_class(mpz_class(std::string(s), 10));
}

}  // namespace

Length Length::parse(std::string_view text, LengthMode mode) {
  if (!text.empty() && text.front() == '-') throw std::invalid_argument("negative length '" + std::string(text) + "'");
  if (mode == LengthMode::exact) return exact(parse_exact(text));
  if (text.find('/') != std::string_view::npos) return approximate(parse_exact(text).get_d());
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad length '" + std::string(text) + "'");
  return approximate(v);
}

const mpq_class& Length::rational() const {
  if (!exact_) throw std::logic_error("rational() on approximate length");
  return q_;
}

double Length::to_double() const { return exact_ ? q_.get_d() : d_; }

Length& Length::operator+=(const Length& other) {
  if (exact_ != other.exact_) throw std::logic_error("mixing exact and approximate lengths");
  if (exact_)
    q_ += other.q_;
  else
    d_ += other.d_;
  return *this;
}

bool operator==(const Length& a, const Length& b) {
  if (a.exact_ != b.exact_) throw std::logic_error("comparing exact and approximate lengths");
  return a.exact_ ? a.q_ == b.q_ : a.d_ == b.d_;
}

std::strong_ordering operator<=>(const Length& a, const Length& b) {
  if (a.exact_ != b.exact_) throw std::logic_error("comparing exact and approximate lengths");
  if (a.exact_) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Lengths are finite and non-negative, so this is a total order.
  return a.d_ < b.d_ ? std::strong_ordering::less : b.d_ < a.d_ ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Length::str() const {
  if (exact_) return q_.get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d_);
  std::string s(buf, ptr);
  // Keep the text recognisable as a real number.
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

bool approximately_equal(const Length& a, const Length& b, double rel_tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  double x = a.to_double(), y = b.to_double();
  double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) <= rel_tol * scale;
}

}  // namespace dpm
