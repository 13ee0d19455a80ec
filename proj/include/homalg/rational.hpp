#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "homalg/error.hpp"

namespace homalg {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in int64 are kept inline;
/// anything larger is promoted to an mpq_class and demoted again as soon
/// as a result fits.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {
    if (n == kMin) promote_(mpq_class(mpz_class(std::to_string(n))));
  }
  Rational(long long n, long long d) {
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    set_big_(mpq_class(mpz_class(std::to_string(n)), mpz_class(std::to_string(d))));
  }
  explicit Rational(const mpq_class& q) { set_big_(q); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "p", "p/q" or "-p/q" with arbitrary-size integers.
  static Rational parse(std::string_view s) {
    auto bad = [&] { return Error(ErrorKind::ParseError, "malformed rational \"" + std::string(s) + "\""); };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    auto digits = [](std::string_view t, bool sign_ok) {
      if (sign_ok && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
      if (t.empty()) return false;
      for (char c : t)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!digits(num, true) || !digits(den, false)) throw bad();
    std::string ns(num);
    if (ns[0] == '+') ns.erase(0, 1);
    mpz_class p(ns), q{std::string(den)};
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(s) + "\"");
    return Rational(mpq_class(p, q));
  }

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
  bool is_small() const { return !big_; }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : to_mpz_(n_); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : to_mpz_(d_); }
  mpq_class to_mpq() const { return big_ ? *big_ : mpq_class(to_mpz_(n_), to_mpz_(d_)); }

  /// Canonical "p/q" form; the denominator is always written.
  std::string to_string() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  /// Short form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (big_) return big_->get_str();
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.n_ == 0) return b;
      if (b.n_ == 0) return a;
      long long n, t1, t2, d;
      if (a.d_ == b.d_) {
        if (!__builtin_add_overflow(a.n_, b.n_, &n) && n != kMin) return make_(n, a.d_);
      } else if (!__builtin_mul_overflow(a.n_, b.d_, &t1) && !__builtin_mul_overflow(b.n_, a.d_, &t2) &&
                 !__builtin_add_overflow(t1, t2, &n) && !__builtin_mul_overflow(a.d_, b.d_, &d) && n != kMin) {
        return make_(n, d);
      }
    }
    return Rational(a.to_mpq() + b.to_mpq());
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.n_ == 0 || b.n_ == 0) return Rational();
      if (a.d_ == 1 && b.d_ == 1) {
        long long n;
        if (!__builtin_mul_overflow(a.n_, b.n_, &n) && n != kMin) return make_reduced_(n, 1);
      }
      long long g1 = std::gcd(a.n_, b.d_), g2 = std::gcd(b.n_, a.d_);
      long long n, d;
      if (!__builtin_mul_overflow(a.n_ / g1, b.n_ / g2, &n) && !__builtin_mul_overflow(a.d_ / g2, b.d_ / g1, &d) &&
          n != kMin) {
        return make_reduced_(n, d);
      }
    }
    return Rational(a.to_mpq() * b.to_mpq());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::SingularMatrix, "division by zero");
    return a * b.inverse();
  }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorKind::SingularMatrix, "inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    return n_ < 0 ? make_reduced_(-d_, -n_) : make_reduced_(d_, n_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  /// this += a * b without building the intermediate when everything is small.
  void add_product(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
      long long p, s;
      if (!__builtin_mul_overflow(a.n_, b.n_, &p) && !__builtin_add_overflow(n_, p, &s) && s != kMin) {
        n_ = s;
        return;
      }
    }
    *this += a * b;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // a normalized big value never fits in int64
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static constexpr long long kMin = std::numeric_limits<long long>::min();

  static mpz_class to_mpz_(long long v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), v);
    return z;
  }

  static Rational make_reduced_(long long n, long long d) {
    Rational r;
    r.n_ = n;
    r.d_ = d;
    return r;
  }

  static Rational make_(long long n, long long d) {
    if (n == 0) return Rational();
    long long g = std::gcd(n, d);
    return make_reduced_(n / g, d / g);
  }

  void promote_(const mpq_class& q) { big_ = std::make_unique<mpq_class>(q); }

  void set_big_(mpq_class q) {
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != to_mpz_(kMin)) {
      n_ = q.get_num().get_si();
      d_ = q.get_den().get_si();
      big_.reset();
    } else {
      big_ = std::make_unique<mpq_class>(std::move(q));
    }
  }

  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace homalg
