#include "affdimer/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <limits>
#include <numeric>

#include "affdimer/errors.hpp"

namespace affdimer {

struct Rational::Big {
  mpq_class q;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kI64Max = std::numeric_limits<std::int64_t>::max();
constexpr i128 kI64Min = std::numeric_limits<std::int64_t>::min();

bool fits_i64(i128 v) { return v >= kI64Min && v <= kI64Max; }

u128 uabs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

int ctz128(u128 v) {
  const auto lo = static_cast<std::uint64_t>(v);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t uabs64(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

void mpz_from_i128(mpz_class& out, i128 v) {
  const bool neg = v < 0;
  const u128 mag = uabs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  out = (hi << 64) + lo;
  if (neg) out = -out;
}

mpq_class to_mpq(std::int64_t n, std::int64_t d) {
  mpz_class zn;
  mpz_class zd;
  mpz_from_i128(zn, n);
  mpz_from_i128(zd, d);
  mpq_class q(zn, zd);
  q.canonicalize();
  return q;
}

bool mpz_fits_i64(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
  // Caller guarantees |z| < 2^63.
  mpz_class mag = abs(z);
  const std::uint64_t lo = mpz_getlimbn(mag.get_mpz_t(), 0);
  const auto v = static_cast<std::int64_t>(mpz_size(mag.get_mpz_t()) == 0 ? 0 : lo);
  return sgn(z) < 0 ? -v : v;
}

}  // namespace

void Rational::BigDeleter::operator()(Big* b) const { delete b; }

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw InvalidInput("rational with zero denominator");
  set_from_i128(n, d);
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_.reset(new Big(*o.big_));
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  if (o.big_) {
    big_.reset(new Big(*o.big_));
  } else {
    big_.reset();
  }
  return *this;
}

Rational::Rational(Rational&& o) noexcept = default;
Rational& Rational::operator=(Rational&& o) noexcept = default;
Rational::~Rational() = default;

void Rational::set_from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd128(uabs128(n), u128(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits_i64(n) && fits_i64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  big_.reset(new Big());
  mpz_class zn;
  mpz_class zd;
  mpz_from_i128(zn, n);
  mpz_from_i128(zd, d);
  big_->q = mpq_class(zn, zd);
  big_->q.canonicalize();
}

Rational::Big& Rational::promote_self() {
  if (!big_) {
    big_.reset(new Big());
    big_->q = to_mpq(num_, den_);
  }
  return *big_;
}

void Rational::demote() {
  if (!big_) return;
  const mpz_class& n = big_->q.get_num();
  const mpz_class& d = big_->q.get_den();
  if (mpz_fits_i64(n) && mpz_fits_i64(d)) {
    num_ = mpz_to_i64(n);
    den_ = mpz_to_i64(d);
    big_.reset();
  }
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num_part, true) || !is_int(den_part, false)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string num_s(num_part);
  if (num_s[0] == '+') num_s.erase(0, 1);
  mpz_class zn(num_s, 10);
  mpz_class zd(std::string(den_part), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r;
  r.big_.reset(new Big());
  r.big_->q = mpq_class(zn, zd);
  r.big_->q.canonicalize();
  r.demote();
  return r;
}

bool Rational::is_integer() const {
  if (is_small()) return den_ == 1;
  return big_->q.get_den() == 1;
}

int Rational::sign() const {
  if (is_small()) return (num_ > 0) - (num_ < 0);
  return sgn(big_->q);
}

std::string Rational::num_str() const {
  if (is_small()) return std::to_string(num_);
  return big_->q.get_num().get_str();
}

std::string Rational::den_str() const {
  if (is_small()) return std::to_string(den_);
  return big_->q.get_den().get_str();
}

std::string Rational::str() const { return num_str() + "/" + den_str(); }

double Rational::to_double() const {
  if (is_small()) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->q.get_d();
}

std::int64_t Rational::floor() const {
  if (is_small()) {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->q.get_num_mpz_t(), big_->q.get_den_mpz_t());
  if (!mpz_fits_i64(q)) throw InternalError("floor out of 64-bit range");
  return mpz_to_i64(q);
}

Rational Rational::frac() const {
  Rational r;
  if (is_small()) {
    std::int64_t m = num_ % den_;
    if (m < 0) m += den_;
    r.num_ = m;
    r.den_ = den_;
    return r;
  }
  mpz_class m;
  mpz_fdiv_r(m.get_mpz_t(), big_->q.get_num_mpz_t(), big_->q.get_den_mpz_t());
  r.big_.reset(new Big());
  r.big_->q = mpq_class(m, big_->q.get_den());
  r.big_->q.canonicalize();
  r.demote();
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  Rational r(*this);
  if (r.is_small()) {
    if (r.num_ == std::numeric_limits<std::int64_t>::min()) {
      r.set_from_i128(-i128(r.num_), r.den_);
    } else {
      r.num_ = -r.num_;
    }
  } else {
    r.big_->q = -r.big_->q;
    r.demote();
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (is_small() && o.is_small()) {
    if (den_ == o.den_) {
      set_from_i128(i128(num_) + o.num_, den_);
      return *this;
    }
    const std::uint64_t g = gcd64(std::uint64_t(den_), std::uint64_t(o.den_));
    if (g == 1) {
      const i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
      const i128 d = i128(den_) * o.den_;
      if (fits_i64(n) && fits_i64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
      } else {
        set_from_i128(n, d);
      }
      return *this;
    }
    const auto gi = static_cast<std::int64_t>(g);
    const i128 t = i128(num_) * (o.den_ / gi) + i128(o.num_) * (den_ / gi);
    const std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(uabs128(t) % g), g);
    const i128 n = t / static_cast<i128>(g2);
    const i128 d = i128(den_ / gi) * (o.den_ / static_cast<std::int64_t>(g2));
    if (fits_i64(n) && fits_i64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      set_from_i128(n, d);
    }
    return *this;
  }
  Big& b = promote_self();
  if (o.is_small()) {
    b.q += to_mpq(o.num_, o.den_);
  } else {
    b.q += o.big_->q;
  }
  demote();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_small() && o.is_small()) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::uint64_t g1 = gcd64(uabs64(num_), std::uint64_t(o.den_));
    const std::uint64_t g2 = gcd64(uabs64(o.num_), std::uint64_t(den_));
    const i128 n = i128(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
    const i128 d = i128(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
    if (fits_i64(n) && fits_i64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      set_from_i128(n, d);
    }
    return *this;
  }
  Big& b = promote_self();
  if (o.is_small()) {
    b.q *= to_mpq(o.num_, o.den_);
  } else {
    b.q *= o.big_->q;
  }
  demote();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidInput("division by zero rational");
  if (o.is_small()) {
    Rational inv;
    inv.set_from_i128(o.den_, o.num_);
    return *this *= inv;
  }
  Big& b = promote_self();
  b.q /= o.big_->q;
  demote();
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.big_->q == b.big_->q;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 l = i128(a.num_) * b.den_;
    const i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  const mpq_class qa = a.is_small() ? to_mpq(a.num_, a.den_) : a.big_->q;
  const mpq_class qb = b.is_small() ? to_mpq(b.num_, b.den_) : b.big_->q;
  const int c = cmp(qa, qb);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rational::hash() const {
  if (is_small()) {
    std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(den_) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
  return std::hash<std::string>{}(str());
}

}  // namespace affdimer
