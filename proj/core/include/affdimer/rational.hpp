#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace affdimer {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// all arithmetic on them goes through 128-bit intermediates. Anything larger
/// is promoted to a GMP rational and demoted again as soon as it fits, so
/// precision is unbounded while the common case (offsets with a shared prime
/// denominator) stays allocation free.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational();

  /// Parses "p/q" or "p" (optional sign on p). Throws ParseError.
  static Rational parse(std::string_view text);

  bool is_small() const { return big_ == nullptr; }
  bool is_zero() const { return is_small() && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  /// Numerator/denominator as decimal strings (exact for big values).
  std::string num_str() const;
  std::string den_str() const;
  /// "p/q" with q >= 1 always present.
  std::string str() const;
  double to_double() const;

  /// Only valid when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  /// Largest integer <= value. Throws if it does not fit in 64 bits.
  std::int64_t floor() const;
  /// value - floor(value), in [0,1).
  Rational frac() const;
  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  struct Big;
  struct BigDeleter {
    void operator()(Big* b) const;
  };
  void set_from_i128(__int128 n, __int128 d);
  void demote();
  Big& promote_self();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big, BigDeleter> big_;
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace affdimer
