#pragma once

// Exact scalar types usable as Eigen scalars: prime fields Zp<P> with
// canonical representatives 0..P-1, and arbitrary-precision rationals.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "quiverbench/errors.hpp"

namespace qb {

constexpr bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

template <std::uint32_t P>
class Zp {
  static_assert(isPrime(P), "Zp modulus must be prime");
  static_assert(P < (1u << 31), "Zp modulus must fit in 31 bits");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  // Implicit so that Eigen's Scalar(0) / Scalar(1) and integer literals work.
  constexpr Zp(long long v) : v_(reduce(v)) {}  // NOLINT(google-explicit-constructor)

  constexpr std::uint32_t value() const { return v_; }

  /// Representative in (-P/2, P/2], used when exporting integer relations.
  constexpr long long signedValue() const {
    return v_ > P / 2 ? static_cast<long long>(v_) - P : static_cast<long long>(v_);
  }

  friend constexpr Zp operator+(Zp a, Zp b) { return fromRaw((a.v_ + b.v_) % P); }
  friend constexpr Zp operator-(Zp a, Zp b) { return fromRaw((a.v_ + P - b.v_) % P); }
  friend constexpr Zp operator*(Zp a, Zp b) {
    return fromRaw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % P));
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return fromRaw(v_ == 0 ? 0 : P - v_); }
  constexpr Zp& operator+=(Zp o) { return *this = *this + o; }
  constexpr Zp& operator-=(Zp o) { return *this = *this - o; }
  constexpr Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

  Zp inverse() const {
    if (v_ == 0) throw Error("division by zero in F_" + std::to_string(P));
    // Extended Euclid on (v, P).
    long long r0 = P, r1 = v_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      long long q = r0 / r1;
      long long t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return Zp(s0);
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  static constexpr Zp fromRaw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }

  std::uint32_t v_ = 0;
};

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. A thin value wrapper over Boost's
/// cpp_rational so that Eigen sees a plain scalar type.
class Rational {
  using Impl =
      boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

 public:
  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Impl(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Impl(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Impl(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw Error("division by zero in Q");
    return Rational(Impl(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(Impl(-v_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_.str(); }

 private:
  explicit Rational(Impl v) : v_(std::move(v)) {}
  Impl v_;
};

using F2 = Zp<2>;
using F3 = Zp<3>;
using F5 = Zp<5>;
using F7 = Zp<7>;
using F101 = Zp<101>;

/// Compile-time description of a scalar field.
template <class S>
struct FieldTraits;

template <std::uint32_t P>
struct FieldTraits<Zp<P>> {
  static constexpr bool finite = true;
  /// Number of elements; 0 marks an infinite field.
  static constexpr std::uint64_t order = P;
  static constexpr std::uint64_t characteristic = P;
  static std::string name() { return "F" + std::to_string(P); }
  static Zp<P> fromInteger(long long v) { return Zp<P>(v); }
  static Zp<P> fromBigInt(const BigInt& v) {
    BigInt r = v % P;
    if (r < 0) r += P;
    return Zp<P>(r.convert_to<long long>());
  }
  static Zp<P> fromFraction(const BigInt& num, const BigInt& den) {
    Zp<P> d = fromBigInt(den);
    if (d == Zp<P>(0)) throw Error("denominator vanishes in " + name());
    return fromBigInt(num) / d;
  }
  static std::string format(const Zp<P>& a) { return std::to_string(a.value()); }
  /// Integer relation coefficient representing `a` (symmetric residue).
  static BigInt toIntegerRepresentative(const Zp<P>& a) { return BigInt(a.signedValue()); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool finite = false;
  static constexpr std::uint64_t order = 0;
  static constexpr std::uint64_t characteristic = 0;
  static std::string name() { return "Q"; }
  static Rational fromInteger(long long v) { return Rational(v); }
  static Rational fromBigInt(const BigInt& v) { return Rational(v); }
  static Rational fromFraction(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("zero denominator");
    return Rational(num, den);
  }
  static std::string format(const Rational& a) {
    if (a.denominator() == 1) return a.numerator().str();
    return a.numerator().str() + "/" + a.denominator().str();
  }
};

/// True when a certified computation relying on "field larger than n" may run.
template <class S>
constexpr bool fieldExceeds(std::uint64_t n) {
  return !FieldTraits<S>::finite || FieldTraits<S>::order > n;
}

template <class S>
inline bool isZero(const S& a) {
  return a == S(0);
}

}  // namespace qb

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<qb::Zp<P>> : GenericNumTraits<qb::Zp<P>> {
  using Real = qb::Zp<P>;
  using NonInteger = qb::Zp<P>;
  using Literal = qb::Zp<P>;
  using Nested = qb::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(P - 1); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<qb::Rational> : GenericNumTraits<qb::Rational> {
  using Real = qb::Rational;
  using NonInteger = qb::Rational;
  using Literal = qb::Rational;
  using Nested = qb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

/// Applies X to every scalar type the library is instantiated for.
#define QB_FOR_EACH_FIELD(X) X(::qb::F2) X(::qb::F3) X(::qb::F5) X(::qb::F7) X(::qb::F101) X(::qb::Rational)
