#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "groupspec/error.hpp"

namespace groupspec::lie {

/// Integers mod a prime P.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2 && P < 65536, "modulus must be a small prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Zp operator+(Zp a, Zp b) { return raw((a.v_ + b.v_) % P); }
  friend constexpr Zp operator-(Zp a, Zp b) { return raw((a.v_ + P - b.v_) % P); }
  friend constexpr Zp operator*(Zp a, Zp b) { return raw(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % P)); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  constexpr Zp operator-() const { return raw((P - v_) % P); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }

  Zp inverse() const {
    if (v_ == 0) throw InputError("division by zero in F_" + std::to_string(P));
    Zp r = 1, b = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }

  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Zp a, Zp b) { return a.v_ < b.v_; }
  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  static constexpr Zp raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  std::uint32_t v_ = 0;
};

using Rational = boost::rational<std::int64_t>;

/// Enumeration and naming for a scalar type.
template <class S>
struct FieldTraits;

template <std::uint32_t P>
struct FieldTraits<Zp<P>> {
  static constexpr bool finite = true;
  static constexpr std::uint32_t size = P;
  static std::string name() { return "F_" + std::to_string(P); }
  static std::vector<Zp<P>> elements() {
    std::vector<Zp<P>> e;
    for (std::uint32_t i = 0; i < P; ++i) e.emplace_back(static_cast<long long>(i));
    return e;
  }
  static long long to_integer(Zp<P> v) { return v.value(); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool finite = false;
  static std::string name() { return "Q"; }
};

inline std::string to_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Calls f.template operator()<Zp<p>>() for a supported prime p.
template <class F>
decltype(auto) with_prime(std::uint32_t p, F&& f) {
  switch (p) {
    case 2: return f.template operator()<Zp<2>>();
    case 3: return f.template operator()<Zp<3>>();
    case 5: return f.template operator()<Zp<5>>();
    case 7: return f.template operator()<Zp<7>>();
    default: throw InputError("unsupported field characteristic " + std::to_string(p) + " (use 2, 3, 5 or 7)");
  }
}

}  // namespace groupspec::lie

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<groupspec::lie::Zp<P>> : GenericNumTraits<groupspec::lie::Zp<P>> {
  using Real = groupspec::lie::Zp<P>;
  using NonInteger = groupspec::lie::Zp<P>;
  using Literal = groupspec::lie::Zp<P>;
  using Nested = groupspec::lie::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<groupspec::lie::Rational> : GenericNumTraits<groupspec::lie::Rational> {
  using Real = groupspec::lie::Rational;
  using NonInteger = groupspec::lie::Rational;
  using Literal = groupspec::lie::Rational;
  using Nested = groupspec::lie::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
