#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace prym5 {

namespace detail {
struct GfData;
}

class Fq;

// Handle to an interned finite field F_{p^k}. Copies are cheap and compare
// equal when they refer to the same (p, k).
class GF {
public:
    GF() = default;
    GF(unsigned p, unsigned k = 1);

    unsigned characteristic() const;
    unsigned degree() const;
    std::uint64_t order() const;
    // Monic modulus, coefficients from the constant term upwards.
    const std::vector<unsigned>& modulus() const;

    Fq zero() const;
    Fq one() const;
    Fq of(long long n) const;
    // Elements are indexed 0..q-1 by their base-p digits (constant term first).
    Fq element(std::uint64_t index) const;
    // Root of the modulus polynomial (the generator of F_{p^k} over F_p).
    Fq gen() const;

    // Image of an element of the prime field, or of this same field.
    Fq embed(const Fq& x) const;

    std::string tag() const;
    bool valid() const { return d_ != nullptr; }
    GF valid_or(const GF& o) const { return d_ ? *this : o; }

    friend bool operator==(const GF& a, const GF& b) { return a.d_ == b.d_; }
    friend bool operator!=(const GF& a, const GF& b) { return a.d_ != b.d_; }

    const detail::GfData* data() const { return d_; }

private:
    explicit GF(const detail::GfData* d) : d_(d) {}
    const detail::GfData* d_ = nullptr;
    friend class Fq;
};

// Element of a finite field. A default-constructed element is a field-less
// zero; it adopts the field of the other operand in binary operations.
class Fq {
public:
    using Domain = GF;

    Fq() = default;

    GF domain() const { return GF(f_); }
    std::uint64_t index() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    Fq& operator/=(const Fq& o) { return *this = *this / o; }

    Fq inv() const;
    Fq pow(std::uint64_t e) const;

    // Integer multiple n*x; n is reduced modulo the characteristic.
    Fq times(long long n) const;

    friend bool operator==(const Fq& a, const Fq& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fq& a, const Fq& b) { return a.v_ != b.v_; }
    // Total order by index, used for canonical sorting only.
    friend bool operator<(const Fq& a, const Fq& b) { return a.v_ < b.v_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Fq& x) { return os << x.str(); }

private:
    Fq(const detail::GfData* f, std::uint64_t v) : f_(f), v_(v) {}
    const detail::GfData* field(const Fq& o) const { return f_ ? f_ : o.f_; }

    const detail::GfData* f_ = nullptr;
    std::uint64_t v_ = 0;
    friend class GF;
};

std::optional<Fq> sqrt(const Fq& x);
bool is_square(const Fq& x);

// --- rationals -------------------------------------------------------------

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Rational;

struct QQ {
    Rational zero() const;
    Rational one() const;
    Rational of(long long n) const;
    std::string tag() const { return "QQ"; }
    unsigned characteristic() const { return 0; }
    QQ valid_or(QQ) const { return {}; }
    friend bool operator==(QQ, QQ) { return true; }
    friend bool operator!=(QQ, QQ) { return false; }
};

class Rational {
public:
    using Domain = QQ;

    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(BigRational v) : v_(std::move(v)) {}
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {}

    QQ domain() const { return {}; }
    const BigRational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator+(const Rational& o) const { return Rational(BigRational(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(BigRational(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(BigRational(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(BigRational(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inv() const;
    Rational pow(std::uint64_t e) const;
    Rational times(long long n) const { return Rational(BigRational(v_ * n)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

private:
    BigRational v_;
};

std::optional<Rational> sqrt(const Rational& x);

inline Rational QQ::zero() const { return Rational(0); }
inline Rational QQ::one() const { return Rational(1); }
inline Rational QQ::of(long long n) const { return Rational(n); }

bool is_prime(unsigned n);

}  // namespace prym5
