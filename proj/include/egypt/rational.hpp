#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals and the Egyptian-representation
 *        data model.
 *
 * Everything in this library works over nonnegative rationals kept in
 * canonical reduced form (gcd(num, den) = 1, den >= 1). There is no
 * floating point anywhere; all arithmetic is exact.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace egypt {

using Int = mpz_class;

/// Exact nonnegative rational in lowest terms. Denominator is always >= 1;
/// zero canonicalizes to 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    explicit Rational(Int n) : num_(std::move(n)), den_(1) { check_sign(); }
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ <= 0)
            throw std::domain_error("Rational: denominator must be positive");
        check_sign();
        reduce();
    }
    Rational(long n, long d) : Rational(Int(n), Int(d)) {}
    explicit Rational(long n) : Rational(Int(n)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Proper fraction test: value in (0, 1).
    bool is_proper() const { return num_ > 0 && num_ < den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        Int n = num_ * o.den_ - o.num_ * den_;
        if (n < 0)
            throw std::domain_error("Rational: subtraction would go negative");
        return Rational(std::move(n), den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Int floor() const { return num_ / den_; }

    /// Canonical text form: "a/b", or "a" when integer-valued.
    std::string str() const;

    /// Parses "a/b" or a bare integer "a". Whitespace is rejected.
    static Rational parse(const std::string& text);

    /// 1/d as a Rational.
    static Rational unit(const Int& d) {
        if (d < 2)
            throw std::domain_error("unit fraction denominator must be >= 2");
        return Rational(Int(1), d);
    }

private:
    void check_sign() const {
        if (num_ < 0)
            throw std::domain_error("Rational: negative values are out of domain");
    }
    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g;
        mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

inline Rational make_rational(const Int& num, const Int& den) {
    return Rational(num, den);
}

/// Partition of the positive rationals by comparison of numerator and
/// denominator: Q_less holds proper fractions, Q_geq everything else.
enum class QClass { Q_less, Q_geq };

inline QClass classify_q(const Rational& v) {
    if (v.is_zero())
        throw std::domain_error("classify_q: value must be positive");
    return v.num() < v.den() ? QClass::Q_less : QClass::Q_geq;
}

/// A unit fraction 1/n, stored by its denominator n >= 2.
class UnitFraction {
public:
    explicit UnitFraction(Int d) : den_(std::move(d)) {
        if (den_ < 2)
            throw std::domain_error("UnitFraction: denominator must be >= 2");
    }
    const Int& den() const { return den_; }
    Rational value() const { return Rational::unit(den_); }

    auto operator<=>(const UnitFraction&) const = default;

private:
    Int den_;
};

/// A finite Egyptian representation: strictly increasing denominators, all
/// >= 2. Duplicate insertion is an error, never a silent merge. Singletons
/// are allowed; strictness (|X| >= 2) is a separate predicate.
class EgyptianRepr {
public:
    EgyptianRepr() = default;
    explicit EgyptianRepr(std::vector<Int> denominators);
    EgyptianRepr(std::initializer_list<long> denominators);

    const std::vector<Int>& denominators() const { return dens_; }
    std::size_t size() const { return dens_.size(); }
    bool empty() const { return dens_.empty(); }

    const Int& min() const { return dens_.front(); }
    const Int& max() const { return dens_.back(); }

    bool contains(const Int& d) const;

    /// Inserts a new denominator; throws if d < 2 or already present.
    void insert(const Int& d);
    void erase(const Int& d);

    bool operator==(const EgyptianRepr&) const = default;
    bool operator<(const EgyptianRepr& o) const { return dens_ < o.dens_; }

    /// Canonical text form "[d1,d2,...,dk]" ascending.
    std::string str() const;
    static EgyptianRepr parse(const std::string& text);

private:
    std::vector<Int> dens_;  // sorted, strictly increasing, each >= 2
};

/// Exact sum of 1/d over the representation.
Rational repr_sum(const EgyptianRepr& x);

/// Definition check: a strict Egyptian fraction has at least two terms.
inline bool is_strict_egyptian(const EgyptianRepr& x) { return x.size() >= 2; }

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity parity_of(const Int& n) {
    return mpz_odd_p(n.get_mpz_t()) ? Parity::odd : Parity::even;
}

/// Elementwise parity annotation of a term list ("e"/"o" in display).
class ParityVector {
public:
    ParityVector() = default;
    explicit ParityVector(std::vector<Parity> p) : parities_(std::move(p)) {}

    const std::vector<Parity>& parities() const { return parities_; }
    bool all_odd() const;
    bool all_same() const;

    /// Display form, e.g. "(e,e,o,o)".
    std::string str() const;

    bool operator==(const ParityVector&) const = default;

private:
    std::vector<Parity> parities_;
};

ParityVector parity_signature(std::span<const Int> terms);

}  // namespace egypt
