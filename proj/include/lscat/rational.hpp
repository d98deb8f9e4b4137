#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>

namespace lscat {

// Exact rational scalar. Values that fit in 64 bits are kept inline;
// anything larger is promoted to a heap-allocated GMP rational, so the
// type is arbitrary-precision while desk-scale elimination stays cheap.
//
// Invariants: lowest terms, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() noexcept : num_(0), den_(1), big_(nullptr) {}
    Rational(long long n) noexcept : num_(n), den_(1), big_(nullptr) {}
    Rational(long long n, long long d);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational();

    // Parses "p/q" or the integer shorthand "n". Throws std::invalid_argument.
    static Rational fromString(const std::string& s);
    std::string str() const;

    bool isZero() const { return big_ == nullptr && num_ == 0; }
    int sgn() const;
    bool isInteger() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws std::domain_error on /0

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }

    Rational inverse() const;

private:
    long long num_, den_;   // valid when big_ == nullptr
    __mpq_struct* big_;     // non-null iff the value does not fit inline

    explicit Rational(__mpq_struct* adopted) : num_(0), den_(1), big_(adopted) {}
    static Rational fromInt128(__int128 n, __int128 d);
    void copyToMpq(mpq_t out) const;
    static Rational adoptMpq(mpq_t q);  // canonicalizes and demotes if small
};

}  // namespace lscat
