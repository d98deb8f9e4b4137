#include "lscat/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace lscat {

namespace {

// Inline values are kept well below the int64 edge so cross products of two
// inline operands always fit in __int128.
constexpr long long kSmallMax = 1LL << 62;

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs128(i128 x) { return x < 0 ? u128(-(x + 1)) + 1 : u128(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fitsSmall(i128 n, i128 d) {
    return n > -i128(kSmallMax) && n < i128(kSmallMax) && d < i128(kSmallMax);
}

void mpzSetInt128(mpz_t z, i128 v) {
    bool neg = v < 0;
    u128 m = uabs128(v);
    mpz_set_ui(z, static_cast<unsigned long>(m >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, static_cast<unsigned long>(m & 0xffffffffffffffffULL));
    if (neg) mpz_neg(z, z);
}

bool mpzFitsSmall(const mpz_t z) {
    return mpz_fits_slong_p(z) && std::abs(mpz_get_si(z)) < kSmallMax;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(0), den_(1), big_(nullptr) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = fromInt128(n, d);
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(nullptr) {
    if (o.big_) {
        big_ = new __mpq_struct;
        mpq_init(big_);
        mpq_set(big_, o.big_);
    }
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    Rational tmp(o);
    *this = std::move(tmp);
    return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    if (big_) {
        mpq_clear(big_);
        delete big_;
    }
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
}

Rational::~Rational() {
    if (big_) {
        mpq_clear(big_);
        delete big_;
    }
}

Rational Rational::fromInt128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(uabs128(n), u128(d));
    if (g > 1) {
        bool neg = n < 0;
        u128 m = uabs128(n) / g;
        n = neg ? -i128(m) : i128(m);
        d = i128(u128(d) / g);
    }
    if (fitsSmall(n, d)) {
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }
    auto* q = new __mpq_struct;
    mpq_init(q);
    mpzSetInt128(mpq_numref(q), n);
    mpzSetInt128(mpq_denref(q), d);
    mpq_canonicalize(q);
    return Rational(q);
}

void Rational::copyToMpq(mpq_t out) const {
    if (big_) {
        mpq_set(out, big_);
    } else {
        mpq_set_si(out, num_, 1);
        mpz_set_si(mpq_denref(out), den_);
    }
}

Rational Rational::adoptMpq(mpq_t q) {
    mpq_canonicalize(q);
    if (mpzFitsSmall(mpq_numref(q)) && mpzFitsSmall(mpq_denref(q))) {
        Rational r;
        r.num_ = mpz_get_si(mpq_numref(q));
        r.den_ = mpz_get_si(mpq_denref(q));
        mpq_clear(q);
        return r;
    }
    auto* h = new __mpq_struct(*q);  // adopt limbs, no clear
    return Rational(h);
}

int Rational::sgn() const {
    if (big_) return mpq_sgn(big_);
    return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
}

bool Rational::isInteger() const {
    if (big_) return mpz_cmp_ui(mpq_denref(big_), 1) == 0;
    return den_ == 1;
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    mpq_t q;
    mpq_init(q);
    mpq_neg(q, big_);
    return adoptMpq(q);
}

Rational Rational::operator+(const Rational& o) const {
    if (!big_ && !o.big_) {
        return fromInt128(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    copyToMpq(a);
    o.copyToMpq(b);
    mpq_add(a, a, b);
    mpq_clear(b);
    return adoptMpq(a);
}

Rational Rational::operator-(const Rational& o) const {
    if (!big_ && !o.big_) {
        return fromInt128(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    copyToMpq(a);
    o.copyToMpq(b);
    mpq_sub(a, a, b);
    mpq_clear(b);
    return adoptMpq(a);
}

Rational Rational::operator*(const Rational& o) const {
    if (!big_ && !o.big_) {
        return fromInt128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    copyToMpq(a);
    o.copyToMpq(b);
    mpq_mul(a, a, b);
    mpq_clear(b);
    return adoptMpq(a);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        return fromInt128(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    copyToMpq(a);
    o.copyToMpq(b);
    mpq_div(a, a, b);
    mpq_clear(b);
    return adoptMpq(a);
}

Rational Rational::inverse() const {
    if (isZero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(1) / *this;
}

bool Rational::operator==(const Rational& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    mpq_t a, b;
    mpq_init(a);
    mpq_init(b);
    copyToMpq(a);
    o.copyToMpq(b);
    bool eq = mpq_equal(a, b) != 0;
    mpq_clear(a);
    mpq_clear(b);
    return eq;
}

std::string Rational::str() const {
    if (!big_) {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
    char* raw = mpq_get_str(nullptr, 10, big_);
    std::string s(raw);
    std::free(raw);
    return s;
}

Rational Rational::fromString(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");
    auto slash = s.find('/');
    std::string numPart = slash == std::string::npos ? s : s.substr(0, slash);
    std::string denPart = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digitsOk = [](const std::string& t, bool signAllowed) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (signAllowed && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!digitsOk(numPart, true) || !digitsOk(denPart, false))
        throw std::invalid_argument("Rational: bad literal '" + s + "'");
    mpq_t q;
    mpq_init(q);
    std::string joined = numPart + "/" + denPart;
    if (mpq_set_str(q, joined.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw std::invalid_argument("Rational: bad literal '" + s + "'");
    }
    return adoptMpq(q);
}

}  // namespace lscat
