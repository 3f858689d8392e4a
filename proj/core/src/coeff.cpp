#include "adicert/coeff.hpp"

#include <sstream>

namespace adicert {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DomainError("division by zero in F_p");
    return mod_pow(a, p - 2, p);
}

Coeff Coeff::zero(std::uint32_t p) {
    Coeff c;
    c.p_ = p;
    return c;
}

Coeff Coeff::one(std::uint32_t p) {
    Coeff c;
    c.p_ = p;
    if (p == 0)
        c.q_ = 1;
    else
        c.r_ = 1 % p;
    return c;
}

Coeff Coeff::from_int(long long v, std::uint32_t p) {
    Coeff c;
    c.p_ = p;
    if (p == 0) {
        c.q_ = v;
    } else {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        c.r_ = static_cast<std::uint64_t>(m);
    }
    return c;
}

Coeff Coeff::from_rational(const Rational& q) {
    Coeff c;
    c.q_ = q;
    return c;
}

bool Coeff::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Coeff::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void Coeff::check_domain(const Coeff& o) const {
    if (p_ != o.p_) throw DomainError("coefficient domain mismatch");
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_domain(o);
    Coeff c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = q_ + o.q_;
    else
        c.r_ = (r_ + o.r_) % p_;
    return c;
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_domain(o);
    Coeff c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = q_ - o.q_;
    else
        c.r_ = (r_ + p_ - o.r_) % p_;
    return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_domain(o);
    Coeff c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = q_ * o.q_;
    else
        c.r_ = r_ * o.r_ % p_;
    return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
    Coeff c;
    c.p_ = p_;
    if (p_ == 0)
        c.q_ = -q_;
    else
        c.r_ = r_ == 0 ? 0 : p_ - r_;
    return c;
}

Coeff Coeff::inverse() const {
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) {
        if (q_ == 0) throw DomainError("division by zero");
        c.q_ = 1 / q_;
    } else {
        c.r_ = mod_inverse(r_, p_);
    }
    return c;
}

bool Coeff::operator==(const Coeff& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Coeff::str() const {
    std::ostringstream os;
    if (p_ == 0)
        os << q_;
    else
        os << r_;
    return os.str();
}

} // namespace adicert
