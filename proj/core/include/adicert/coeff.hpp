/*
 * coeff.hpp
 * ---------
 * Exact coefficient arithmetic: arbitrary-precision rationals (p == 0)
 * or a prime field F_p (p > 0). Rationals are kept in lowest terms with
 * positive denominator by cpp_rational; F_p residues live in [0, p).
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adicert {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime_u32(std::uint32_t n);
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

class Coeff {
public:
    Coeff() = default;

    static Coeff zero(std::uint32_t p);
    static Coeff one(std::uint32_t p);
    static Coeff from_int(long long v, std::uint32_t p);
    static Coeff from_rational(const Rational& q); // p = 0

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inverse() const;

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    const Rational& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    // negative rationals render with a leading '-'; residues as 0..p-1
    std::string str() const;

private:
    std::uint32_t p_ = 0;
    Rational q_;
    std::uint64_t r_ = 0;

    void check_domain(const Coeff& o) const;
};

} // namespace adicert
