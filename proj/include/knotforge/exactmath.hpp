#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace knotforge {

// GMP keeps mpq_class canonical: reduced, positive denominator, zero as 0/1.
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
BigRational parse_rational(const std::string& text);  // "p/q" or "p"
std::string to_string(const BigRational& r);

BigInt floor_of(const BigRational& r);
BigRational frac_of(const BigRational& r);  // r - floor(r), in [0,1)
BigInt mod_floor(const BigInt& a, const BigInt& m);  // result in [0,m)

// Angle coeff*pi, held exactly.
class PiRational {
public:
    PiRational() = default;
    explicit PiRational(BigRational coeff) : coeff_(std::move(coeff)) {}
    static PiRational of(long num, long den = 1) { return PiRational(make_rational(num, den)); }

    const BigRational& coeff() const { return coeff_; }
    BigRational reduced_mod2() const;  // coeff mod 2, in [0,2)
    long double radians() const;
    std::string to_string() const { return knotforge::to_string(coeff_); }

    friend PiRational operator+(const PiRational& a, const PiRational& b) { return PiRational(a.coeff_ + b.coeff_); }
    friend PiRational operator-(const PiRational& a, const PiRational& b) { return PiRational(a.coeff_ - b.coeff_); }
    friend PiRational operator-(const PiRational& a) { return PiRational(-a.coeff_); }
    friend PiRational operator*(const BigRational& s, const PiRational& a) { return PiRational(s * a.coeff_); }
    friend bool operator==(const PiRational& a, const PiRational& b) { return a.coeff_ == b.coeff_; }
    friend bool operator<(const PiRational& a, const PiRational& b) { return a.coeff_ < b.coeff_; }

private:
    BigRational coeff_{0};
};

// A phase known only as a real number of radians.
struct RealPhase {
    long double value = 0.0L;
};

// Exact sign of sin(theta).
int sin_sign(const PiRational& theta);

// Position of cos(theta) on the x axis as a sortable key: the angle folded
// into [0,1] (in units of pi). Larger key means smaller cosine.
BigRational cos_fold(const PiRational& theta);

BigInt mod_inverse(const BigInt& q, const BigInt& p);

// Even continued fraction p/q = [2a_1, -2a_2, ..., (-1)^{n+1} 2a_n].
// For odd q the representative q - p of the same residue class is expanded,
// since an all-even expansion only exists for fractions odd/even.
std::vector<BigInt> even_cf_expand(const BigInt& p, const BigInt& q);

// The fraction actually reproduced by even_cf_expand(p, q).
BigRational even_cf_target(const BigInt& p, const BigInt& q);

// Terms of the signed even continued fraction for a = (a_1, ..., a_n).
std::vector<BigInt> even_cf_terms(std::span<const BigInt> a);

BigRational cf_evaluate(std::span<const BigInt> terms);

// Point of the projective line: num/den with den possibly zero.
struct ProjectiveRational {
    BigInt num = 0;
    BigInt den = 1;

    bool is_infinite() const { return den == 0 && num != 0; }
    bool is_undefined() const { return den == 0 && num == 0; }
};

// Evaluates the same continued fraction with infinity allowed in the middle.
ProjectiveRational cf_evaluate_projective(std::span<const BigInt> terms);

// Positive regular continued fraction of p/q (p, q > 0).
std::vector<BigInt> regular_cf(BigInt p, BigInt q);

}  // namespace knotforge
