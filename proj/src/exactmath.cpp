#include "knotforge/exactmath.hpp"

#include "knotforge/errors.hpp"

#include <numbers>

namespace knotforge {

BigRational make_rational(long num, long den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational parse_rational(const std::string& text) {
    BigRational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw InvalidArgument("not a rational: " + text);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt floor_of(const BigRational& r) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

BigRational frac_of(const BigRational& r) {
    return r - BigRational(floor_of(r));
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt out;
    mpz_fdiv_r(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return out;
}

BigRational PiRational::reduced_mod2() const {
    BigRational half = coeff_ / 2;
    return 2 * frac_of(half);
}

long double PiRational::radians() const {
    // Split off the integer part so large coefficients keep their precision.
    BigInt whole = floor_of(coeff_);
    BigRational rest = coeff_ - BigRational(whole);
    long double r = static_cast<long double>(rest.get_d());
    // get_d is double precision; refine with one long-double division.
    if (rest.get_num().fits_slong_p() && rest.get_den().fits_slong_p()) {
        r = static_cast<long double>(rest.get_num().get_si()) / static_cast<long double>(rest.get_den().get_si());
    }
    return (static_cast<long double>(whole.get_d()) + r) * std::numbers::pi_v<long double>;
}

int sin_sign(const PiRational& theta) {
    BigRational m = theta.reduced_mod2();
    if (m == 0 || m == 1) return 0;
    return m < 1 ? 1 : -1;
}

BigRational cos_fold(const PiRational& theta) {
    BigRational m = theta.reduced_mod2();
    return m > 1 ? BigRational(2 - m) : m;
}

BigInt mod_inverse(const BigInt& q, const BigInt& p) {
    BigInt out;
    if (p <= 0 || mpz_invert(out.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NonInvertible(q.get_str() + " mod " + p.get_str());
    return mod_floor(out, p);
}

BigRational even_cf_target(const BigInt& p, const BigInt& q) {
    BigInt g = gcd(p, q);
    if (g != 1) throw NonInvertible("gcd(" + p.get_str() + "," + q.get_str() + ") != 1");
    // Knots (odd p) need an even denominator; links keep theirs and end in OddLength.
    BigInt qq = mpz_odd_p(p.get_mpz_t()) && mpz_odd_p(q.get_mpz_t()) ? BigInt(q - p) : q;
    BigRational r(p, qq);
    r.canonicalize();
    return r;
}

std::vector<BigInt> even_cf_expand(const BigInt& p, const BigInt& q) {
    BigRational x = even_cf_target(p, q);
    std::vector<BigInt> b;
    while (true) {
        // Nearest even integer; the remainder stays strictly inside (-1,1)
        // because x is never an odd integer along this recursion.
        BigInt c = 2 * floor_of(x / 2 + BigRational(1, 2));
        b.push_back(c);
        BigRational r = x - BigRational(c);
        if (r == 0) break;
        x = 1 / r;
    }
    if (b.size() % 2 != 0) throw OddLength(p.get_str() + "/" + q.get_str());
    std::vector<BigInt> a(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        BigInt half = b[i] / 2;
        a[i] = (i % 2 == 0) ? half : BigInt(-half);
    }
    return a;
}

std::vector<BigInt> even_cf_terms(std::span<const BigInt> a) {
    std::vector<BigInt> t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t[i] = (i % 2 == 0 ? 2 : -2) * a[i];
    return t;
}

BigRational cf_evaluate(std::span<const BigInt> terms) {
    if (terms.empty()) throw InvalidArgument("empty continued fraction");
    BigRational v(terms.back());
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        if (v == 0) throw IntermediateZero("tail starting at term " + std::to_string(i + 2));
        v = BigRational(terms[i]) + 1 / v;
    }
    return v;
}

ProjectiveRational cf_evaluate_projective(std::span<const BigInt> terms) {
    if (terms.empty()) throw InvalidArgument("empty continued fraction");
    BigInt num = terms.back();
    BigInt den = 1;
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        BigInt n = terms[i] * num + den;
        den = num;
        num = n;
    }
    BigInt g = gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den < 0 || (den == 0 && num < 0)) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

std::vector<BigInt> regular_cf(BigInt p, BigInt q) {
    if (p <= 0 || q <= 0) throw InvalidArgument("regular_cf needs positive p, q");
    std::vector<BigInt> out;
    while (q != 0) {
        BigInt a = p / q;
        out.push_back(a);
        BigInt r = p - a * q;
        p = q;
        q = r;
    }
    return out;
}

}  // namespace knotforge
