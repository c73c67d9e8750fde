#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotforge {

// Polynomial over GF(2), bit i of the packed words is the coefficient of t^i.
class Gf2Poly {
public:
    Gf2Poly() = default;
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(int degree);
    static Gf2Poly from_bits(std::initializer_list<int> exponents);

    bool is_zero() const { return words_.empty(); }
    int degree() const;           // -1 for zero
    int lowest_degree() const;    // -1 for zero
    bool coeff(int i) const;
    // A square in GF(2)[t] has no odd-degree terms.
    bool is_square() const;

    Gf2Poly shifted_down(int n) const;  // divide by t^n, dropping low bits
    Gf2Poly shifted_up(int n) const;

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) { return a.words_ == b.words_; }

    // Quotient of an exact division; throws if the remainder is nonzero.
    Gf2Poly divide_exact(const Gf2Poly& d) const;
    void divmod(const Gf2Poly& d, Gf2Poly& quot, Gf2Poly& rem) const;

    std::string to_string() const;  // e.g. "1+t+t^2"

private:
    void trim();
    void flip(int i);
    std::vector<std::uint64_t> words_;
};

// Determinant of a square matrix over GF(2)[t] by fraction-free elimination.
Gf2Poly gf2_determinant(std::vector<std::vector<Gf2Poly>> m);

}  // namespace knotforge
