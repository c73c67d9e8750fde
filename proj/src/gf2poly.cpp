#include "knotforge/gf2poly.hpp"

#include "knotforge/errors.hpp"

#include <bit>
#include <utility>

namespace knotforge {

namespace {

// Carry-less 64x64 -> 128 multiply.
void clmul(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
    lo = hi = 0;
    while (a != 0) {
        int i = std::countr_zero(a);
        lo ^= b << i;
        if (i != 0) hi ^= b >> (64 - i);
        a &= a - 1;
    }
}

}  // namespace

Gf2Poly Gf2Poly::monomial(int degree) {
    Gf2Poly p;
    p.flip(degree);
    return p;
}

Gf2Poly Gf2Poly::from_bits(std::initializer_list<int> exponents) {
    Gf2Poly p;
    for (int e : exponents) p.flip(e);
    p.trim();
    return p;
}

void Gf2Poly::flip(int i) {
    std::size_t w = static_cast<std::size_t>(i) / 64;
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (i % 64);
    trim();
}

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

int Gf2Poly::lowest_degree() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w) * 64 + std::countr_zero(words_[w]);
    return -1;
}

bool Gf2Poly::coeff(int i) const {
    std::size_t w = static_cast<std::size_t>(i) / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

Gf2Poly Gf2Poly::shifted_down(int n) const {
    Gf2Poly out;
    int deg = degree();
    for (int i = n; i <= deg; ++i)
        if (coeff(i)) out.flip(i - n);
    return out;
}

Gf2Poly Gf2Poly::shifted_up(int n) const {
    Gf2Poly out;
    if (is_zero()) return out;
    std::size_t ws = static_cast<std::size_t>(n) / 64;
    int bs = n % 64;
    out.words_.assign(words_.size() + ws + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i + ws] ^= words_[i] << bs;
        if (bs != 0) out.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
    }
    out.trim();
    return out;
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out = a.words_.size() >= b.words_.size() ? a : b;
    const Gf2Poly& small = a.words_.size() >= b.words_.size() ? b : a;
    for (std::size_t i = 0; i < small.words_.size(); ++i) out.words_[i] ^= small.words_[i];
    out.trim();
    return out;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        for (std::size_t j = 0; j < b.words_.size(); ++j) {
            std::uint64_t lo, hi;
            clmul(a.words_[i], b.words_[j], lo, hi);
            out.words_[i + j] ^= lo;
            out.words_[i + j + 1] ^= hi;
        }
    }
    out.trim();
    return out;
}

void Gf2Poly::divmod(const Gf2Poly& d, Gf2Poly& quot, Gf2Poly& rem) const {
    if (d.is_zero()) throw InvalidArgument("division by zero polynomial");
    quot = Gf2Poly();
    rem = *this;
    int dd = d.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        quot.flip(shift);
        rem = rem + d.shifted_up(shift);
    }
}

Gf2Poly Gf2Poly::divide_exact(const Gf2Poly& d) const {
    Gf2Poly q, r;
    divmod(d, q, r);
    if (!r.is_zero()) throw InvalidArgument("inexact polynomial division");
    return q;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += "1";
        else if (i == 1) out += "t";
        else out += "t^" + std::to_string(i);
    }
    return out;
}

Gf2Poly gf2_determinant(std::vector<std::vector<Gf2Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Gf2Poly::one();
    Gf2Poly prev = Gf2Poly::one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Gf2Poly();
        std::swap(m[piv], m[k]);  // sign is irrelevant in characteristic 2
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] + m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = Gf2Poly();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

bool Gf2Poly::is_square() const {
    for (std::uint64_t w : words_)
        if (w & 0xAAAAAAAAAAAAAAAAULL) return false;
    return true;
}

}  // namespace knotforge
