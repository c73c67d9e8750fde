#pragma once

#include "knotforge/diagram.hpp"
#include "knotforge/exactmath.hpp"
#include "knotforge/gf2poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knotforge {

// Canonical 2-bridge fraction p/q, identified up to mirror image.
// The unknot is represented as 1/1.
struct TwoBridgeFraction {
    BigInt p = 1;
    BigInt q = 1;

    bool is_unknot() const { return p == 1; }
    std::string to_string() const { return p.get_str() + "/" + q.get_str(); }

    friend bool operator==(const TwoBridgeFraction& a, const TwoBridgeFraction& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const TwoBridgeFraction& a, const TwoBridgeFraction& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

TwoBridgeFraction canonical(const BigInt& p, const BigInt& q);
TwoBridgeFraction parse_fraction(const std::string& text);  // "p/q"

// Integer Laurent polynomial, exponent -> nonzero coefficient.
class LaurentPolyInt {
public:
    LaurentPolyInt() = default;
    static LaurentPolyInt constant(const BigInt& c);

    void add(int exponent, const BigInt& c);
    BigInt coeff(int exponent) const;
    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const { return terms_.begin()->first; }
    int max_exponent() const { return terms_.rbegin()->first; }

    LaurentPolyInt shifted(int by) const;
    LaurentPolyInt operator-() const;
    friend LaurentPolyInt operator+(const LaurentPolyInt& a, const LaurentPolyInt& b);
    friend LaurentPolyInt operator*(const LaurentPolyInt& a, const LaurentPolyInt& b);
    friend bool operator==(const LaurentPolyInt& a, const LaurentPolyInt& b) { return a.terms_ == b.terms_; }

    // Coefficients reduced mod 2, shifted so the lowest exponent is 0.
    Gf2Poly mod2_normalized() const;
    std::string to_string(const std::string& var) const;

private:
    std::map<int, BigInt> terms_;
};

struct SignSequence4Plat {
    std::vector<int> eta;                       // Type I signs, left to right
    std::vector<std::pair<int, int>> eps_pairs;  // Type II columns, left to right
};

// Signs of an n_x = 2 diagram read off in order of increasing x.
SignSequence4Plat four_plat_signs(const PlanarDiagram& diagram);

// Continued-fraction terms [eta_1, eps_1 sum, eta_2, ..., eta_ny].
std::vector<BigInt> four_plat_terms(const SignSequence4Plat& signs);

// Returns the canonical fraction; 1/1 stands for the unknot.
TwoBridgeFraction fraction_from_diagram(const SignSequence4Plat& signs);

LaurentPolyInt conway_polynomial(std::span<const BigInt> a);
LaurentPolyInt alexander_from_conway(const LaurentPolyInt& nabla);
// Symmetric Alexander polynomial with positive constant term.
LaurentPolyInt alexander_of(const TwoBridgeFraction& f);

bool is_square_mod2(const LaurentPolyInt& delta);
bool is_one_mod2(const LaurentPolyInt& delta);
BigInt linking_number_with_axis(std::span<const BigInt> a);

int crossing_number(const TwoBridgeFraction& f);

// Crossing number -> canonical fractions of the 2-bridge knots with it.
std::map<int, std::set<TwoBridgeFraction>> enumerate_two_bridge(int cr_max, int workers = 1);

// CSV with header "crossing,p,q,delta_mod2,lk".
std::string two_bridge_csv(const std::map<int, std::set<TwoBridgeFraction>>& table);

}  // namespace knotforge
