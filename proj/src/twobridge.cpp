#include "knotforge/twobridge.hpp"

#include "knotforge/errors.hpp"
#include "knotforge/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace knotforge {

TwoBridgeFraction canonical(const BigInt& p_in, const BigInt& q_in) {
    BigInt p = abs(p_in);
    if (p == 0) throw InvalidArgument("p = 0 is not a knot fraction");
    if (mpz_even_p(p.get_mpz_t())) throw EvenP(p.get_str() + "/" + q_in.get_str());
    if (p == 1) return {1, 1};
    BigInt q = mod_floor(q_in, p);
    BigInt inv = mod_inverse(q, p);
    BigInt best = std::min({q, BigInt(p - q), inv, BigInt(p - inv)});
    return {p, best};
}

TwoBridgeFraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw InvalidArgument("expected p/q: " + text);
    BigInt p, q;
    if (p.set_str(text.substr(0, slash), 10) != 0 || q.set_str(text.substr(slash + 1), 10) != 0)
        throw InvalidArgument("expected p/q: " + text);
    return canonical(p, q);
}

LaurentPolyInt LaurentPolyInt::constant(const BigInt& c) {
    LaurentPolyInt p;
    p.add(0, c);
    return p;
}

void LaurentPolyInt::add(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPolyInt::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPolyInt LaurentPolyInt::shifted(int by) const {
    LaurentPolyInt out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
}

LaurentPolyInt LaurentPolyInt::operator-() const {
    LaurentPolyInt out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPolyInt operator+(const LaurentPolyInt& a, const LaurentPolyInt& b) {
    LaurentPolyInt out = a;
    for (const auto& [e, c] : b.terms_) out.add(e, c);
    return out;
}

LaurentPolyInt operator*(const LaurentPolyInt& a, const LaurentPolyInt& b) {
    LaurentPolyInt out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
    return out;
}

Gf2Poly LaurentPolyInt::mod2_normalized() const {
    std::vector<int> odd;
    for (const auto& [e, c] : terms_)
        if (mpz_odd_p(c.get_mpz_t())) odd.push_back(e);
    Gf2Poly out;
    if (odd.empty()) return out;
    for (int e : odd) out = out + Gf2Poly::monomial(e - odd.front());
    return out;
}

std::string LaurentPolyInt::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (e == 0 || mag != 1) os << mag.get_str();
        if (e != 0) {
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

SignSequence4Plat four_plat_signs(const PlanarDiagram& d) {
    if (d.n_x != 2) throw InvalidArgument("4-plat reading needs n_x = 2");
    std::vector<const CrossingRecord*> order;
    for (const auto& c : d.crossings) {
        if (c.sign == 0) throw MalformedDiagram("unresolved crossing");
        order.push_back(&c);
    }
    auto fold_greater = [](const CrossingRecord* a, const CrossingRecord* b) {
        if (a->x_fold_exact && b->x_fold_exact) return *a->x_fold_exact > *b->x_fold_exact;
        return a->x_fold > b->x_fold;
    };
    // Increasing x is decreasing folded angle.
    std::stable_sort(order.begin(), order.end(), fold_greater);

    SignSequence4Plat s;
    std::size_t i = 0;
    while (i < order.size()) {
        const CrossingRecord* c = order[i];
        bool expect_type_i = s.eta.size() == s.eps_pairs.size();
        if (expect_type_i) {
            if (c->kind != CrossingKind::TypeI) throw MalformedDiagram("4-plat columns out of order");
            s.eta.push_back(c->sign);
            ++i;
        } else {
            if (i + 1 >= order.size()) throw MalformedDiagram("unpaired Type II crossing");
            const CrossingRecord* c2 = order[i + 1];
            if (c->kind != CrossingKind::TypeII || c2->kind != CrossingKind::TypeII || !c->x_fold_exact ||
                !c2->x_fold_exact || *c->x_fold_exact != *c2->x_fold_exact)
                throw MalformedDiagram("Type II crossings do not form columns of two");
            s.eps_pairs.emplace_back(c->sign, c2->sign);
            i += 2;
        }
    }
    if (s.eta.size() != static_cast<std::size_t>(d.n_y) || s.eps_pairs.size() + 1 != s.eta.size())
        throw MalformedDiagram("4-plat has wrong number of columns");
    return s;
}

std::vector<BigInt> four_plat_terms(const SignSequence4Plat& s) {
    std::vector<BigInt> terms;
    for (std::size_t i = 0; i < s.eta.size(); ++i) {
        terms.emplace_back(s.eta[i]);
        if (i < s.eps_pairs.size()) terms.emplace_back(s.eps_pairs[i].first + s.eps_pairs[i].second);
    }
    return terms;
}

TwoBridgeFraction fraction_from_diagram(const SignSequence4Plat& s) {
    auto terms = four_plat_terms(s);
    ProjectiveRational v = cf_evaluate_projective(terms);
    if (v.is_undefined()) throw MalformedDiagram("continued fraction is 0/0");
    // p is the numerator; p = 0 would be a two-component link.
    return canonical(v.num, v.den);
}

LaurentPolyInt conway_polynomial(std::span<const BigInt> a) {
    // Running product of [-a_i z, 1; 1, 0]; only the first row is needed.
    LaurentPolyInt r0 = LaurentPolyInt::constant(1);
    LaurentPolyInt r1;
    for (const BigInt& ai : a) {
        LaurentPolyInt m00;
        m00.add(1, -ai);
        LaurentPolyInt n0 = r0 * m00 + r1;
        r1 = r0;
        r0 = n0;
    }
    return r0;
}

LaurentPolyInt alexander_from_conway(const LaurentPolyInt& nabla) {
    // z^2 = t - 2 + t^{-1}
    LaurentPolyInt z2;
    z2.add(1, 1);
    z2.add(0, -2);
    z2.add(-1, 1);
    LaurentPolyInt out;
    for (const auto& [e, c] : nabla.terms()) {
        if (e < 0 || e % 2 != 0) throw OddDegree("z^" + std::to_string(e));
        LaurentPolyInt term = LaurentPolyInt::constant(c);
        for (int i = 0; i < e / 2; ++i) term = term * z2;
        out = out + term;
    }
    return out;
}

LaurentPolyInt alexander_of(const TwoBridgeFraction& f) {
    if (f.is_unknot()) return LaurentPolyInt::constant(1);
    auto a = even_cf_expand(f.p, f.q);
    LaurentPolyInt delta = alexander_from_conway(conway_polynomial(a));
    if (delta.coeff(0) < 0) delta = -delta;
    return delta;
}

namespace {

void require_symmetric(const LaurentPolyInt& delta) {
    for (const auto& [e, c] : delta.terms())
        if (delta.coeff(-e) != c) throw Asymmetric("coefficient of t^" + std::to_string(e));
}

}  // namespace

bool is_square_mod2(const LaurentPolyInt& delta) {
    require_symmetric(delta);
    for (const auto& [e, c] : delta.terms())
        if (e > 0 && e % 2 != 0 && mpz_odd_p(c.get_mpz_t())) return false;
    return true;
}

bool is_one_mod2(const LaurentPolyInt& delta) {
    for (const auto& [e, c] : delta.terms()) {
        bool odd = mpz_odd_p(c.get_mpz_t());
        if ((e == 0) != odd) return false;
    }
    return mpz_odd_p(delta.coeff(0).get_mpz_t());
}

BigInt linking_number_with_axis(std::span<const BigInt> a) {
    BigInt total = 1;
    int eps = 1;
    for (const BigInt& ai : a) {
        if (mpz_even_p(ai.get_mpz_t())) eps = -eps;
        total += eps;
    }
    return total;
}

int crossing_number(const TwoBridgeFraction& f) {
    if (f.is_unknot()) return 0;
    BigInt inv = mod_inverse(f.q, f.p);
    int best = -1;
    for (const BigInt& q : {f.q, BigInt(f.p - f.q), inv, BigInt(f.p - inv)}) {
        BigInt sum = 0;
        for (const BigInt& t : regular_cf(f.p, q)) sum += t;
        int s = static_cast<int>(sum.get_si());
        if (best < 0 || s < best) best = s;
    }
    return best;
}

namespace {

// All compositions of `total` with first part `lead`, last part >= 2
// (or a single part), evaluated as regular continued fractions.
void compositions_with_lead(int total, int lead, std::set<TwoBridgeFraction>& out) {
    std::vector<BigInt> parts{lead};
    auto emit = [&] {
        if (parts.size() > 1 && parts.back() < 2) return;
        ProjectiveRational v = cf_evaluate_projective(parts);
        if (mpz_even_p(v.num.get_mpz_t())) return;  // two-component link
        TwoBridgeFraction f = canonical(v.num, v.den);
        if (!f.is_unknot()) out.insert(f);
    };
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int a = 1; a <= remaining; ++a) {
            parts.emplace_back(a);
            self(self, remaining - a);
            parts.pop_back();
        }
    };
    rec(rec, total - lead);
}

}  // namespace

std::map<int, std::set<TwoBridgeFraction>> enumerate_two_bridge(int cr_max, int workers) {
    std::vector<std::pair<int, int>> jobs;  // (crossing, leading term)
    for (int cr = 3; cr <= cr_max; ++cr)
        for (int lead = 1; lead <= cr; ++lead) jobs.emplace_back(cr, lead);
    std::vector<std::set<TwoBridgeFraction>> partial(jobs.size());
    parallel_for(jobs.size(), workers, [&](std::size_t i) {
        compositions_with_lead(jobs[i].first, jobs[i].second, partial[i]);
    });
    std::map<int, std::set<TwoBridgeFraction>> out;
    for (int cr = 3; cr <= cr_max; ++cr) out[cr];
    for (std::size_t i = 0; i < jobs.size(); ++i) out[jobs[i].first].merge(partial[i]);
    return out;
}

std::string two_bridge_csv(const std::map<int, std::set<TwoBridgeFraction>>& table) {
    std::ostringstream os;
    os << "crossing,p,q,delta_mod2,lk\n";
    for (const auto& [cr, set] : table) {
        for (const auto& f : set) {
            auto a = even_cf_expand(f.p, f.q);
            LaurentPolyInt delta = alexander_from_conway(conway_polynomial(a));
            os << cr << ',' << f.p.get_str() << ',' << f.q.get_str() << ','
               << delta.mod2_normalized().to_string() << ',' << linking_number_with_axis(a).get_str() << '\n';
        }
    }
    return os.str();
}

}  // namespace knotforge
