#include "knotforge/diagram.hpp"

#include "knotforge/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>

namespace knotforge {

std::string to_string(CrossingKind kind) {
    return kind == CrossingKind::TypeI ? "I" : "II";
}

bool time_less(const CurveTime& a, const CurveTime& b) {
    if (a.exact && b.exact) return *a.exact < *b.exact;
    return a.radians < b.radians;
}

PlanarDiagram build_diagram(int n_x, int n_y, std::vector<CrossingRecord> crossings) {
    struct Event {
        const CurveTime* time;
        int crossing;
        bool first;
    };
    std::vector<Event> events;
    events.reserve(crossings.size() * 2);
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        events.push_back({&crossings[c].t1, static_cast<int>(c), true});
        events.push_back({&crossings[c].t2, static_cast<int>(c), false});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return time_less(*a.time, *b.time); });

    PlanarDiagram d;
    d.n_x = n_x;
    d.n_y = n_y;
    d.passages.reserve(events.size());
    for (const Event& e : events) {
        bool over = crossings[e.crossing].over_first == e.first;
        d.passages.push_back({e.crossing, over});
    }
    d.crossings = std::move(crossings);
    return d;
}

std::set<CrossingKey> differing_crossings(const PlanarDiagram& a, const PlanarDiagram& b) {
    std::map<CrossingKey, bool> over;
    for (const auto& c : a.crossings) over[c.key()] = c.over_first;
    std::set<CrossingKey> out;
    for (const auto& c : b.crossings) {
        auto it = over.find(c.key());
        if (it == over.end()) throw MalformedDiagram("diagrams have different projections");
        if (it->second != c.over_first) out.insert(c.key());
    }
    if (a.crossings.size() != b.crossings.size()) throw MalformedDiagram("diagrams have different projections");
    return out;
}

std::string DTCode::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(labels[i]);
    }
    return out;
}

std::string DTCode::hash_hex() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : to_string()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// For each crossing, the two passage positions, in increasing order.
std::vector<std::pair<int, int>> passage_positions(const PlanarDiagram& d) {
    std::vector<std::pair<int, int>> pos(d.crossings.size(), {-1, -1});
    for (std::size_t i = 0; i < d.passages.size(); ++i) {
        int c = d.passages[i].crossing;
        if (c < 0 || c >= d.crossing_count()) throw MalformedDiagram("passage refers to unknown crossing");
        auto& slot = pos[c];
        if (slot.first < 0) slot.first = static_cast<int>(i);
        else if (slot.second < 0) slot.second = static_cast<int>(i);
        else throw MalformedDiagram("crossing visited more than twice");
    }
    for (std::size_t c = 0; c < pos.size(); ++c)
        if (pos[c].second < 0) throw MalformedDiagram("crossing " + std::to_string(c) + " visited fewer than twice");
    return pos;
}

}  // namespace

DTCode dt_code(const PlanarDiagram& d) {
    auto pos = passage_positions(d);
    const std::size_t n = d.crossings.size();
    DTCode code;
    code.labels.assign(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        long a = pos[c].first + 1;
        long b = pos[c].second + 1;
        if ((a + b) % 2 == 0) throw MalformedDiagram("passage labels of a crossing have equal parity");
        long odd = a % 2 ? a : b;
        long even = a % 2 ? b : a;
        bool odd_over = d.passages[static_cast<std::size_t>(odd - 1)].over;
        code.labels[static_cast<std::size_t>(odd / 2)] = odd_over ? even : -even;
    }
    return code;
}

int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

Gf2Poly alexander_mod2_from_diagram(const PlanarDiagram& d) {
    auto pos = passage_positions(d);
    const int n = d.crossing_count();
    if (n <= 1) return Gf2Poly::one();

    // Arc i starts right after the i-th under passage.
    std::vector<int> arc_of(d.passages.size());
    std::vector<int> under_index(d.passages.size(), -1);
    int unders = 0;
    for (std::size_t i = 0; i < d.passages.size(); ++i)
        if (!d.passages[i].over) under_index[i] = unders++;
    if (unders != n) throw MalformedDiagram("each crossing needs exactly one under passage");
    int current = n - 1;  // passages before the first under belong to the last arc
    for (std::size_t i = 0; i < d.passages.size(); ++i) {
        arc_of[i] = current;
        if (!d.passages[i].over) current = under_index[i];
    }

    const Gf2Poly one = Gf2Poly::one();
    const Gf2Poly t = Gf2Poly::monomial(1);
    std::vector<std::vector<Gf2Poly>> m(n, std::vector<Gf2Poly>(n));
    for (int c = 0; c < n; ++c) {
        int p_over = d.passages[pos[c].first].over ? pos[c].first : pos[c].second;
        int p_under = p_over == pos[c].first ? pos[c].second : pos[c].first;
        int over_arc = arc_of[p_over];
        int in_arc = arc_of[p_under];
        int out_arc = under_index[p_under];
        bool positive = d.crossings[c].sign > 0;
        m[c][over_arc] = m[c][over_arc] + one + t;
        m[c][in_arc] = m[c][in_arc] + (positive ? t : one);
        m[c][out_arc] = m[c][out_arc] + (positive ? one : t);
    }
    m.pop_back();
    for (auto& row : m) row.pop_back();
    Gf2Poly det = gf2_determinant(std::move(m));
    if (det.is_zero()) return det;
    return det.shifted_down(det.lowest_degree());
}

}  // namespace knotforge
