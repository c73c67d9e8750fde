#pragma once

#include "knotforge/exactmath.hpp"
#include "knotforge/gf2poly.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace knotforge {

enum class CrossingKind { TypeI, TypeII };

std::string to_string(CrossingKind kind);

// Identifies a double point of the projection independently of the phases.
struct CrossingKey {
    CrossingKind kind = CrossingKind::TypeI;
    int k = 0;
    int j = 0;
    auto operator<=>(const CrossingKey&) const = default;
};

// A curve parameter value; exact when the phases are rational multiples of pi.
struct CurveTime {
    std::optional<PiRational> exact;
    long double radians = 0.0L;
};

bool time_less(const CurveTime& a, const CurveTime& b);

struct CrossingRecord {
    CrossingKind kind = CrossingKind::TypeI;
    int k = 0;
    int j = 0;
    CurveTime t1, t2;
    bool over_first = false;  // strand at t1 passes over
    int sign = 0;             // 0 until heights are resolved

    // sgn of the cross product of the planar tangents at t1 and t2.
    int tangent_orientation = 0;
    // x = cos(x_angle); the folded angle orders crossings left to right.
    long double x_fold = 0.0L;
    std::optional<BigRational> x_fold_exact;

    CrossingKey key() const { return {kind, k, j}; }
};

struct Passage {
    int crossing = 0;  // index into PlanarDiagram::crossings
    bool over = false;
};

struct PlanarDiagram {
    int n_x = 0;
    int n_y = 0;
    std::vector<CrossingRecord> crossings;
    std::vector<Passage> passages;  // along t in [0, 2pi)

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Orders the passages of resolved crossings by curve time.
PlanarDiagram build_diagram(int n_x, int n_y, std::vector<CrossingRecord> crossings);

// Crossings whose over/under differs between two diagrams of the same projection.
std::set<CrossingKey> differing_crossings(const PlanarDiagram& a, const PlanarDiagram& b);

struct DTCode {
    std::vector<long> labels;  // signed even labels, paired with 1, 3, 5, ...
    std::string to_string() const;  // space separated, Knotscape style
    std::string hash_hex() const;   // FNV-1a 64 of to_string()
};

DTCode dt_code(const PlanarDiagram& diagram);

int writhe(const PlanarDiagram& diagram);

// Alexander polynomial mod 2, divided by its lowest power of t.
Gf2Poly alexander_mod2_from_diagram(const PlanarDiagram& diagram);

}  // namespace knotforge
