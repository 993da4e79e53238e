#pragma once

#include "palf/bigint.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace palf {

/// A planar surface: the sphere with `holes` boundary components.
struct Surface {
    int holes = 4;

    Surface() = default;
    explicit Surface(int n);

    auto operator<=>(const Surface&) const = default;
};

inline const Surface kFourHoled{4};

/// Primitive integer vector (p, q) with q >= 0, and p = 1 when q = 0.
struct Slope {
    BigInt p = 1;
    BigInt q = 0;

    std::strong_ordering operator<=>(const Slope&) const = default;
    bool operator==(const Slope&) const = default;

    BigInt height() const;
};

/// Reduces (p, q) to its canonical primitive representative. Throws ZeroVector on (0, 0).
Slope canonical_slope(BigInt p, BigInt q);

/// The three orbits of slopes under the level-2 action, named after their base
/// curves a = 1/0, b = 0/1, c = 1/1.
enum class ParityClass { A, B, C };

const char* to_string(ParityClass cls);
Slope base_slope(ParityClass cls);

struct BoundaryCurve {
    int index; // 1-based
    auto operator<=>(const BoundaryCurve&) const = default;
};

struct SlopeCurve {
    Slope slope;
    auto operator<=>(const SlopeCurve&) const = default;
};

/// Homology-only curve on a general planar page, given by the holes it encloses.
struct HoleSetCurve {
    std::vector<int> enclosed; // sorted subset of 1..holes-1
    auto operator<=>(const HoleSetCurve&) const = default;
};

/// Isotopy class of an essential simple closed curve on a planar surface.
class Curve {
public:
    using Kind = std::variant<BoundaryCurve, SlopeCurve, HoleSetCurve>;

    static Curve boundary(int index, Surface surface = kFourHoled);
    /// Slope curve on the 4-holed sphere. (p, q) must be primitive; the sign is normalized.
    static Curve slope(const BigInt& p, const BigInt& q);
    static Curve slope(Slope s);
    /// Hole-set curve. A set containing the outer hole is replaced by its complement.
    static Curve hole_set(std::vector<int> enclosed, Surface surface);

    const Surface& surface() const { return surface_; }
    const Kind& kind() const { return kind_; }

    bool is_boundary() const { return std::holds_alternative<BoundaryCurve>(kind_); }
    bool is_slope() const { return std::holds_alternative<SlopeCurve>(kind_); }
    bool is_hole_set() const { return std::holds_alternative<HoleSetCurve>(kind_); }

    int boundary_index() const;
    const Slope& slope_value() const;
    const std::vector<int>& enclosed() const;

    std::string to_string() const;

    auto operator<=>(const Curve&) const = default;

private:
    Curve(Surface surface, Kind kind) : surface_(surface), kind_(std::move(kind)) {}

    Surface surface_;
    Kind kind_;
};

/// Sign-ambiguous class in H_1 of the page, in the basis d_1..d_{n-1}.
struct HoleClass {
    Surface surface;
    std::vector<int> enclosed;

    /// Indicator column of length holes - 1.
    std::vector<int64_t> column() const;

    auto operator<=>(const HoleClass&) const = default;
};

/// Geometric intersection number. Slope pairs require the 4-holed sphere.
int64_t intersection_number(const Curve& c1, const Curve& c2);

/// Parity class of a slope curve; nullopt for boundary curves.
std::optional<ParityClass> parity_class(const Curve& c);

HoleClass hole_class(const Curve& c);

} // namespace palf
