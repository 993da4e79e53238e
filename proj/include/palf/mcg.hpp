#pragma once

#include "palf/curves.hpp"
#include "palf/psl2.hpp"
#include "palf/word.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace palf {

// Mod(S_{0,4}) = Z^4 x F_2: the four boundary twists are central and the
// twists A = t_a (slope 1/0), B = t_b (slope 0/1) generate a free factor.

using BoundaryExponents = std::array<int64_t, 4>;

class MappingClass {
public:
    static constexpr int kA = 0;
    static constexpr int kB = 1;

    MappingClass() = default;
    MappingClass(BoundaryExponents boundary, FreeWord word) : boundary_(boundary), word_(std::move(word)) {}

    static MappingClass identity() { return {}; }
    static MappingClass a(int64_t power = 1) { return {{}, FreeWord::generator(kA, power)}; }
    static MappingClass b(int64_t power = 1) { return {{}, FreeWord::generator(kB, power)}; }
    static MappingClass from_word(FreeWord w) { return {{}, std::move(w)}; }

    const BoundaryExponents& boundary_exp() const { return boundary_; }
    const FreeWord& word() const { return word_; }

    /// "delta=(1,0,0,0) word=A·B"
    std::string to_string() const;

    auto operator<=>(const MappingClass&) const = default;

private:
    BoundaryExponents boundary_{};
    FreeWord word_;
};

/// g∘h: h acts first.
MappingClass multiply(const MappingClass& g, const MappingClass& h);
inline MappingClass operator*(const MappingClass& g, const MappingClass& h) { return multiply(g, h); }
MappingClass invert(const MappingClass& g);
MappingClass power(const MappingClass& g, int64_t k);

std::string word_to_string(const FreeWord& w);

/// Image in PSL(2,Z): A -> [[1,-2],[0,1]], B -> [[1,0],[2,1]], boundary twists -> 1.
ProjMatrix sigma(const MappingClass& g);

/// Right-handed Dehn twist along a curve of the 4-holed sphere.
MappingClass dehn_twist(const Curve& c);

Curve act_on_curve(const MappingClass& g, const Curve& c);
Slope act_on_slope(const FreeWord& w, Slope s);

/// w with act(w, base) = c. Throws ClassMismatch when the parity classes differ.
MappingClass twist_conjugator_word(const Curve& c, const Curve& base);

struct AbelianClass {
    BoundaryExponents delta_part{};
    std::array<int64_t, 2> ab_part{};

    AbelianClass operator+(const AbelianClass& o) const;
    AbelianClass operator-(const AbelianClass& o) const;
    std::string to_string() const;
    auto operator<=>(const AbelianClass&) const = default;
};

AbelianClass abelianize(const MappingClass& g);

bool is_central(const MappingClass& g);

/// psi with h = psi g psi^-1 (psi taken in the free factor), or nullopt.
std::optional<MappingClass> conjugator(const MappingClass& g, const MappingClass& h);

/// Whether g is the twist along some curve; returns that curve.
std::optional<Curve> twist_curve(const MappingClass& g);

} // namespace palf
