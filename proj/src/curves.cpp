#include "palf/curves.hpp"

#include "palf/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace palf {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::BadZ: return "BadZ";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidStep: return "InvalidStep";
    case ErrorKind::CurveUnsupported: return "CurveUnsupported";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::EmptyTuple: return "EmptyTuple";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Surface::Surface(int n) : holes(n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "a planar page needs at least 2 holes");
}

int64_t to_int64(const BigInt& v, const std::string& what) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw Error(ErrorKind::Overflow, what + " exceeds 64 bits");
    return static_cast<int64_t>(v);
}

BigInt Slope::height() const { return std::max(abs(p), abs(q)); }

Slope canonical_slope(BigInt p, BigInt q) {
    if (p == 0 && q == 0) throw Error(ErrorKind::ZeroVector, "slope (0,0)");
    if (q == 0) return {1, 0};
    const BigInt g = gcd(abs(p), abs(q));
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

const char* to_string(ParityClass cls) {
    switch (cls) {
    case ParityClass::A: return "a";
    case ParityClass::B: return "b";
    case ParityClass::C: return "c";
    }
    return "?";
}

Slope base_slope(ParityClass cls) {
    switch (cls) {
    case ParityClass::A: return {1, 0};
    case ParityClass::B: return {0, 1};
    case ParityClass::C: return {1, 1};
    }
    return {1, 0};
}

Curve Curve::boundary(int index, Surface surface) {
    if (index < 1 || index > surface.holes)
        throw Error(ErrorKind::InvalidArgument,
                    "boundary index " + std::to_string(index) + " outside 1.." + std::to_string(surface.holes));
    return Curve(surface, BoundaryCurve{index});
}

Curve Curve::slope(const BigInt& p, const BigInt& q) {
    if (p == 0 && q == 0) throw Error(ErrorKind::ZeroVector, "slope (0,0)");
    if (gcd(abs(p), abs(q)) != 1) throw Error(ErrorKind::NonCoprime, p.str() + "/" + q.str());
    return Curve(kFourHoled, SlopeCurve{canonical_slope(p, q)});
}

Curve Curve::slope(Slope s) { return slope(s.p, s.q); }

Curve Curve::hole_set(std::vector<int> enclosed, Surface surface) {
    const int n = surface.holes;
    std::sort(enclosed.begin(), enclosed.end());
    enclosed.erase(std::unique(enclosed.begin(), enclosed.end()), enclosed.end());
    if (enclosed.empty()) throw Error(ErrorKind::InvalidArgument, "empty hole set");
    if (enclosed.front() < 1 || enclosed.back() > n)
        throw Error(ErrorKind::InvalidArgument, "hole index outside 1.." + std::to_string(n));
    if (enclosed.back() == n) {
        // Outer hole enclosed: the curve also bounds the complementary set.
        std::vector<int> complement;
        for (int i = 1; i < n; ++i)
            if (!std::binary_search(enclosed.begin(), enclosed.end(), i)) complement.push_back(i);
        enclosed = std::move(complement);
    }
    if (enclosed.empty())
        throw Error(ErrorKind::InvalidArgument, "hole set encloses every hole (inessential curve)");
    return Curve(surface, HoleSetCurve{std::move(enclosed)});
}

int Curve::boundary_index() const {
    if (auto* b = std::get_if<BoundaryCurve>(&kind_)) return b->index;
    throw Error(ErrorKind::InvalidArgument, "not a boundary curve: " + to_string());
}

const Slope& Curve::slope_value() const {
    if (auto* s = std::get_if<SlopeCurve>(&kind_)) return s->slope;
    throw Error(ErrorKind::InvalidArgument, "not a slope curve: " + to_string());
}

const std::vector<int>& Curve::enclosed() const {
    if (auto* h = std::get_if<HoleSetCurve>(&kind_)) return h->enclosed;
    throw Error(ErrorKind::InvalidArgument, "not a hole-set curve: " + to_string());
}

std::string Curve::to_string() const {
    if (auto* b = std::get_if<BoundaryCurve>(&kind_)) return "d" + std::to_string(b->index);
    if (auto* s = std::get_if<SlopeCurve>(&kind_))
        return s->slope.p.str() + "/" + s->slope.q.str();
    const auto& set = std::get<HoleSetCurve>(kind_).enclosed;
    std::string out = "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

std::vector<int64_t> HoleClass::column() const {
    std::vector<int64_t> col(static_cast<size_t>(surface.holes - 1), 0);
    for (int i : enclosed) col[static_cast<size_t>(i - 1)] = 1;
    return col;
}

int64_t intersection_number(const Curve& c1, const Curve& c2) {
    if (c1.surface() != c2.surface()) throw Error(ErrorKind::InvalidArgument, "curves on different surfaces");
    if (c1.is_boundary() || c2.is_boundary()) return 0;
    if (!c1.is_slope() || !c2.is_slope())
        throw Error(ErrorKind::Unsupported, "intersection numbers of hole-set curves");
    const Slope& a = c1.slope_value();
    const Slope& b = c2.slope_value();
    return to_int64(2 * abs(a.p * b.q - a.q * b.p), "intersection number");
}

std::optional<ParityClass> parity_class(const Curve& c) {
    if (c.is_boundary()) return std::nullopt;
    if (!c.is_slope()) throw Error(ErrorKind::Unsupported, "parity class of hole-set curve " + c.to_string());
    const Slope& s = c.slope_value();
    const bool p_odd = bit_test(abs(s.p), 0);
    const bool q_odd = bit_test(s.q, 0);
    if (p_odd && q_odd) return ParityClass::C;
    return p_odd ? ParityClass::A : ParityClass::B;
}

HoleClass hole_class(const Curve& c) {
    const Surface& surface = c.surface();
    if (auto* b = std::get_if<BoundaryCurve>(&c.kind())) {
        if (b->index < surface.holes) return {surface, {b->index}};
        std::vector<int> all;
        for (int i = 1; i < surface.holes; ++i) all.push_back(i);
        return {surface, all};
    }
    if (c.is_hole_set()) return {surface, c.enclosed()};
    switch (*parity_class(c)) {
    case ParityClass::A: return {surface, {1, 2}};
    case ParityClass::B: return {surface, {2, 3}};
    case ParityClass::C: return {surface, {1, 3}};
    }
    return {surface, {}};
}

} // namespace palf
