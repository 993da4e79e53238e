#include "palf/mcg.hpp"

#include "palf/error.hpp"

namespace palf {

namespace {

const std::array<std::string, 2> kNames{"A", "B"};

// t_c for c = 1/1, fixed by the lantern relation t_b t_a t_c = t_d1 t_d2 t_d3 t_d4.
const MappingClass& lantern_twist() {
    static const MappingClass t_c{{1, 1, 1, 1}, FreeWord({{0, -1}, {1, -1}})};
    return t_c;
}

BigInt l1_norm(const Slope& s) { return abs(s.p) + abs(s.q); }

Slope apply_letter(Letter l, const Slope& s) {
    const int k = l.exp > 0 ? -2 : 2;
    if (l.gen == MappingClass::kA) return canonical_slope(s.p + k * s.q, s.q);
    return canonical_slope(s.p, s.q - k * s.p);
}

// Continued-fraction descent in the level-2 Farey graph: returns w with
// w(base_slope(cls)) = s.
FreeWord descend(Slope s, ParityClass cls) {
    static const Letter kOrder[4] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}};
    const Slope target = base_slope(cls);
    std::vector<Letter> inverse_path; // L1^-1 ... Lk^-1
    while (s != target) {
        const BigInt norm = l1_norm(s);
        bool progressed = false;
        for (Letter l : kOrder) {
            Slope next = apply_letter(l, s);
            if (l1_norm(next) < norm) {
                inverse_path.push_back(l.inverse());
                s = next;
                progressed = true;
                break;
            }
        }
        if (progressed) continue;
        if (cls == ParityClass::C && s == Slope{-1, 1}) {
            inverse_path.push_back({MappingClass::kA, 1}); // -1/1 = A(1/1)
            break;
        }
        throw Error(ErrorKind::InvalidArgument, "slope descent stalled");
    }
    return FreeWord(inverse_path);
}

} // namespace

std::string word_to_string(const FreeWord& w) { return w.to_string(kNames); }

std::string MappingClass::to_string() const {
    std::string out = "delta=(";
    for (size_t i = 0; i < 4; ++i) {
        if (i) out += ",";
        out += std::to_string(boundary_[i]);
    }
    return out + ") word=" + word_to_string(word_);
}

MappingClass multiply(const MappingClass& g, const MappingClass& h) {
    BoundaryExponents e{};
    for (size_t i = 0; i < 4; ++i) e[i] = checked_add(g.boundary_exp()[i], h.boundary_exp()[i]);
    return {e, g.word() * h.word()};
}

MappingClass invert(const MappingClass& g) {
    BoundaryExponents e{};
    for (size_t i = 0; i < 4; ++i) e[i] = checked_neg(g.boundary_exp()[i]);
    return {e, g.word().inverse()};
}

MappingClass power(const MappingClass& g, int64_t k) {
    BoundaryExponents e{};
    for (size_t i = 0; i < 4; ++i) e[i] = checked_mul(g.boundary_exp()[i], k);
    return {e, g.word().pow(k)};
}

ProjMatrix sigma(const MappingClass& g) { return rho(g.word(), 2); }

Slope act_on_slope(const FreeWord& w, Slope s) {
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) s = apply_letter(*it, s);
    return s;
}

Curve act_on_curve(const MappingClass& g, const Curve& c) {
    if (c.is_boundary()) return c;
    if (!c.is_slope()) throw Error(ErrorKind::Unsupported, "mapping class action on hole-set curve " + c.to_string());
    return Curve::slope(act_on_slope(g.word(), c.slope_value()));
}

MappingClass twist_conjugator_word(const Curve& c, const Curve& base) {
    if (!c.is_slope() || !base.is_slope())
        throw Error(ErrorKind::Unsupported, "conjugator words are defined for slope curves");
    const auto cls = *parity_class(c);
    if (cls != *parity_class(base))
        throw Error(ErrorKind::ClassMismatch, c.to_string() + " and " + base.to_string() + " lie in different classes");
    FreeWord to_c = descend(c.slope_value(), cls);
    FreeWord to_base = descend(base.slope_value(), cls);
    return MappingClass::from_word(to_c * to_base.inverse());
}

MappingClass dehn_twist(const Curve& c) {
    if (c.surface() != kFourHoled)
        throw Error(ErrorKind::Unsupported, "Dehn twists are modelled on the 4-holed sphere only");
    if (c.is_boundary()) {
        BoundaryExponents e{};
        e[static_cast<size_t>(c.boundary_index() - 1)] = 1;
        return {e, {}};
    }
    if (!c.is_slope()) throw Error(ErrorKind::Unsupported, "Dehn twist along hole-set curve " + c.to_string());
    const auto cls = *parity_class(c);
    const MappingClass w = MappingClass::from_word(descend(c.slope_value(), cls));
    MappingClass base;
    switch (cls) {
    case ParityClass::A: base = MappingClass::a(); break;
    case ParityClass::B: base = MappingClass::b(); break;
    case ParityClass::C: base = lantern_twist(); break;
    }
    return w * base * invert(w);
}

AbelianClass AbelianClass::operator+(const AbelianClass& o) const {
    AbelianClass r;
    for (size_t i = 0; i < 4; ++i) r.delta_part[i] = checked_add(delta_part[i], o.delta_part[i]);
    for (size_t i = 0; i < 2; ++i) r.ab_part[i] = checked_add(ab_part[i], o.ab_part[i]);
    return r;
}

AbelianClass AbelianClass::operator-(const AbelianClass& o) const {
    AbelianClass r;
    for (size_t i = 0; i < 4; ++i) r.delta_part[i] = checked_sub(delta_part[i], o.delta_part[i]);
    for (size_t i = 0; i < 2; ++i) r.ab_part[i] = checked_sub(ab_part[i], o.ab_part[i]);
    return r;
}

std::string AbelianClass::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string(delta_part[i]);
    return out + ";" + std::to_string(ab_part[0]) + "," + std::to_string(ab_part[1]) + ")";
}

AbelianClass abelianize(const MappingClass& g) {
    return {g.boundary_exp(), {g.word().exponent_sum(MappingClass::kA), g.word().exponent_sum(MappingClass::kB)}};
}

bool is_central(const MappingClass& g) { return g.word().empty(); }

std::optional<MappingClass> conjugator(const MappingClass& g, const MappingClass& h) {
    if (g.boundary_exp() != h.boundary_exp()) return std::nullopt;
    auto psi = solve_conjugacy(g.word(), h.word());
    if (!psi) return std::nullopt;
    return MappingClass::from_word(*psi);
}

std::optional<Curve> twist_curve(const MappingClass& g) {
    const auto& e = g.boundary_exp();
    if (g.word().empty()) {
        int index = 0;
        for (size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (e[i] != 1 || index != 0) return std::nullopt;
            index = static_cast<int>(i) + 1;
        }
        if (index == 0) return std::nullopt;
        return Curve::boundary(index);
    }
    for (ParityClass cls : {ParityClass::A, ParityClass::B, ParityClass::C}) {
        const MappingClass base = dehn_twist(Curve::slope(base_slope(cls)));
        auto psi = conjugator(base, g);
        if (!psi) continue;
        return act_on_curve(*psi, Curve::slope(base_slope(cls)));
    }
    return std::nullopt;
}

} // namespace palf
