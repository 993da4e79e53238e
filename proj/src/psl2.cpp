#include "palf/psl2.hpp"

#include "palf/error.hpp"

#include <algorithm>

namespace palf {

ProjMatrix::ProjMatrix(int64_t a, int64_t b, int64_t c, int64_t d) : a_(a), b_(b), c_(c), d_(d) {
    if (checked_sub(checked_mul(a, d), checked_mul(b, c)) != 1)
        throw Error(ErrorKind::InvalidArgument, "determinant is not 1: " + to_string());
    const int64_t lead = a != 0 ? a : (b != 0 ? b : c);
    if (lead < 0) {
        a_ = checked_neg(a);
        b_ = checked_neg(b);
        c_ = checked_neg(c);
        d_ = checked_neg(d);
    }
}

ProjMatrix ProjMatrix::inverse() const { return {d_, checked_neg(b_), checked_neg(c_), a_}; }

int64_t ProjMatrix::max_abs_entry() const {
    return std::max({checked_abs(a_), checked_abs(b_), checked_abs(c_), checked_abs(d_)});
}

std::string ProjMatrix::to_string() const {
    return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
           std::to_string(d_) + "]]";
}

ProjMatrix proj_mul(const ProjMatrix& m, const ProjMatrix& n) {
    auto dot = [](int64_t x1, int64_t y1, int64_t x2, int64_t y2) {
        return checked_add(checked_mul(x1, y1), checked_mul(x2, y2));
    };
    return {dot(m.a(), n.a(), m.b(), n.c()), dot(m.a(), n.b(), m.b(), n.d()),
            dot(m.c(), n.a(), m.d(), n.c()), dot(m.c(), n.b(), m.d(), n.d())};
}

ProjMatrix rho_generator(int gen, int64_t z) {
    if (z < 2) throw Error(ErrorKind::BadZ, "z = " + std::to_string(z) + " (need z >= 2)");
    return gen == 0 ? ProjMatrix{1, checked_neg(z), 0, 1} : ProjMatrix{1, 0, z, 1};
}

ProjMatrix rho(const FreeWord& word, int64_t z) {
    const ProjMatrix gens[2] = {rho_generator(0, z), rho_generator(1, z)};
    const ProjMatrix invs[2] = {gens[0].inverse(), gens[1].inverse()};
    ProjMatrix out;
    for (Letter l : word.letters()) out = out * (l.exp > 0 ? gens[l.gen] : invs[l.gen]);
    return out;
}

int64_t abs_trace(const ProjMatrix& m) { return checked_abs(checked_add(m.a(), m.d())); }

TraceVerdict conjugate_trace_test(const ProjMatrix& conjugator, int64_t z) {
    const int64_t z2 = checked_mul(z, z);
    const int64_t lhs = checked_abs(checked_sub(2, checked_mul(checked_mul(conjugator.a(), conjugator.a()), z2)));
    const int64_t rhs = checked_abs(checked_sub(2, z2));
    if (lhs != rhs) return TraceVerdict::Reject;
    return conjugator.a() > 0 ? TraceVerdict::AcceptPlus : TraceVerdict::AcceptMinus;
}

FreeWord sanov_decompose(const ProjMatrix& m, int64_t z) {
    static const Letter kOrder[4] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}};
    const ProjMatrix gens[2] = {rho_generator(0, z), rho_generator(1, z)};
    std::vector<Letter> stripped;
    ProjMatrix rest = m;
    while (!rest.is_identity()) {
        const int64_t norm = rest.max_abs_entry();
        bool progressed = false;
        for (Letter l : kOrder) {
            // rest = g * rest'  =>  rest' = g^-1 * rest
            const ProjMatrix& g = gens[l.gen];
            ProjMatrix candidate = (l.exp > 0 ? g.inverse() : g) * rest;
            if (candidate.max_abs_entry() < norm) {
                stripped.push_back(l);
                rest = candidate;
                progressed = true;
                break;
            }
        }
        if (!progressed)
            throw Error(ErrorKind::NotMember,
                        m.to_string() + " is not in the z=" + std::to_string(z) + " subgroup (stalled at " +
                            rest.to_string() + ")");
    }
    return FreeWord(stripped);
}

ProjMatrix transvection_matrix(int64_t p, int64_t q) {
    const int64_t pq2 = checked_mul(2, checked_mul(p, q));
    return {checked_add(1, pq2), checked_neg(checked_mul(2, checked_mul(p, p))),
            checked_mul(2, checked_mul(q, q)), checked_sub(1, pq2)};
}

IntVec2 apply(const ProjMatrix& m, IntVec2 v) {
    return {checked_add(checked_mul(m.a(), v.x), checked_mul(m.b(), v.y)),
            checked_add(checked_mul(m.c(), v.x), checked_mul(m.d(), v.y))};
}

} // namespace palf
