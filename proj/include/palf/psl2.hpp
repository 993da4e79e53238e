#pragma once

#include "palf/word.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace palf {

/// Element of PSL(2,Z). Stored with the first nonzero entry (reading order
/// a, b, c, d) positive, so equality is entrywise.
class ProjMatrix {
public:
    ProjMatrix() = default;
    /// Throws InvalidArgument unless ad - bc = 1.
    ProjMatrix(int64_t a, int64_t b, int64_t c, int64_t d);

    static ProjMatrix identity() { return {}; }

    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    int64_t c() const { return c_; }
    int64_t d() const { return d_; }

    ProjMatrix inverse() const;
    int64_t max_abs_entry() const;
    bool is_identity() const { return *this == ProjMatrix{}; }

    /// Row-major "[[a,b],[c,d]]".
    std::string to_string() const;

    auto operator<=>(const ProjMatrix&) const = default;

private:
    int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

ProjMatrix proj_mul(const ProjMatrix& m, const ProjMatrix& n);
inline ProjMatrix operator*(const ProjMatrix& m, const ProjMatrix& n) { return proj_mul(m, n); }

/// Generator 0 (gamma) -> [[1,-z],[0,1]], generator 1 (beta) -> [[1,0],[z,1]].
/// Throws BadZ for z < 2.
ProjMatrix rho(const FreeWord& word, int64_t z);

ProjMatrix rho_generator(int gen, int64_t z);

int64_t abs_trace(const ProjMatrix& m);

enum class TraceVerdict { AcceptPlus, AcceptMinus, Reject };

/// For a conjugator C = [[a,b],[c,d]] the product rho(C gamma C^-1 beta) has
/// trace 2 - a^2 z^2; it matches |2 - z^2| exactly when a = +-1.
TraceVerdict conjugate_trace_test(const ProjMatrix& conjugator, int64_t z);

/// Word w with rho(w, z) = m, found by stripping one generator letter at a time
/// while the maximum absolute entry strictly decreases. Throws NotMember if the
/// descent stalls away from the identity.
FreeWord sanov_decompose(const ProjMatrix& m, int64_t z);

/// Image of a slope twist: [[1+2pq, -2p^2],[2q^2, 1-2pq]].
ProjMatrix transvection_matrix(int64_t p, int64_t q);

struct IntVec2 {
    int64_t x;
    int64_t y;
};

IntVec2 apply(const ProjMatrix& m, IntVec2 v);

} // namespace palf
