#pragma once

#include "palf/curves.hpp"
#include "palf/mcg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace palf {

/// Vanishing cycles (c_1, ..., c_m) of a positive factorization; the total
/// monodromy is t_{c_m} ∘ ... ∘ t_{c_1}.
class TwistTuple {
public:
    TwistTuple() = default;
    explicit TwistTuple(std::vector<Curve> cycles);

    const std::vector<Curve>& cycles() const { return cycles_; }
    size_t size() const { return cycles_.size(); }
    const Curve& operator[](size_t i) const { return cycles_[i]; }
    Surface surface() const { return cycles_.empty() ? kFourHoled : cycles_.front().surface(); }

    /// "d1, 0/1, 1/0"
    std::string to_string() const;

    auto operator<=>(const TwistTuple&) const = default;

private:
    std::vector<Curve> cycles_;
};

enum class Direction { Forward, Inverse };

struct HurwitzMove {
    size_t index; // 1-based; acts on slots index, index+1
    Direction direction;
    auto operator<=>(const HurwitzMove&) const = default;
};

struct Conjugate {
    MappingClass psi;
    auto operator<=>(const Conjugate&) const = default;
};

using MoveStep = std::variant<HurwitzMove, Conjugate>;

struct MoveCertificate {
    std::vector<MoveStep> steps;

    MoveCertificate inverse() const;
    MoveCertificate& append(const MoveCertificate& other);
    /// Merges adjacent conjugations and cancels adjacent inverse Hurwitz moves.
    MoveCertificate simplified() const;
    std::string to_string() const;
};

MappingClass total_monodromy(const TwistTuple& t);

/// Forward: (c_i, c_{i+1}) -> (c_{i+1}, t_{c_{i+1}}(c_i)).
/// Inverse: (c_i, c_{i+1}) -> (t_{c_i}^{-1}(c_{i+1}), c_i).
TwistTuple hurwitz_move(const TwistTuple& t, size_t index, Direction direction);

TwistTuple total_conjugate(const TwistTuple& t, const MappingClass& psi);

/// Sorted multiset of abelianized twists.
std::vector<AbelianClass> ab_invariant(const TwistTuple& t);

/// Throws InvalidStep when a Hurwitz index is out of range.
TwistTuple replay(const TwistTuple& t, const MoveCertificate& cert);

// ---------------------------------------------------------------------------

enum class Verdict { Equivalent, Distinguished, Unknown };

const char* to_string(Verdict v);

struct BfsBudget {
    size_t max_states = 200000;
};

struct EquivalenceResult {
    Verdict verdict = Verdict::Unknown;
    MoveCertificate certificate; // Equivalent only
    std::string reason;
    size_t states_explored = 0;
};

/// Bidirectional search over Hurwitz moves and conjugations. A semi-decision
/// procedure: Unknown when the budget runs out, never a wrong verdict.
EquivalenceResult equivalence_bfs(const TwistTuple& t1, const TwistTuple& t2, BfsBudget budget = {});

/// Conjugation-minimal representative: greedy descent on total slope size
/// under conjugation by A^{±1}, B^{±1}. Returns the representative and the
/// conjugating class used.
std::pair<TwistTuple, MappingClass> conjugation_canonical(const TwistTuple& t);

// ---------------------------------------------------------------------------

/// Word in t_gamma (generator 0) and t_beta (generator 1) equal to psi modulo
/// the centre, found through the pair representation with z = i(gamma, beta);
/// nullopt when psi lies outside <t_gamma, t_beta>.
std::optional<FreeWord> express_in_twist_pair(const Curve& gamma, const Curve& beta, const MappingClass& psi);

/// The pair representation of psi (conjugate of sigma(psi) sending t_gamma to
/// [[1,-z],[0,1]] and t_beta to [[1,0],[z,1]]); nullopt when not integral.
std::optional<ProjMatrix> pair_representation(const Curve& gamma, const Curve& beta, const MappingClass& psi);

struct ClassifyTrace {
    int shape_case = 0; // number of non-boundary cycles: 0, 1 or 2
    int64_t z = 0;
    bool conjugators_in_subgroup = false; // psi_1 and psi_2 both in <t_gamma, t_beta>
    bool quotient_in_subgroup = false;    // psi_1^-1 psi_2 in <t_gamma, t_beta>
    MappingClass psi1;
    MappingClass psi2;
    std::optional<ProjMatrix> quotient_image; // rho(psi_1^-1 psi_2)
    std::optional<TraceVerdict> trace_verdict;
    std::optional<FreeWord> quotient_word; // in (t_gamma, t_beta)
    int64_t beta_power = 0;                // n with psi_1^-1(gamma') = t_beta^n(gamma)
};

struct ClassifyResult {
    bool equivalent = false;
    MoveCertificate certificate;
    std::string reason; // NotApplicable reason
    // Set when no certificate exists: for one boundary cycle, equivalence of the
    // free pair is decided exactly by the beta-twist orbit test.
    bool proven_inequivalent = false;
    ClassifyTrace trace;
};

/// Certifying classifier for length-3 factorizations with equal total monodromy
/// on the 4-holed sphere.
ClassifyResult classify_length3(const TwistTuple& t1, const TwistTuple& t2);

// ---------------------------------------------------------------------------

struct EnumBounds {
    int64_t max_height = 3;   // H
    size_t max_conjugator = 2; // L
};

/// Curves considered by the enumeration: boundary curves, slopes of height <= H,
/// and slopes w(base) with |w| <= L.
std::vector<Curve> enumeration_candidates(EnumBounds bounds);

/// All tuples over enumeration_candidates(bounds) with total monodromy phi.
std::vector<TwistTuple> enumerate_factorizations(const MappingClass& phi, size_t length, EnumBounds bounds);

/// Tuples reachable by Hurwitz moves alone, breadth first, at most max_states.
std::vector<TwistTuple> hurwitz_orbit(const TwistTuple& t, size_t max_states);

} // namespace palf
