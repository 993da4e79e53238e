#pragma once

#include "palf/factor.hpp"
#include "palf/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace palf {

/// Handle complex of a planar Lefschetz fibration: n one-handles (holes - 1),
/// m two-handles (one per vanishing cycle), and the boundary map A (n x m).
struct ChainPresentation {
    Surface page;
    size_t n = 0;
    size_t m = 0;
    IntMatrix a;
};

/// Intersection form [[0, A], [A^T, -I_m]] of the manifold obtained by surgering
/// the one-handles.
struct BlockForm {
    IntMatrix q;
};

/// Throws CurveUnsupported if a cycle does not live on the given page.
ChainPresentation chain_from_tuple(const TwistTuple& t, int page_holes);

/// H_1 of the total space: coker A.
AbelianGroup h1_total_space(const ChainPresentation& c);

/// 1 - n + m.
int64_t euler_char(const ChainPresentation& c);

BlockForm block_form(const ChainPresentation& c);

/// H_1 of the boundary 3-manifold: coker Q.
AbelianGroup boundary_h1(const ChainPresentation& c);

struct HomologySphereEvidence {
    bool is_homology_sphere = false;
    bool handle_counts_agree = false; // m == n
    std::optional<int64_t> det_a;     // when square
    AbelianGroup h1_total;
    AbelianGroup h1_boundary;
    /// h1_boundary is trivial exactly when is_homology_sphere holds.
    bool consistent = false;
};

HomologySphereEvidence is_homology_sphere(const TwistTuple& t, int page_holes);

/// One 1-handle/2-handle cancellation found on the boundary matrix.
struct Cancellation {
    size_t one_handle; // 1-based row of the original A
    size_t two_handle; // 1-based column (tuple slot)
    size_t slides;     // 1-handle slides used to clear the column
};

struct FillingReport {
    TwistTuple tuple;
    ChainPresentation chain;
    int64_t det_a = 0;
    std::vector<int64_t> smith_a;
    std::vector<int64_t> smith_q;
    AbelianGroup h1_total;
    AbelianGroup h1_boundary;
    int64_t euler = 0;
    int boundary_cycles = 0; // 3, 2 or 1 for the three cases of the argument
    std::vector<Cancellation> cancellations;
    int remaining_one_handles = 0;
    int remaining_two_handles = 0;
    std::string conclusion;
};

/// Filling verdict for a length-3 factorization on the 4-holed sphere whose
/// boundary is an integral homology sphere. Throws PreconditionFailed naming the
/// failing check.
FillingReport filling_verdict(const TwistTuple& t);

} // namespace palf
