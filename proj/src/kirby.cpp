#include "palf/kirby.hpp"

#include "palf/error.hpp"

#include <algorithm>

namespace palf {

ChainPresentation chain_from_tuple(const TwistTuple& t, int page_holes) {
    const Surface page(page_holes);
    ChainPresentation c;
    c.page = page;
    c.n = static_cast<size_t>(page_holes - 1);
    c.m = t.size();
    c.a = IntMatrix(c.n, c.m);
    for (size_t j = 0; j < t.size(); ++j) {
        const Curve& curve = t[j];
        if (curve.surface() != page)
            throw Error(ErrorKind::CurveUnsupported, curve.to_string() + " does not lie on a page with " +
                                                         std::to_string(page_holes) + " holes");
        const auto col = hole_class(curve).column();
        for (size_t i = 0; i < c.n; ++i) c.a(i, j) = col[i];
    }
    return c;
}

AbelianGroup h1_total_space(const ChainPresentation& c) { return cokernel(c.a); }

int64_t euler_char(const ChainPresentation& c) {
    return 1 - static_cast<int64_t>(c.n) + static_cast<int64_t>(c.m);
}

BlockForm block_form(const ChainPresentation& c) {
    const size_t size = c.n + c.m;
    IntMatrix q(size, size);
    for (size_t i = 0; i < c.n; ++i)
        for (size_t j = 0; j < c.m; ++j) {
            q(i, c.n + j) = c.a(i, j);
            q(c.n + j, i) = c.a(i, j);
        }
    // Planar pages have zero intersection pairing, so distinct attaching circles
    // are unlinked; each carries framing -1.
    for (size_t j = 0; j < c.m; ++j) q(c.n + j, c.n + j) = -1;
    return {q};
}

AbelianGroup boundary_h1(const ChainPresentation& c) { return cokernel(block_form(c).q); }

HomologySphereEvidence is_homology_sphere(const TwistTuple& t, int page_holes) {
    const ChainPresentation c = chain_from_tuple(t, page_holes);
    HomologySphereEvidence e;
    e.handle_counts_agree = c.m == c.n;
    if (e.handle_counts_agree) e.det_a = determinant(c.a);
    e.h1_total = h1_total_space(c);
    e.h1_boundary = boundary_h1(c);
    e.is_homology_sphere = e.handle_counts_agree && e.h1_total.trivial();
    e.consistent = e.is_homology_sphere == e.h1_boundary.trivial();
    return e;
}

namespace {

// Finds a +-1 entry, clears its column with row operations (1-handle slides)
// and removes the cancelling pair. Rows/columns carry their original labels.
std::optional<Cancellation> cancel_pair(IntMatrix& a, std::vector<size_t>& row_labels,
                                        std::vector<size_t>& col_labels) {
    for (size_t j = 0; j < a.cols(); ++j) {
        for (size_t i = 0; i < a.rows(); ++i) {
            if (checked_abs(a(i, j)) != 1) continue;
            size_t slides = 0;
            for (size_t r = 0; r < a.rows(); ++r) {
                if (r == i || a(r, j) == 0) continue;
                a.add_row(r, i, -a(r, j) * a(i, j));
                ++slides;
            }
            Cancellation out{row_labels[i], col_labels[j], slides};
            IntMatrix reduced(a.rows() - 1, a.cols() - 1);
            for (size_t r = 0, rr = 0; r < a.rows(); ++r) {
                if (r == i) continue;
                for (size_t c = 0, cc = 0; c < a.cols(); ++c) {
                    if (c == j) continue;
                    reduced(rr, cc++) = a(r, c);
                }
                ++rr;
            }
            a = std::move(reduced);
            row_labels.erase(row_labels.begin() + static_cast<std::ptrdiff_t>(i));
            col_labels.erase(col_labels.begin() + static_cast<std::ptrdiff_t>(j));
            return out;
        }
    }
    return std::nullopt;
}

} // namespace

FillingReport filling_verdict(const TwistTuple& t) {
    if (t.surface() != kFourHoled) throw Error(ErrorKind::PreconditionFailed, "page is not the 4-holed sphere");
    if (t.size() != 3)
        throw Error(ErrorKind::PreconditionFailed, "expected 3 vanishing cycles, got " + std::to_string(t.size()));
    const HomologySphereEvidence hs = is_homology_sphere(t, 4);
    if (!hs.is_homology_sphere)
        throw Error(ErrorKind::PreconditionFailed, "not a homology sphere (H1 of total space " +
                                                       hs.h1_total.to_string() + ", H1 of boundary " +
                                                       hs.h1_boundary.to_string() + ")");
    FillingReport r;
    r.tuple = t;
    r.chain = chain_from_tuple(t, 4);
    r.det_a = *hs.det_a;
    r.smith_a = smith_normal_form(r.chain.a).divisors;
    r.smith_q = smith_normal_form(block_form(r.chain).q).divisors;
    r.h1_total = hs.h1_total;
    r.h1_boundary = hs.h1_boundary;
    r.euler = euler_char(r.chain);
    if (r.euler != 1) throw Error(ErrorKind::PreconditionFailed, "Euler characteristic is not 1");
    r.boundary_cycles =
        static_cast<int>(std::count_if(t.cycles().begin(), t.cycles().end(), [](const Curve& c) { return c.is_boundary(); }));

    IntMatrix a = r.chain.a;
    std::vector<size_t> rows{1, 2, 3}, cols{1, 2, 3};
    for (int k = 0; k < 2; ++k) {
        auto c = cancel_pair(a, rows, cols);
        if (!c) throw Error(ErrorKind::PreconditionFailed, "no cancelling 1-handle/2-handle pair found");
        r.cancellations.push_back(*c);
    }
    r.remaining_one_handles = static_cast<int>(a.rows());
    r.remaining_two_handles = static_cast<int>(a.cols());
    r.conclusion =
        "D4-or-Mazur dichotomy holds: X is contractible with one 0-handle, one 1-handle and one 2-handle; "
        "X is D4 if the boundary is S3, otherwise X is of Mazur type (S3 recognition not decided)";
    return r;
}

} // namespace palf
