#include "palf/matrix.hpp"

#include "palf/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace palf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const int64_t v = (*this)(r, k);
            if (v == 0) continue;
            for (size_t c = 0; c < rhs.cols_; ++c) out(r, c) = checked_add(out(r, c), checked_mul(v, rhs(k, c)));
        }
    return out;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(size_t i, size_t j, int64_t k) {
    if (k == 0) return;
    for (size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_add((*this)(i, c), checked_mul(k, (*this)(j, c)));
}

void IntMatrix::add_col(size_t i, size_t j, int64_t k) {
    if (k == 0) return;
    for (size_t r = 0; r < rows_; ++r) (*this)(r, i) = checked_add((*this)(r, i), checked_mul(k, (*this)(r, j)));
}

void IntMatrix::negate_row(size_t i) {
    for (size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_neg((*this)(i, c));
}

std::vector<std::vector<int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<int64_t>> out(rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c));
    return out;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (size_t r = 0; r < rows_; ++r) {
        out += r ? ",[" : "[";
        for (size_t c = 0; c < cols_; ++c) out += (c ? "," : "") + std::to_string((*this)(r, c));
        out += "]";
    }
    return out + "]";
}

int64_t determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    int64_t sign = 1;
    int64_t prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j))) / prev;
        prev = m(k, k);
    }
    return checked_mul(sign, m(n - 1, n - 1));
}

SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix d = input;
    const size_t rows = d.rows(), cols = d.cols();
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);
    const size_t diag = std::min(rows, cols);
    size_t t = 0;
    for (; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            size_t pr = rows, pc = cols;
            for (size_t r = t; r < rows; ++r)
                for (size_t c = t; c < cols; ++c)
                    if (d(r, c) != 0 && (pr == rows || checked_abs(d(r, c)) < checked_abs(d(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) goto done;
            d.swap_rows(t, pr);
            left.swap_rows(t, pr);
            d.swap_cols(t, pc);
            right.swap_cols(t, pc);

            bool clean = true;
            const int64_t pivot = d(t, t);
            for (size_t r = t + 1; r < rows; ++r) {
                const int64_t q = d(r, t) / pivot;
                d.add_row(r, t, -q);
                left.add_row(r, t, -q);
                if (d(r, t) != 0) clean = false;
            }
            for (size_t c = t + 1; c < cols; ++c) {
                const int64_t q = d(t, c) / pivot;
                d.add_col(c, t, -q);
                right.add_col(c, t, -q);
                if (d(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block.
            bool divides = true;
            for (size_t r = t + 1; r < rows && divides; ++r)
                for (size_t c = t + 1; c < cols; ++c)
                    if (d(r, c) % pivot != 0) {
                        d.add_row(t, r, 1);
                        left.add_row(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            left.negate_row(t);
        }
    }
done:
    SmithForm out;
    out.rank = t;
    for (size_t i = 0; i < diag; ++i) out.divisors.push_back(d(i, i));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

int64_t AbelianGroup::order() const {
    if (free_rank) return 0;
    int64_t n = 1;
    for (int64_t t : torsion) n = checked_mul(n, t);
    return n;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (int64_t t : torsion) parts.push_back("Z/" + std::to_string(t));
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
    const SmithForm snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = m.rows() - snf.rank;
    for (int64_t d : snf.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

} // namespace palf
