#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace palf {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols, int64_t fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    int64_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    int64_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    /// row i += k * row j
    void add_row(size_t i, size_t j, int64_t k);
    /// col i += k * col j
    void add_col(size_t i, size_t j, int64_t k);
    void negate_row(size_t i);

    std::vector<std::vector<int64_t>> to_rows() const;
    std::string to_string() const;

    bool operator==(const IntMatrix&) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int64_t> data_;
};

/// Exact determinant (fraction-free elimination).
int64_t determinant(const IntMatrix& m);

struct SmithForm {
    std::vector<int64_t> divisors; // min(rows, cols) entries, d_1 | d_2 | ..., zeros last
    IntMatrix left;                // unimodular, rows x rows
    IntMatrix right;               // unimodular, cols x cols; left * M * right = diag(divisors)
    size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion_i.
struct AbelianGroup {
    size_t free_rank = 0;
    std::vector<int64_t> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool finite() const { return free_rank == 0; }
    /// Order of a finite group; 0 for infinite groups.
    int64_t order() const;
    /// "0", "Z/2", "Z^2 + Z/3 + Z/6"
    std::string to_string() const;

    bool operator==(const AbelianGroup&) const = default;
};

/// Cokernel of m : Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& m);

} // namespace palf
