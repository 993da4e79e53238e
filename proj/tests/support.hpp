#pragma once

// Independent oracles and generators shared by the unit and acceptance tests.
// Nothing here calls into the code under test except for value constructors.

#include "palf/curves.hpp"
#include "palf/matrix.hpp"
#include "palf/mcg.hpp"
#include "palf/word.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Mat2 = std::array<int64_t, 4>; // a b c d

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

// Sign-normalized, so that PSL equality is array equality.
inline Mat2 proj(Mat2 m) {
    for (int64_t v : m) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& e : m) e = -e;
        break;
    }
    return m;
}

inline Mat2 generator(int gen, int exp, int64_t z) {
    if (gen == 0) return {1, -exp * z, 0, 1};
    return {1, 0, exp * z, 1};
}

// Plain 2x2 product over the letters, no reduction, no normalization until the end.
inline Mat2 evaluate(const std::vector<palf::Letter>& letters, int64_t z) {
    Mat2 m{1, 0, 0, 1};
    for (const auto& l : letters) m = mul(m, generator(l.gen, l.exp, z));
    return proj(m);
}

// Slope action of a word, applying letters right to left.
inline std::array<int64_t, 2> act(const std::vector<palf::Letter>& letters, std::array<int64_t, 2> v) {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        Mat2 g = generator(it->gen, it->exp, 2);
        v = {g[0] * v[0] + g[1] * v[1], g[2] * v[0] + g[3] * v[1]};
    }
    return v;
}

inline std::array<int64_t, 2> canonical(int64_t p, int64_t q) {
    const int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

// Determinant by cofactor expansion (fine for the small sizes used here).
inline int64_t det(const std::vector<std::vector<int64_t>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    int64_t total = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<int64_t>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<int64_t> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
    }
    return total;
}

inline void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// gcd of all k x k minors, k = 1..min(rows, cols).
inline std::vector<int64_t> minor_gcds(const std::vector<std::vector<int64_t>>& m, size_t rows, size_t cols) {
    std::vector<int64_t> out;
    for (size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<size_t>> rs, cs;
        std::vector<size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        int64_t g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<int64_t>> sub(k, std::vector<int64_t>(k));
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
                const int64_t d = det(sub);
                g = std::gcd(g, d < 0 ? -d : d);
            }
        out.push_back(g);
    }
    return out;
}

// Invariant factors d_k = D_k / D_{k-1} from the minor gcds (0 once a D_k vanishes).
inline std::vector<int64_t> smith_divisors(const std::vector<std::vector<int64_t>>& m, size_t rows, size_t cols) {
    const auto gcds = minor_gcds(m, rows, cols);
    std::vector<int64_t> out;
    int64_t prev = 1;
    for (int64_t g : gcds) {
        if (g == 0 || prev == 0) {
            out.push_back(0);
            prev = 0;
            continue;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

} // namespace oracle

namespace gen {

inline palf::FreeWord random_word(std::mt19937_64& rng, size_t max_len) {
    std::uniform_int_distribution<size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    const size_t len = len_dist(rng);
    std::vector<palf::Letter> letters;
    while (letters.size() < len) {
        const int k = letter(rng);
        palf::Letter l{static_cast<int8_t>(k / 2), static_cast<int8_t>(k % 2 ? -1 : 1)};
        if (!letters.empty() && letters.back() == l.inverse()) continue;
        letters.push_back(l);
    }
    return palf::FreeWord(letters);
}

inline palf::MappingClass random_class(std::mt19937_64& rng, size_t max_len) {
    std::uniform_int_distribution<int64_t> e(-2, 2);
    return {{e(rng), e(rng), e(rng), e(rng)}, random_word(rng, max_len)};
}

inline palf::Curve random_slope(std::mt19937_64& rng, int64_t max_height) {
    std::uniform_int_distribution<int64_t> p(-max_height, max_height), q(0, max_height);
    for (;;) {
        const int64_t a = p(rng), b = q(rng);
        if (a == 0 && b == 0) continue;
        if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
        if (b == 0 && a != 1) continue;
        return palf::Curve::slope(a, b);
    }
}

inline palf::Curve random_curve(std::mt19937_64& rng, int64_t max_height) {
    std::uniform_int_distribution<int> kind(0, 4);
    const int k = kind(rng);
    if (k == 0) return palf::Curve::boundary(std::uniform_int_distribution<int>(1, 4)(rng));
    return random_slope(rng, max_height);
}

} // namespace gen
