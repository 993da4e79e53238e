#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace palf {

/// Generator index (0 or 1) with exponent +1 or -1.
struct Letter {
    int8_t gen = 0;
    int8_t exp = 1;

    Letter inverse() const { return {gen, static_cast<int8_t>(-exp)}; }
    auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the free group on two generators, in composition
/// order: the leftmost letter is applied last.
class FreeWord {
public:
    FreeWord() = default;
    /// Freely reduces the given letters.
    explicit FreeWord(const std::vector<Letter>& letters);

    static FreeWord generator(int gen, int64_t power = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord pow(int64_t k) const;

    int64_t exponent_sum(int gen) const;

    /// Maximal runs of one generator, as (gen, nonzero exponent).
    std::vector<std::pair<int, int64_t>> syllables() const;

    /// e.g. "A·B^-1", "1" for the empty word.
    std::string to_string(const std::array<std::string, 2>& names) const;

    auto operator<=>(const FreeWord&) const = default;

private:
    std::vector<Letter> letters_;
};

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicDecomposition {
    FreeWord conjugator;
    FreeWord core;
};

CyclicDecomposition cyclic_decomposition(const FreeWord& w);

/// Returns psi with v = psi * u * psi^-1, or nullopt if u and v are not conjugate.
std::optional<FreeWord> solve_conjugacy(const FreeWord& u, const FreeWord& v);

/// All reduced words of exactly the given length.
std::vector<FreeWord> all_reduced_words(size_t length);

} // namespace palf
