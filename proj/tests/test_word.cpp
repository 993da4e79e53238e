#include "doctest.h"
#include "support.hpp"

#include "palf/word.hpp"

using namespace palf;

namespace {

const std::array<std::string, 2> kNames{"A", "B"};

FreeWord w(std::initializer_list<std::pair<int, int>> letters) {
    std::vector<Letter> out;
    for (auto [g, e] : letters) out.push_back({static_cast<int8_t>(g), static_cast<int8_t>(e)});
    return FreeWord(out);
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(w({{0, 1}, {0, -1}}).empty());
    CHECK(w({{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == FreeWord::generator(0, 2));
    CHECK(FreeWord::generator(1, -3).size() == 3);
    CHECK(FreeWord::generator(0, 0).empty());
}

TEST_CASE("printing") {
    CHECK(FreeWord().to_string(kNames) == "1");
    CHECK(w({{0, 1}, {1, -1}}).to_string(kNames) == "A·B^-1");
}

TEST_CASE("group laws on words") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const auto x = gen::random_word(rng, 10), y = gen::random_word(rng, 10), z = gen::random_word(rng, 10);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x * x.inverse()).empty());
        CHECK((x.inverse() * x).empty());
        CHECK(x.pow(3) == x * x * x);
        CHECK(x.pow(-2) == x.inverse() * x.inverse());
        CHECK((x * y).exponent_sum(0) == x.exponent_sum(0) + y.exponent_sum(0));
    }
}

TEST_CASE("syllables") {
    const auto s = w({{1, 1}, {1, 1}, {0, -1}}).syllables();
    REQUIRE(s.size() == 2);
    CHECK(s[0] == std::pair<int, int64_t>{1, 2});
    CHECK(s[1] == std::pair<int, int64_t>{0, -1});
}

TEST_CASE("cyclic decomposition") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        const auto x = gen::random_word(rng, 12);
        const auto d = cyclic_decomposition(x);
        CHECK(d.conjugator * d.core * d.conjugator.inverse() == x);
        if (d.core.size() >= 2) CHECK(d.core.letters().front() != d.core.letters().back().inverse());
    }
}

TEST_CASE("conjugacy solver matches direct conjugation") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 500; ++i) {
        const auto u = gen::random_word(rng, 8), p = gen::random_word(rng, 8);
        const auto v = p * u * p.inverse();
        const auto psi = solve_conjugacy(u, v);
        REQUIRE(psi.has_value());
        CHECK(*psi * u * psi->inverse() == v);
    }
    // non-conjugate: different exponent sums
    CHECK_FALSE(solve_conjugacy(FreeWord::generator(0), FreeWord::generator(1)).has_value());
    CHECK_FALSE(solve_conjugacy(FreeWord::generator(0), FreeWord::generator(0, 2)).has_value());
    // same abelianization, not conjugate
    CHECK_FALSE(solve_conjugacy(w({{0, 1}, {0, 1}, {1, 1}, {1, 1}}), w({{0, 1}, {1, 1}, {0, 1}, {1, 1}})).has_value());
}

TEST_CASE("reduced word counts") {
    CHECK(all_reduced_words(0).size() == 1);
    CHECK(all_reduced_words(1).size() == 4);
    CHECK(all_reduced_words(3).size() == 36);
}
