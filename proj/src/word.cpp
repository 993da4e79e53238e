#include "palf/word.hpp"

#include "palf/error.hpp"

#include <algorithm>

namespace palf {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == l.inverse())
        out.pop_back();
    else
        out.push_back(l);
}

} // namespace

FreeWord::FreeWord(const std::vector<Letter>& letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) {
        if ((l.gen != 0 && l.gen != 1) || (l.exp != 1 && l.exp != -1))
            throw Error(ErrorKind::InvalidArgument, "malformed letter");
        push_reduced(letters_, l);
    }
}

FreeWord FreeWord::generator(int gen, int64_t power) {
    Letter l{static_cast<int8_t>(gen), static_cast<int8_t>(power < 0 ? -1 : 1)};
    std::vector<Letter> out(static_cast<size_t>(checked_abs(power)), l);
    return FreeWord(out);
}

FreeWord FreeWord::inverse() const {
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
    return out;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    FreeWord out = *this;
    for (Letter l : rhs.letters_) push_reduced(out.letters_, l);
    return out;
}

FreeWord FreeWord::pow(int64_t k) const {
    FreeWord base = k < 0 ? inverse() : *this;
    FreeWord out;
    for (int64_t i = 0; i < checked_abs(k); ++i) out = out * base;
    return out;
}

int64_t FreeWord::exponent_sum(int gen) const {
    int64_t sum = 0;
    for (Letter l : letters_)
        if (l.gen == gen) sum += l.exp;
    return sum;
}

std::vector<std::pair<int, int64_t>> FreeWord::syllables() const {
    std::vector<std::pair<int, int64_t>> out;
    for (Letter l : letters_) {
        if (!out.empty() && out.back().first == l.gen)
            out.back().second += l.exp;
        else
            out.emplace_back(l.gen, l.exp);
    }
    return out;
}

std::string FreeWord::to_string(const std::array<std::string, 2>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += "·";
        out += names[static_cast<size_t>(letters_[i].gen)];
        if (letters_[i].exp < 0) out += "^-1";
    }
    return out;
}

CyclicDecomposition cyclic_decomposition(const FreeWord& w) {
    const auto& ls = w.letters();
    size_t lo = 0;
    size_t hi = ls.size();
    while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    std::vector<Letter> prefix(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(lo));
    std::vector<Letter> core(ls.begin() + static_cast<std::ptrdiff_t>(lo), ls.begin() + static_cast<std::ptrdiff_t>(hi));
    return {FreeWord(prefix), FreeWord(core)};
}

std::optional<FreeWord> solve_conjugacy(const FreeWord& u, const FreeWord& v) {
    auto cu = cyclic_decomposition(u);
    auto cv = cyclic_decomposition(v);
    const auto& a = cu.core.letters();
    const auto& b = cv.core.letters();
    if (a.size() != b.size()) return std::nullopt;
    if (a.empty()) return cv.conjugator * cu.conjugator.inverse();
    const size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        // core_v == rotation of core_u by k: b = p^-1 a p with p = a[0..k)
        bool match = true;
        for (size_t i = 0; i < n && match; ++i) match = b[i] == a[(i + k) % n];
        if (!match) continue;
        FreeWord p(std::vector<Letter>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k)));
        return cv.conjugator * p.inverse() * cu.conjugator.inverse();
    }
    return std::nullopt;
}

std::vector<FreeWord> all_reduced_words(size_t length) {
    static const Letter kLetters[4] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}};
    std::vector<std::vector<Letter>> current{{}};
    for (size_t step = 0; step < length; ++step) {
        std::vector<std::vector<Letter>> next;
        next.reserve(current.size() * 3 + 1);
        for (const auto& w : current) {
            for (Letter l : kLetters) {
                if (!w.empty() && w.back() == l.inverse()) continue;
                auto ext = w;
                ext.push_back(l);
                next.push_back(std::move(ext));
            }
        }
        current = std::move(next);
    }
    std::vector<FreeWord> out;
    out.reserve(current.size());
    for (auto& w : current) out.emplace_back(w);
    return out;
}

} // namespace palf
