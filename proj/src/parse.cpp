#include "palf/parse.hpp"

#include "palf/error.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <numeric>

namespace palf {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, size_t offset = 0) : text_(text), offset_(offset) {}

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int64_t integer() {
        skip_space();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        int64_t value = 0;
        const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
        if (ec != std::errc() || ptr != text_.data() + pos_) {
            pos_ = start;
            fail("integer out of range");
        }
        return value;
    }
    size_t position() const { return offset_ + pos_; }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError,
                    what + " at position " + std::to_string(position()) + " in \"" + std::string(text_) + "\"");
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    size_t offset_;
    size_t pos_ = 0;
};

Curve parse_curve_at(Cursor& cur, Surface page) {
    if (cur.accept('d')) {
        const size_t at = cur.position();
        const int64_t index = cur.integer();
        if (index < 1 || index > page.holes)
            throw Error(ErrorKind::ParseError, "boundary index " + std::to_string(index) + " outside 1.." +
                                                   std::to_string(page.holes) + " at position " + std::to_string(at));
        return Curve::boundary(static_cast<int>(index), page);
    }
    if (cur.accept('{')) {
        std::vector<int> set;
        do {
            const size_t at = cur.position();
            const int64_t i = cur.integer();
            if (i < 1 || i > page.holes)
                throw Error(ErrorKind::ParseError, "hole " + std::to_string(i) + " outside 1.." +
                                                       std::to_string(page.holes) + " at position " + std::to_string(at));
            set.push_back(static_cast<int>(i));
        } while (cur.accept(','));
        cur.expect('}');
        try {
            return Curve::hole_set(set, page);
        } catch (const Error& e) {
            cur.fail(e.what());
        }
    }
    const size_t at = cur.position();
    const int64_t p = cur.integer();
    cur.expect('/');
    const int64_t q = cur.integer();
    if (page != kFourHoled)
        throw Error(ErrorKind::ParseError, "slope curves need the 4-holed page (position " + std::to_string(at) + ")");
    if (p == 0 && q == 0) throw Error(ErrorKind::ParseError, "slope 0/0 at position " + std::to_string(at));
    if (std::gcd(checked_abs(p), checked_abs(q)) != 1)
        throw Error(ErrorKind::NonCoprime, std::to_string(p) + "/" + std::to_string(q) + " at position " +
                                               std::to_string(at) + " is not in lowest terms");
    return Curve::slope(p, q);
}

} // namespace

Curve parse_curve(std::string_view text, Surface page) {
    Cursor cur(text);
    if (cur.at_end()) cur.fail("empty curve");
    Curve c = parse_curve_at(cur, page);
    if (!cur.at_end()) cur.fail("trailing input");
    return c;
}

TwistTuple parse_tuple(std::string_view text, Surface page) {
    Cursor cur(text);
    if (cur.at_end()) throw Error(ErrorKind::EmptyTuple, "no curves given");
    std::vector<Curve> cycles;
    do {
        cycles.push_back(parse_curve_at(cur, page));
    } while (cur.accept(','));
    if (!cur.at_end()) cur.fail("expected ',' between curves");
    return TwistTuple(std::move(cycles));
}

MappingClass parse_word(std::string_view text) {
    Cursor cur(text);
    MappingClass out;
    if (cur.at_end()) return out;
    while (!cur.at_end()) {
        cur.expect('t');
        cur.expect('(');
        Curve c = parse_curve_at(cur, kFourHoled);
        cur.expect(')');
        int64_t exponent = 1;
        if (cur.accept('^')) exponent = cur.integer();
        out = out * power(dehn_twist(c), exponent);
    }
    return out;
}

IntMatrix parse_matrix(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("matrix: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be a list of rows");
    const size_t rows = j.size();
    const size_t cols = rows ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorKind::ParseError, "matrix rows differ in length");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number_integer()) throw Error(ErrorKind::ParseError, "matrix entries must be integers");
            m(r, c) = j[r][c].get<int64_t>();
        }
    }
    return m;
}

} // namespace palf
