#include "beatty/literal.hpp"

#include <cctype>

namespace beatty {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    void expect_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

    BigInt parse_int(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits += '-';
            ++pos_;
            skip_ws();
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_++];
        }
        if (digits.empty() || digits == "-") {
            pos_ = start;
            fail("expected integer");
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            fail("decimal literals are not accepted; use an exact fraction");
        }
        return BigInt(digits);
    }

    Rational parse_rational(bool allow_sign) {
        BigInt num = parse_int(allow_sign);
        if (consume('/')) {
            BigInt den = parse_int(false);
            if (den == 0) fail("zero denominator");
            return Rational(std::move(num), std::move(den));
        }
        return Rational(std::move(num));
    }

    long long parse_radicand() {
        skip_ws();
        std::size_t at = pos_;
        BigInt d = parse_int(false);
        if (d < 2 || d > 0x7fffffffffffLL) {
            pos_ = at;
            throw RadicandNotSquarefree(static_cast<long long>(d > 0x7fffffffffffLL ? -1 : d));
        }
        return static_cast<long long>(d);
    }

    // "*sqrt(" posint ")"
    long long parse_sqrt_suffix() {
        expect('*');
        expect_word("sqrt");
        expect('(');
        long long d = parse_radicand();
        expect(')');
        return d;
    }

    std::size_t pos_ = 0;
    std::string_view text_;
};

}  // namespace

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    Rational r = c.parse_rational(true);
    if (!c.at_end()) c.fail("trailing characters after rational");
    return r;
}

ExactReal parse_real(std::string_view text) {
    Cursor c(text);
    Rational first = c.parse_rational(true);

    if (c.peek() == '*') {
        long long d = c.parse_sqrt_suffix();
        if (!c.at_end()) c.fail("trailing characters");
        return ExactReal::quadratic(Rational(0), std::move(first), d);
    }

    if (c.peek() == '+' || c.peek() == '-') {
        bool negative = c.peek() == '-';
        c.consume(negative ? '-' : '+');
        Rational second = c.parse_rational(false);
        if (negative) second = -second;
        long long d = c.parse_sqrt_suffix();
        if (!c.at_end()) c.fail("trailing characters");
        return ExactReal::quadratic(std::move(first), std::move(second), d);
    }

    if (!c.at_end()) c.fail("trailing characters after rational");
    return ExactReal(std::move(first));
}

}  // namespace beatty
