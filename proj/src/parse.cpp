#include "ordens/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace ordens {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

class ElementParser {
public:
    ElementParser(std::string text, const FieldSpec& field) : s_(std::move(text)), field_(field) {}

    Element run() {
        if (s_.empty()) fail("empty element");
        Element e = expr();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    bool lookahead(std::string_view lit) const { return std::string_view(s_).substr(pos_).starts_with(lit); }
    bool accept(std::string_view lit) {
        if (!lookahead(lit)) return false;
        pos_ += lit.size();
        return true;
    }

    Element expr() {
        Element acc = factor();
        while (peek() == '*' && !lookahead("*sqrt(")) {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    // A leading sign binds looser than '^' ("-3^2" is -9), except that in
    // the two-coordinate form "x+y*sqrt(D)" it belongs to x.
    Element factor() {
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
        bool binomial = false;
        Element base = std::isdigit(static_cast<unsigned char>(peek())) ? number_atom(negative, binomial) : primary();
        while (accept("^")) base = base.pow(uint_literal());
        return negative && !binomial ? -base : base;
    }

    Element primary() {
        if (accept("(")) {
            Element e = expr();
            if (!accept(")")) fail("expected ')'");
            return e;
        }
        if (accept("zeta3")) {
            if (field_.is_rationals() || field_.d() != -3) fail("zeta3 requires D = -3");
            return Element(field_, Rational(Integer(-1), Integer(2)), Rational(Integer(1), Integer(2)));
        }
        if (accept("i")) {
            if (field_.is_rationals() || field_.d() != -1) fail("i requires D = -1");
            return Element::sqrt_d(field_);
        }
        bool binomial = false;
        return number_atom(false, binomial);
    }

    // Unsigned atom; `negative` is the sign already consumed, applied here
    // only for the two-coordinate form.
    Element number_atom(bool negative, bool& binomial) {
        const Rational first = unsigned_rational();
        if (accept("*sqrt(")) return Element(field_, Rational(), first * sqrt_factor());
        if ((peek() == '+' || peek() == '-') && !field_.is_rationals() && lookahead_rational_then_sqrt()) {
            const bool minus = s_[pos_++] == '-';
            const Rational second = unsigned_rational();
            if (!accept("*sqrt(")) fail("expected '*sqrt(' after second coordinate");
            binomial = true;
            return Element(field_, negative ? -first : first, (minus ? -second : second) * sqrt_factor());
        }
        return Element(field_, first);
    }

    bool lookahead_rational_then_sqrt() const {
        std::size_t p = pos_ + 1;
        while (p < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[p])) || s_[p] == '/')) ++p;
        return p > pos_ + 1 && std::string_view(s_).substr(p).starts_with("*sqrt(");
    }

    // Consumes "int)" after "*sqrt(" and checks it names this field's D.
    Rational sqrt_factor() {
        const std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        const std::string digits = s_.substr(start, pos_ - start);
        if (!accept(")")) fail("expected ')' after sqrt radicand");
        std::int64_t k = 0;
        const char* b = digits.data() + (digits[0] == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(b, digits.data() + digits.size(), k);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("bad sqrt radicand");
        if (field_.is_rationals() || k != field_.d())
            fail("sqrt(" + std::to_string(k) + ") is not the generator of " + field_.str());
        return Rational(1);
    }

    Rational unsigned_rational() {
        const std::size_t start = pos_;
        const std::size_t digits_start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits_start) fail("expected a number");
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == den_start) fail("expected a denominator");
        }
        try {
            return Rational::parse(std::string_view(s_).substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    unsigned long uint_literal() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected an exponent");
        unsigned long k = 0;
        const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, k);
        if (ec != std::errc()) fail("exponent out of range");
        return k;
    }

    std::string s_;
    std::size_t pos_ = 0;
    const FieldSpec& field_;
};

}  // namespace

FieldSpec parse_field(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s == "Q" || s == "QQ") return FieldSpec::rationals();
    std::string_view rest(s);
    if (!rest.starts_with("Q(sqrt") || !rest.ends_with(")"))
        throw ParseError("field must be 'Q' or 'Q(sqrt D)', got '" + std::string(text) + "'");
    rest.remove_prefix(6);
    rest.remove_suffix(1);
    if (rest.starts_with("(")) {
        if (!rest.ends_with(")")) throw ParseError("unbalanced parentheses in field");
        rest.remove_prefix(1);
        rest.remove_suffix(1);
    }
    std::int64_t d = 0;
    const char* b = rest.data() + (rest.starts_with("+") ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(b, rest.data() + rest.size(), d);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size())
        throw ParseError("bad radicand in field '" + std::string(text) + "'");
    return FieldSpec::quadratic(d);
}

Element parse_element(std::string_view text, const FieldSpec& field) {
    return ElementParser(strip_spaces(text), field).run();
}

}  // namespace ordens
