#include "poly_expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace momcert::cli {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) {
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
        }
    }

    RationalPoly parse() {
        if (src_.empty()) fail("empty polynomial expression");
        RationalPoly sum;
        bool first = true;
        while (pos_ < src_.size()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = (src_[pos_++] == '-') ? Rational(-1) : Rational(1);
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            sum += term(sign);
            first = false;
        }
        return sum;
    }

private:
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument(why + " in polynomial '" + src_ + "' at offset " + std::to_string(pos_));
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    RationalPoly term(const Rational& sign) {
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string literal = digits();
            if (peek() == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) fail("missing denominator");
                literal += "/" + den;
            }
            coeff = Rational::parse(literal);
            have_coeff = true;
            if (peek() == '*') {
                ++pos_;
                if (peek() != 'z' && peek() != 'w') fail("expected a variable after '*'");
            }
        }
        std::size_t exponent = 0;
        if (peek() == 'z' || peek() == 'w') {
            ++pos_;
            exponent = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string e = digits();
                if (e.empty()) fail("missing exponent");
                if (e.size() > 6) fail("exponent too large");
                exponent = std::stoul(e);
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or variable");
        }
        return RationalPoly::monomial(sign * coeff, exponent);
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalPoly parse_poly_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace momcert::cli
