#include "arrpoin/expression.hpp"

#include <cctype>
#include <string>

namespace arrpoin {
namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t ell) : text_(text), ell_(ell) {}

    MultiPoly parse()
    {
        MultiPoly result = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ExpressionError(what + " at position " + std::to_string(pos_ + 1) + " in '" +
                              std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    MultiPoly expr()
    {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const MultiPoly d = unary();
                const auto c = d.constant_value();
                if (!c)
                    fail("division by a non-constant");
                if (*c == 0)
                    fail("division by zero");
                acc = acc.scaled(1 / *c);
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    MultiPoly power()
    {
        MultiPoly base = atom();
        if (accept('^')) {
            const std::string e = digits();
            if (e.empty())
                fail("expected a nonnegative integer exponent");
            if (e.size() > 4)
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    MultiPoly atom()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            const std::string idx = digits();
            if (idx.empty())
                fail("expected a variable index after 'x'");
            const unsigned long i = idx.size() > 6 ? 0 : std::stoul(idx);
            if (i < 1 || i > ell_)
                fail("variable x" + idx + " out of range 1.." + std::to_string(ell_));
            return MultiPoly::variable(ell_, i - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string n = digits();
            return MultiPoly::constant(ell_, Rational(Integer(n, 10)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t ell_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_polynomial(std::string_view text, std::size_t ell)
{
    return Parser(text, ell).parse();
}

} // namespace arrpoin
