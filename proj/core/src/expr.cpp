#include "muinv/expr.hpp"

#include <cctype>
#include <sstream>

namespace muinv {
namespace lie {

namespace {

struct Parser {
    const std::string& s;
    const WedgeSignature& sig;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what)
    {
        throw ValidationError("expression parse error at offset " + std::to_string(pos) + ": " +
                              what);
    }

    Int integer()
    {
        skip_ws();
        std::string digits;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            digits += s[pos++];
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits += s[pos++];
        if (digits.empty() || digits == "-" || digits == "+")
            fail("expected an integer");
        return Int(digits);
    }

    Generator generator()
    {
        skip_ws();
        if (peek() != 'i')
            fail("expected a generator 'i<k>'");
        ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a generator index after 'i'");
        int family = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            family = family * 10 + (s[pos++] - '0');
        if (family > sig.r() - 1)
            fail("generator index " + std::to_string(family) + " exceeds r-1 = " +
                 std::to_string(sig.r() - 1));
        bool graded = false;
        int grade = 0;
        if (pos < s.size() && s[pos] == '@') {
            ++pos;
            graded = true;
            bool neg = false;
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                neg = s[pos] == '-';
                ++pos;
            }
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected a grade after '@'");
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                grade = grade * 10 + (s[pos++] - '0');
            if (neg)
                grade = -grade;
        }
        if (family == 0) {
            if (graded)
                fail("the core generator i0 carries no grade");
            return Generator::core_gen(sig.n);
        }
        int dim = sig.meridian_dim(family);
        return graded ? Generator::graded_meridian(family, grade, dim)
                      : Generator::meridian(family, dim);
    }

    LieElement factor()
    {
        if (eat('[')) {
            LieElement a = expr();
            if (!eat(','))
                fail("expected ',' in bracket");
            LieElement b = expr();
            if (!eat(']'))
                fail("expected ']'");
            return lie_bracket(a, b);
        }
        return lie_term(BracketTree(generator()));
    }

    LieElement term()
    {
        skip_ws();
        Int coef = 1;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = integer();
            if (!eat('*'))
                fail("expected '*' after coefficient");
        }
        return lie_scale(coef, factor());
    }

    LieElement expr()
    {
        LieElement acc;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        acc = lie_scale(negative ? Int(-1) : Int(1), term());
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                bool neg = peek() == '-';
                ++pos;
                acc = lie_add(acc, lie_scale(neg ? Int(-1) : Int(1), term()));
            } else {
                break;
            }
        }
        return acc;
    }
};

void append_term(std::ostream& out, bool first, const Int& c, const std::string& body)
{
    Int a = c < 0 ? Int(-c) : c;
    if (first)
        out << (c < 0 ? "-" : "");
    else
        out << (c < 0 ? " - " : " + ");
    if (a != 1)
        out << a.str() << "*";
    out << body;
}

}  // namespace

LieElement parse_lie(const std::string& text, const WedgeSignature& sig)
{
    Parser p{text, sig};
    LieElement x = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing characters");
    return x;
}

std::string lie_text(const LieElement& x)
{
    if (x.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : x) {
        append_term(out, first, c, t.text());
        first = false;
    }
    return out.str();
}

std::string normal_form_text(const NormalForm& nf)
{
    if (nf.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [delta, c] : nf.coef) {
        append_term(out, first, c, nf.comb(delta).text());
        first = false;
    }
    return out.str();
}

}  // namespace lie
}  // namespace muinv
