#include "ggc/errors.hpp"
#include "ggc/polynomial.hpp"

#include <cctype>

namespace ggc {

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done()
    {
        skip();
        return pos >= s.size();
    }
    char peek()
    {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("polynomial: " + msg + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
    }
    std::string digits()
    {
        skip();
        std::size_t b = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (b == pos) fail("expected digits");
        return std::string(s.substr(b, pos - b));
    }
};

Polynomial parse_term(Lexer& lx)
{
    Polynomial term(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        std::string r = lx.digits();
        if (lx.peek() == '/') {
            ++lx.pos;
            r += "/" + lx.digits();
        }
        term = Polynomial(parse_rational(r));
        any = true;
    }
    while (!lx.done()) {
        char c = lx.peek();
        if (c == '*') {
            ++lx.pos;
            continue;
        }
        if (!std::islower(static_cast<unsigned char>(c))) break;
        ++lx.pos;
        if (lx.pos >= lx.s.size() || !std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            lx.fail("variable needs an index");
        int idx = std::stoi(lx.digits());
        if (idx < 1 || idx > 0xffff) lx.fail("variable index out of range");
        int e = 1;
        if (lx.peek() == '^') {
            ++lx.pos;
            e = std::stoi(lx.digits());
        }
        term = term * Polynomial::var(c, idx).pow(e);
        any = true;
    }
    if (!any) lx.fail("empty term");
    return term;
}

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    Lexer lx{text};
    if (lx.done()) lx.fail("empty expression");
    Polynomial p;
    bool neg = false;
    if (lx.peek() == '-' || lx.peek() == '+') {
        neg = lx.peek() == '-';
        ++lx.pos;
    }
    Polynomial t = parse_term(lx);
    p += neg ? -t : t;
    while (!lx.done()) {
        char op = lx.peek();
        if (op != '+' && op != '-') lx.fail("expected '+' or '-'");
        ++lx.pos;
        t = parse_term(lx);
        if (op == '-')
            p -= t;
        else
            p += t;
    }
    return p;
}

} // namespace ggc
