#include "ggc/rational.hpp"

#include "ggc/errors.hpp"

#include <cctype>

namespace ggc {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s)
{
    std::string t(s);
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    std::size_t digits = 0, slash = 0;
    for (std::size_t k = i; k < t.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(t[k]))) {
            ++digits;
        } else if (t[k] == '/' && slash == 0 && digits > 0 && k + 1 < t.size()) {
            slash = k;
        } else {
            throw ParseError("bad rational '" + t + "'");
        }
    }
    if (digits == 0) throw ParseError("bad rational '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    Rational q;
    if (q.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

Rational factorial(unsigned k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace ggc
