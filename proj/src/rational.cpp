#include "sta/rational.hpp"

#include <cctype>

namespace sta {

namespace {

bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw parse_error("not an exact rational: '" + text +
                          "' (expected p/q with integer p, q)");
    Rational q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw parse_error("not an exact rational: '" + text + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string complex_to_string(const Complex& z) {
    return rational_to_string(z.re) + (z.im >= 0 ? "+" : "") +
           rational_to_string(z.im) + "i";
}

}  // namespace sta
