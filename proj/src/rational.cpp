#include "gpatoms/rational.hpp"

#include <cctype>

namespace gpatoms {

Rational rational_from_string(const std::string& text) {
    // Strict grammar: -?digits(/digits)?  — no whitespace, no '+', no empty parts.
    auto fail = [&] { throw domain_error("malformed rational '" + text + "' (expected \"p/q\" or \"p\")"); };
    if (text.empty()) fail();
    std::size_t i = 0;
    if (text[0] == '-') i = 1;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) fail();
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
        if (digits == 0 || i != text.size()) fail();
    }
    Rational q;
    if (q.set_str(text, 10) != 0) fail();
    if (q.get_den() == 0) throw domain_error("rational '" + text + "' has zero denominator");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

}  // namespace gpatoms
