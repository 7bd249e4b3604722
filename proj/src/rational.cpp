#include "gsod/rational.hpp"

namespace gsod {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(s);
        r.canonicalize();
        if (r.get_den() <= 0 && sgn(r) != 0)
            throw std::invalid_argument("rational with nonpositive denominator: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

} // namespace gsod
