#include "gsod/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gsod {

Polynomial::Polynomial(Term t) {
    if (sgn(t.c) != 0) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(const Rational& c, std::size_t nvars) {
    return Polynomial(Term{Monomial(nvars), c});
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    return Polynomial(Term{std::move(m), std::move(c)});
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = degrevlex_cmp(terms_[i].m, g.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            Rational s = terms_[i].c + g.terms_[j].c;
            if (sgn(s) != 0) r.terms_.push_back(Term{terms_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    if (is_zero() || g.is_zero()) return Polynomial();
    std::map<Monomial, Rational, DegrevlexLess> acc;
    for (const auto& a : terms_)
        for (const auto& b : g.terms_) {
            Monomial m = a.m * b.m;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), a.c * b.c);
            else
                it->second += a.c * b.c;
        }
    Polynomial r;
    r.terms_.reserve(acc.size());
    // map is ascending; we store descending.
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (sgn(it->second) != 0) r.terms_.push_back(Term{it->first, it->second});
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (sgn(c) == 0) return Polynomial();
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::term_mul(const Rational& c, const Monomial& m) const {
    if (sgn(c) == 0) return Polynomial();
    Polynomial r(*this);
    for (auto& t : r.terms_) {
        t.c *= c;
        t.m = t.m * m;
    }
    return r;
}

int64_t Polynomial::total_degree() const {
    int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
}

std::optional<int64_t> Polynomial::homogeneous_weight(const std::vector<int>& w) const {
    if (terms_.empty()) return 0;
    int64_t wt = terms_.front().m.weight(w);
    for (const auto& t : terms_)
        if (t.m.weight(w) != wt) return std::nullopt;
    return wt;
}

std::map<int64_t, Polynomial> Polynomial::homogeneous_components(const std::vector<int>& w) const {
    std::map<int64_t, Polynomial> out;
    for (const auto& t : terms_) out[t.m.weight(w)] += Polynomial(t);
    return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.c;
        if (first) {
            if (sgn(c) < 0) os << "-", c = -c;
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        bool printed_coeff = false;
        if (t.m.is_one() || c != 1) {
            os << c.get_str();
            printed_coeff = true;
        }
        bool need_star = printed_coeff;
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars[i];
            if (t.m.e[i] != 1) os << "^" << t.m.e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected integer at position " + std::to_string(pos) + " in '" + s + "'");
        return s.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Lexer lx{text};
    Polynomial result;
    bool pending_sign = false;
    bool any_term = false;
    int sign = 1;
    while (!lx.eof()) {
        if (lx.accept('+')) {
            if (!pending_sign) sign = 1;
            pending_sign = true;
            continue;
        }
        if (lx.accept('-')) {
            sign = pending_sign ? -sign : -1;
            pending_sign = true;
            continue;
        }
        // One term: optional coefficient, then variables with powers.
        Rational coeff(sign);
        Monomial mono(vars.size());
        bool saw_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.integer();
                std::string den = "1";
                if (lx.accept('/')) den = lx.integer();
                coeff *= parse_rational(num + "/" + den);
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                // Longest match against the declared variable names, so that
                // juxtaposed variables ("xy") work without a '*'.
                lx.skip_ws();
                std::size_t best = 0, var = vars.size();
                for (std::size_t k = 0; k < vars.size(); ++k) {
                    const std::string& name = vars[k];
                    if (name.size() > best && lx.s.compare(lx.pos, name.size(), name) == 0) {
                        best = name.size();
                        var = k;
                    }
                }
                if (var == vars.size()) {
                    std::string name = lx.identifier();
                    throw std::invalid_argument("unknown variable '" + name + "' in '" + text + "'");
                }
                lx.pos += best;
                int exp = 1;
                if (lx.accept('^')) exp = std::stoi(lx.integer());
                mono.e[var] += exp;
                saw_factor = true;
            } else {
                break;
            }
            if (!lx.accept('*')) {
                // '*' separators optional; keep consuming adjacent factors.
                char n = lx.peek();
                if (std::isalpha(static_cast<unsigned char>(n)) || n == '_' ||
                    std::isdigit(static_cast<unsigned char>(n)))
                    continue;
                break;
            }
        }
        if (!saw_factor)
            throw std::invalid_argument("unexpected character at position " +
                                        std::to_string(lx.pos) + " in '" + text + "'");
        result += Polynomial(Term{std::move(mono), std::move(coeff)});
        sign = 1;
        pending_sign = false;
        any_term = true;
    }
    if (pending_sign || !any_term)
        throw std::invalid_argument("malformed polynomial '" + text + "'");
    return result;
}

} // namespace gsod
