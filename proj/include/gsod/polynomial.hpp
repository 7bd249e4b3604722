#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsod/monomial.hpp"
#include "gsod/rational.hpp"

namespace gsod {

struct Term {
    Monomial m;
    Rational c;
};

// Sparse polynomial over Q. Terms kept sorted descending in degrevlex and
// never store a zero coefficient, so representations are canonical.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Term t);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c, std::size_t nvars);
    static Polynomial monomial(Monomial m, Rational c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Leading data w.r.t. degrevlex.
    const Term& lt() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().m; }
    const Rational& lc() const { return terms_.front().c; }

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

    Polynomial scaled(const Rational& c) const;
    Polynomial term_mul(const Rational& c, const Monomial& m) const;

    int64_t total_degree() const; // max over terms; -1 for zero

    // Weight of a homogeneous polynomial, nullopt if inhomogeneous.
    // Zero polynomial counts as homogeneous of every weight (returns 0).
    std::optional<int64_t> homogeneous_weight(const std::vector<int>& w) const;

    std::map<int64_t, Polynomial> homogeneous_components(const std::vector<int>& w) const;

    bool operator==(const Polynomial& g) const {
        if (terms_.size() != g.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].m == g.terms_[i].m) || terms_[i].c != g.terms_[i].c) return false;
        return true;
    }

  private:
    std::vector<Term> terms_;
};

// Text form per the CLI grammar: terms joined by +/-, '^' powers, '*' optional.
std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

} // namespace gsod
