#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace gsod {

// Exponent vector. Nonnegative in ring elements; localized Cech terms use
// negative exponents on inverted variables (handled by the torus engine,
// never stored in a Polynomial).
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int32_t> v) : e(std::move(v)) {}

    std::size_t nvars() const { return e.size(); }

    int64_t total_degree() const {
        int64_t d = 0;
        for (int32_t x : e) d += x;
        return d;
    }

    int64_t weight(const std::vector<int>& w) const;

    bool is_one() const {
        for (int32_t x : e)
            if (x != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    // Caller must ensure m | *this.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    bool operator==(const Monomial& m) const = default;
};

// Graded reverse lexicographic order on total exponent degree. Independent of
// the Z-weights by design: those may be negative and would not well-order.
// Returns <0, 0, >0 like a comparator; positive means a > b.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

struct DegrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_cmp(a, b) < 0;
    }
};

} // namespace gsod
