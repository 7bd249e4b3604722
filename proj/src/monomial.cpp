#include "gsod/monomial.hpp"

#include <stdexcept>

namespace gsod {

int64_t Monomial::weight(const std::vector<int>& w) const {
    if (w.size() != e.size())
        throw std::invalid_argument("weight vector length does not match variable count");
    int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += int64_t(w[i]) * e[i];
    return s;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    // Equal degree: a > b iff the last nonzero entry of a-b is negative.
    for (std::size_t i = a.e.size(); i-- > 0;) {
        int32_t d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace gsod
