#include <nutgraph/cyclotomic.hpp>

#include <nutgraph/generate.hpp>

#include <stdexcept>
#include <string>

namespace nutgraph {

namespace {

// Quotient of a polynomial by a monic divisor; requires exact division.
std::vector<Int> divide_monic(const std::vector<Int>& num,
                              const std::vector<Int>& den) {
    const size_t dn = num.size() - 1;
    const size_t dd = den.size() - 1;
    std::vector<Int> rem = num;
    std::vector<Int> quo(dn - dd + 1, Int(0));
    for (size_t i = dn + 1; i-- > dd;) {
        const Int c = rem[i];
        if (c == 0)
            continue;
        quo[i - dd] = c;
        for (size_t k = 0; k <= dd; ++k)
            rem[i - dd + k] -= c * den[k];
    }
    for (const Int& r : rem)
        if (r != 0)
            throw std::logic_error("divide_monic: division is not exact");
    return quo;
}

// True when the monic divisor with small coefficients divides the integer
// polynomial `work` (consumed as the remainder buffer).  128-bit entries:
// divisor coefficients lie in {−1, 0, 1}, so magnitudes at most double per
// step and the order cap keeps everything far below the 128-bit limit.
bool divides_monic(const std::vector<long long>& den,
                   std::vector<__int128> work) {
    const size_t dd = den.size() - 1;
    if (work.size() <= dd) {
        for (const __int128& w : work)
            if (w != 0)
                return false;
        return true;
    }
    for (size_t i = work.size(); i-- > dd;) {
        const __int128 c = work[i];
        if (c == 0)
            continue;
        work[i] = 0;
        for (size_t k = 0; k < dd; ++k)
            work[i - dd + k] -= c * den[k];
    }
    for (size_t k = 0; k < dd; ++k)
        if (work[k] != 0)
            return false;
    return true;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::vector<Int> poly(static_cast<size_t>(m) + 1, Int(0));
    poly.front() = -1;
    poly.back() = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            poly = divide_monic(poly, cyclotomic_polynomial(d));
    return poly;
}

CirculantNullity::CirculantNullity(int n) : n_(n) {
    if (n < 3 || n > 104)
        throw std::invalid_argument("CirculantNullity: order " +
                                    std::to_string(n) +
                                    " outside the supported range 3..104");
    for (int m = 2; m <= n; ++m) {
        if (n % m != 0)
            continue;
        Factor factor;
        factor.m = m;
        for (const Int& c : cyclotomic_polynomial(m))
            factor.poly.push_back(c.convert_to<long long>());
        factors_.push_back(std::move(factor));
    }
}

std::vector<long long> CirculantNullity::symbol(
    const std::vector<int>& jumps) const {
    validate({n_, jumps});
    std::vector<long long> f(static_cast<size_t>(n_), 0);
    for (int a : jumps) {
        f[static_cast<size_t>(a)] = 1;
        f[static_cast<size_t>(n_ - a)] = 1;
    }
    return f;
}

int CirculantNullity::nullity(const std::vector<int>& jumps) const {
    const auto f = symbol(jumps);
    int total = 0;
    for (const Factor& factor : factors_) {
        std::vector<__int128> work(f.begin(), f.end());
        if (divides_monic(factor.poly, std::move(work)))
            total += static_cast<int>(factor.poly.size()) - 1;
    }
    return total;
}

bool CirculantNullity::is_nut(const std::vector<int>& jumps) const {
    if (n_ % 2 != 0)
        return false;
    const auto f = symbol(jumps);
    long long at_minus_one = 0;
    for (size_t k = 0; k < f.size(); ++k)
        at_minus_one += (k % 2 == 0) ? f[k] : -f[k];
    if (at_minus_one != 0)
        return false;
    for (const Factor& factor : factors_) {
        if (factor.m <= 2)
            continue;
        std::vector<__int128> work(f.begin(), f.end());
        if (divides_monic(factor.poly, std::move(work)))
            return false;
    }
    return true;
}

}  // namespace nutgraph
