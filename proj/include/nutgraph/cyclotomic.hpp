#pragma once

#include <nutgraph/numeric.hpp>

#include <vector>

namespace nutgraph {

/// Coefficients of the m-th cyclotomic polynomial, ascending by degree.
/// Computed exactly by dividing the cyclotomic factors of the proper
/// divisors out of x^m − 1.
std::vector<Int> cyclotomic_polynomial(int m);

/// Exact adjacency nullity of circulants on a fixed vertex count, with the
/// cyclotomic factor table built once and reused across many jump sets.
///
/// The adjacency eigenvalues of C(n, S) are the values of the symbol
/// polynomial f(x) = Σ_{k : r_k = 1} x^k at the n-th roots of unity, where
/// r is the first adjacency row.  A primitive m-th root of unity (m | n)
/// is a zero of f exactly when Φ_m divides f, and then all φ(m) of them
/// are, so the nullity is the total degree of the cyclotomic factors of f.
class CirculantNullity {
public:
    /// Supported orders are 3 … 104: every cyclotomic coefficient in that
    /// range lies in {−1, 0, 1}, so remainder coefficients at most double
    /// per reduction step and stay within 128 bits.
    explicit CirculantNullity(int n);

    int order() const { return n_; }

    /// Nullity of C(n, S).  Jumps are validated like CirculantSpec.
    int nullity(const std::vector<int>& jumps) const;

    /// True exactly when C(n, S) is a nut graph; agrees with running the
    /// full kernel computation on the built graph.  Nullity 1 requires the
    /// zero eigenvalue to sit at the unpaired root −1 (all other
    /// eigenvalues come in conjugate pairs), and its eigenvector is the
    /// alternating ±1 vector, which never has a zero entry.  So the whole
    /// test is: n even, f(−1) = 0, and Φ_m ∤ f for every divisor m ≥ 3.
    bool is_nut(const std::vector<int>& jumps) const;

private:
    struct Factor {
        int m = 0;                     // divisor of n_, at least 2
        std::vector<long long> poly;   // Φ_m, ascending, degree φ(m)
    };

    std::vector<long long> symbol(const std::vector<int>& jumps) const;

    int n_;
    std::vector<Factor> factors_;
};

}  // namespace nutgraph
