#include <nutgraph/nutcheck.hpp>

#include <nutgraph/kernel.hpp>

#include <string>

namespace nutgraph {

NutVerdict is_nut(const Graph& g) {
    NutVerdict v;
    if (g.order() == 0)
        return v;

    const auto kd = kernel_basis(adjacency_matrix(g));
    v.nullity = kd.nullity;
    if (kd.nullity == 0) {
        v.outcome = NutOutcome::Nonsingular;
        return v;
    }
    if (kd.nullity >= 2) {
        v.outcome = NutOutcome::NullityAtLeastTwo;
        return v;
    }

    v.kernel = kd.basis[0];
    for (int i = 0; i < g.order(); ++i)
        if (v.kernel[i] == 0)
            v.zero_positions.push_back(i);
    v.outcome = v.zero_positions.empty() ? NutOutcome::IsNut
                                         : NutOutcome::KernelHasZeroEntry;
    return v;
}

bool verify_stated_kernel(const Graph& g, const IntVector& c) {
    if (c.size() != g.order())
        throw std::invalid_argument(
            "verify_stated_kernel: vector length " + std::to_string(c.size()) +
            " does not match graph order " + std::to_string(g.order()));
    const NutVerdict v = is_nut(g);
    return v.is_nut() && vectors_equal(normalize_primitive(c), v.kernel);
}

VTFeasibility vt_feasible(int n, int d) {
    VTFeasibility out;
    out.n = n;
    out.d = d;
    const bool clause1 = d % 4 == 0 && n % 2 == 0 && n >= d + 4;
    const bool clause2 = d % 2 == 0 && n % 4 == 0 && n >= d + 6;
    if (clause1 && clause2)
        out.branch = VTBranch::both;
    else if (clause1)
        out.branch = VTBranch::clause1;
    else if (clause2)
        out.branch = VTBranch::clause2;
    out.feasible = out.branch != VTBranch::none;
    return out;
}

bool kernel_sum_check(const Graph& g, const IntVector& c) {
    const auto profile = degree_profile(g);
    if (!profile.is_regular || profile.degree.value_or(0) == 0)
        throw NotRegularError(
            "kernel_sum_check: graph is not regular of positive degree");
    if (c.size() != g.order())
        throw NotInKernelError("kernel_sum_check: vector length " +
                               std::to_string(c.size()) +
                               " does not match graph order " +
                               std::to_string(g.order()));
    if (!is_zero_vector(mat_vec_mul(adjacency_matrix(g), c)))
        throw NotInKernelError(
            "kernel_sum_check: vector is not in the adjacency kernel");
    Int sum = 0;
    for (Eigen::Index i = 0; i < c.size(); ++i)
        sum += c[i];
    return sum == 0;
}

IntVector alternating_vector(int n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("alternating_vector: length " +
                                    std::to_string(n) + " is not even");
    IntVector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = (i % 2 == 0) ? 1 : -1;
    return v;
}

}  // namespace nutgraph
