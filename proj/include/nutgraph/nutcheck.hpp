#pragma once

#include <nutgraph/graph.hpp>
#include <nutgraph/numeric.hpp>

#include <stdexcept>
#include <vector>

namespace nutgraph {

enum class NutOutcome {
    IsNut,
    Nonsingular,
    NullityAtLeastTwo,
    KernelHasZeroEntry,
};

/// Verdict of the nut-graph decision procedure.  `kernel` is the canonical
/// generator (primitive, first nonzero entry positive) and is only set when
/// the nullity is exactly 1, i.e. for IsNut and KernelHasZeroEntry.  With
/// nullity 2 or more, zero patterns depend on the basis choice, so only the
/// nullity is reported.
struct NutVerdict {
    NutOutcome outcome = NutOutcome::Nonsingular;
    Eigen::Index nullity = 0;
    IntVector kernel;
    std::vector<int> zero_positions;

    bool is_nut() const { return outcome == NutOutcome::IsNut; }
};

/// Decides whether g is a nut graph: adjacency nullity exactly 1 with a
/// kernel generator free of zero entries.  Purely algebraic; connectivity
/// is a consequence, not a precheck.
NutVerdict is_nut(const Graph& g);

/// True iff g is a nut graph and the stated vector generates its kernel
/// (compared after canonical normalization, so scale and sign do not
/// matter).  Throws on length mismatch.
bool verify_stated_kernel(const Graph& g, const IntVector& c);

enum class VTBranch {
    none,
    clause1,
    clause2,
    both,
};

/// Order/degree feasibility test for vertex-transitive nut graphs:
/// clause 1 is d ≡ 0 (mod 4), n even, n ≥ d+4; clause 2 is d even,
/// n ≡ 0 (mod 4), n ≥ d+6.
struct VTFeasibility {
    int n = 0;
    int d = 0;
    bool feasible = false;
    VTBranch branch = VTBranch::none;
};

VTFeasibility vt_feasible(int n, int d);

class NotRegularError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInKernelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// For a regular graph of positive degree and a kernel vector c, reports
/// whether the entries of c sum to zero.  They always do: c is orthogonal
/// to the all-ones eigenvector of the nonzero eigenvalue d.  Precondition
/// violations throw NotRegularError and NotInKernelError respectively.
bool kernel_sum_check(const Graph& g, const IntVector& c);

/// The vector (1, −1, 1, −1, …) of even length n.
IntVector alternating_vector(int n);

}  // namespace nutgraph
