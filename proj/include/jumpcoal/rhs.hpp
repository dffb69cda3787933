#pragma once

#include <string>
#include <vector>

#include "jumpcoal/field.hpp"
#include "jumpcoal/grid.hpp"
#include "jumpcoal/kernels.hpp"

namespace jumpcoal {

/// Kernel samples at offsets j h with their quadrature weights, precomputed
/// once per (kernel set, grid, rule).
///
/// Sequences: jump a_j and loss b_j run to j_a = ceil(R_a/h) and
/// j_b = ceil(R_b/h); the coalescence gain uses b(2 j h) up to floor(j_b/2);
/// the repulsion potential phi_j runs to j_phi. Disabled kernels get empty
/// sequences. weighted_* hold xi_j * sample_j for the inner loops.
struct SampledKernels {
    Grid grid;

    std::vector<double> jump_samples, loss_samples, gain_samples,
        repulsion_samples;
    std::vector<double> weighted_jump, weighted_loss, weighted_gain,
        weighted_repulsion;
    WeightTable jump_table, loss_table, gain_table, repulsion_table;

    bool jump_on = false;
    bool coalescence_on = false;
    bool repulsion_on = false;

    int jump_range() const {
        return jump_on ? static_cast<int>(jump_samples.size()) - 1 : 0;
    }
    int loss_range() const {
        return coalescence_on ? static_cast<int>(loss_samples.size()) - 1 : 0;
    }
    int gain_range() const {
        return coalescence_on ? static_cast<int>(gain_samples.size()) - 1 : 0;
    }
    int repulsion_range() const {
        return repulsion_on ? static_cast<int>(repulsion_samples.size()) - 1
                            : 0;
    }
};

/// Samples the three kernels on the grid. Throws ConfigError when any enabled
/// kernel has truncation radius >= L/2 (the domain must be enlarged) or when
/// the mesh cannot resolve the coalescence kernel (j_b < 2).
SampledKernels build_workspace(const KernelSpec& jump,
                               const KernelSpec& coalescence,
                               const KernelSpec& repulsion, const Grid& grid,
                               QuadratureRule rule,
                               std::vector<std::string>* warnings = nullptr);

/// Oracle hook: forces one half-range for every enabled kernel (gain gets
/// half of it), so the result is comparable against compute_rhs_naive.
SampledKernels build_workspace_fixed_range(const KernelSpec& jump,
                                           const KernelSpec& coalescence,
                                           const KernelSpec& repulsion,
                                           const Grid& grid, int half_range,
                                           QuadratureRule rule);

/// Repulsion factors lambda_i = exp(-h [xi_0 phi_0 n_i +
/// sum_j xi_j phi_j (n_{i-j} + n_{i+j})]) with boundary-resolved neighbors.
/// Lies in (0, 1] for nonnegative fields; identically 1 when the potential is
/// disabled.
std::vector<double> compute_lambda(const DensityField& field,
                                   const SampledKernels& ws,
                                   BoundaryMode mode);

/// Discretized right-hand side: weighted truncated jump, coalescence loss and
/// gain sums. Lambda spill values are evaluated from its own definition at the
/// virtual indices, with the same boundary resolution applied inside the sum.
RateField compute_rhs(const DensityField& field, const SampledKernels& ws,
                      BoundaryMode mode);

/// Untruncated reference evaluator: signed-offset sums over the full
/// half-domain with unit weights and direct kernel evaluation. O(N^2) per
/// call; this is the independent oracle for compute_rhs, intended for small N.
RateField compute_rhs_naive(const DensityField& field, const KernelSpec& jump,
                            const KernelSpec& coalescence,
                            const KernelSpec& repulsion, BoundaryMode mode);

} // namespace jumpcoal
