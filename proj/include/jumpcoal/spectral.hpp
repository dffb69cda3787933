#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jumpcoal/field.hpp"
#include "jumpcoal/grid.hpp"
#include "jumpcoal/kernels.hpp"

namespace jumpcoal {

/// Unnormalized forward DFT: F_k = sum_i f_i exp(-2 pi I k i / N).
std::vector<std::complex<double>> dft_forward(std::span<const double> f);

/// Inverse DFT with the 1/N factor; returns the real parts (the imaginary
/// residue of spectra coming from real data is at rounding level).
std::vector<double> dft_inverse(std::span<const std::complex<double>> F);

/// Precomputed kernel spectra and scratch for the convolution-theorem
/// evaluation of the coalescence-free right-hand side under periodic
/// boundaries.
///
/// Kernels are sampled at lattice offsets j h in wraparound order (zero
/// offset in bin 0, negative offsets in the upper half), which is what makes
/// the circular convolution theorem line up with the knot indexing. Getting
/// this ordering wrong shifts every convolution by half the domain.
class SpectralWorkspace {
public:
    /// Samples and transforms the jump and repulsion kernels once.
    static SpectralWorkspace build(const KernelSpec& jump,
                                   const KernelSpec& repulsion,
                                   const Grid& grid);

    SpectralWorkspace(SpectralWorkspace&&) noexcept;
    SpectralWorkspace& operator=(SpectralWorkspace&&) noexcept;
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;
    ~SpectralWorkspace();

    const Grid& grid() const;
    std::span<const std::complex<double>> jump_spectrum() const;
    std::span<const std::complex<double>> repulsion_spectrum() const;

    /// One evaluation owns the scratch buffers exclusively; clone the
    /// workspace for concurrent evaluations.
    RateField evaluate(const DensityField& field);

    SpectralWorkspace clone() const;

private:
    struct Impl;
    explicit SpectralWorkspace(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;
};

/// Rate field from the spectral path: requires periodic boundaries and a
/// disabled coalescence kernel (enforced by the caller assembling the run).
RateField compute_rhs_spectral(const DensityField& field,
                               SpectralWorkspace& ws);

} // namespace jumpcoal
