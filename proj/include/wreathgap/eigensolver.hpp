#pragma once
// Dense Hermitian eigenvalue routines.
//
// Small matrices go through a cyclic complex Jacobi sweep; large real symmetric
// ones through Householder tridiagonalization and implicit QL. Large complex
// Hermitian matrices are embedded as the real symmetric [[Re, -Im], [Im, Re]],
// whose spectrum is the original one with every eigenvalue doubled.

#include <vector>

#include "wreathgap/kernels.hpp"
#include "wreathgap/linalg.hpp"

namespace wreathgap::spectral {

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column j belongs to values[j]
};

/// Largest dimension routed to the Jacobi solver by hermitian_eigenvalues.
inline constexpr std::size_t kJacobiMaxDim = 64;

/// All eigenvalues of a Hermitian matrix, ascending. The input is symmetrized to
/// (M + M†)/2 first; it is rejected if ‖M − M†‖_max > 1e-8·(1 + ‖M‖_max).
std::vector<double> hermitian_eigenvalues(const CMatrix& m,
                                          const kernels::KernelTable& k = kernels::active());

EigenSystem hermitian_eigensystem(const CMatrix& m,
                                  const kernels::KernelTable& k = kernels::active());

std::vector<double> jacobi_eigenvalues(const CMatrix& m,
                                       const kernels::KernelTable& k = kernels::active());

/// Real symmetric input; only the upper triangle is read.
std::vector<double> symmetric_eigenvalues(const RMatrix& m,
                                          const kernels::KernelTable& k = kernels::active());

}  // namespace wreathgap::spectral
