#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crtube/presentation.hpp"

namespace crtube {

/// Radical of the second fundamental form at a, as a subspace of R^n.
Subspace levi_kernel(const Presentation& p, const Vector& a, double tol = kDefaultTol);

enum class ChainTerminal { zero, stabilized_nonzero, undecided };
std::string to_string(ChainTerminal t);

struct KernelChain {
  /// K^0 = T_aF, K^1, K^2, ... (last entry is the terminal space).
  std::vector<Subspace> spaces;
  ChainTerminal terminal = ChainTerminal::undecided;
  /// k with K^k = 0 and K^(k-1) != 0.
  std::optional<int> order;
  /// Generators used for the recursion.
  std::vector<std::size_t> subset;

  std::vector<std::size_t> dims() const;
};

/// K^(k+1) = { v in K^k : A_g v in K^k for every generator g in the subset }.
/// The subset defaults to a greedy independent set of generators at a.
KernelChain kernel_chain(const OrbitPresentation& p, const Vector& a, int max_k, double tol = kDefaultTol,
                         const std::vector<std::size_t>& subset = {});

enum class NondegKind { order, holomorphically_degenerate, undecided, unknown };
std::string to_string(NondegKind k);

struct NondegOptions {
  /// 0 means the ambient dimension.
  int max_k = 0;
  double tol = kDefaultTol;
  std::size_t samples = 8;
  std::uint64_t seed = 42;
};

struct NondegeneracyResult {
  NondegKind kind = NondegKind::unknown;
  int order = 0;
  int max_k = 0;
  /// Kernel dimensions at the point: K^0, K^1, ...
  std::vector<std::size_t> dims;
  /// Kernel dimensions agree at the point and at every sample.
  bool uniform = false;
  std::size_t points_checked = 0;
  /// How the verdict was obtained: "kernel_chain", "levi_nondegenerate",
  /// "line_kernel_cone", "levi_flat" or "none".
  std::string certificate = "none";
  std::string note;
};

/// Orbit presentations: kernel chain plus sampled uniformity check (a
/// mismatch throws). Level sets: only the certificates that need no chain.
NondegeneracyResult nondegeneracy_order(const Presentation& p, const Vector& a, const NondegOptions& opt = {});

}  // namespace crtube
