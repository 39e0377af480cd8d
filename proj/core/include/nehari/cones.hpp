#pragma once

#include <cstdint>
#include <vector>

#include "nehari/grid_function.hpp"
#include "nehari/operators.hpp"

namespace nehari {

enum class ConeKind {
  /// Nonnegative, symmetric, concave, u(t) >= phi(t) |u|_{1,p} on [0,1/2];
  /// normalized in the W1p norm.
  Plaplacian,
  /// Nonnegative with min over [1/4,3/4] >= |u|_sup / 4; normalized in the
  /// sup norm.
  Kernel
};

struct ConeSpec {
  ConeKind kind = ConeKind::Kernel;
  double p = 2.0;           // W1p exponent (plaplacian cone only)
  double tolerance = 1e-9;  // relative membership tolerance

  NormKind norm_kind() const {
    return kind == ConeKind::Plaplacian ? NormKind::W1p : NormKind::Sup;
  }
  double cone_norm(const GridFunction& u) const {
    return norm(u, norm_kind(), p);
  }
};

/// Per-predicate margins; a predicate passes when its margin >= -tol where
/// tol is the cone tolerance scaled by |u|_sup. Margins not applicable to a
/// cone kind are reported as 0.
struct MembershipReport {
  bool member = false;
  double nonneg_min = 0.0;        // min u
  double symmetry_defect = 0.0;   // max |u(t) - u(1-t)|
  double concavity_defect = 0.0;  // max second difference
  double harnack_margin = 0.0;    // min (u - phi |u|_{1,p}) on [0,1/2]
  double quarter_min_margin = 0.0;  // min_{[1/4,3/4]} u - |u|_sup/4
};

MembershipReport check_membership(const GridFunction& u, const ConeSpec& cone);

/// u / |u| in the cone's norm; throws ZeroDirectionError on the zero function.
GridFunction normalize(const GridFunction& u, const ConeSpec& cone);

/// Deterministic-for-seed unit-norm cone members, built as images of the
/// cone-invariant base maps (so membership holds by construction). Sampling
/// is splittable: sample i depends only on (seed, i).
std::vector<GridFunction> sample_directions(const ConeSpec& cone, int count,
                                            std::uint64_t seed, int grid_n);

/// Mixes a seed and a sample index into an independent 64-bit stream seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace nehari
