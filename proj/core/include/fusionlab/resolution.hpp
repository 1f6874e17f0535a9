#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fusionlab/fp_linalg.hpp"
#include "fusionlab/group.hpp"

namespace fusionlab {

/// A free resolution R_n → … → R_0 → F_p of the trivial module over F_p[G].
///
/// R_n is free of rank rank(n); an element is stored as a vector of length
/// rank(n)·|G| with coordinate i·|G| + k holding the coefficient of
/// g_k·e_i, where g_k = group().members()[k]. Generators of each kernel are
/// chosen as lifts of a basis of K/JK (J the augmentation ideal), which gives
/// the minimal resolution for p-groups; for other groups the set is
/// completed greedily until it generates.
class FreeResolution {
 public:
  FreeResolution(Subgroup g, Prime p, int length);

  const Subgroup& group() const { return group_; }
  Prime prime() const { return p_; }
  int length() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const { return ranks_.at(static_cast<std::size_t>(n)); }

  /// ∂(e_j) ∈ R_{n-1} for each generator e_j of R_n, n ≥ 1.
  const std::vector<Vector>& boundaries(int n) const { return boundaries_.at(static_cast<std::size_t>(n)); }
  /// ∂_n : R_n → R_{n-1} as an F_p-matrix, n ≥ 1.
  const FpMatrix& boundary_matrix(int n) const { return matrices_.at(static_cast<std::size_t>(n)); }

  /// g·v for v ∈ R_n of the given rank.
  Vector translate(ElementId g, const Vector& v, std::size_t rank) const;

  /// Chain map F: R(source) → R(this) covering φ: source.group() → group(),
  /// i.e. F(h·x) = φ(h)·F(x), in degrees 0..n. result[k][j] = F_k(e_j).
  std::vector<std::vector<Vector>> lift(const FreeResolution& source, const GroupHom& phi, int n) const;

 private:
  std::vector<Vector> choose_generators(const FpSubspace& kernel, std::size_t rank) const;

  Subgroup group_;
  Prime p_;
  std::vector<std::size_t> mult_;  // position table: mult_[a*N+b] = pos(g_a g_b)
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<Vector>> boundaries_;
  std::vector<FpMatrix> matrices_;
  std::vector<std::shared_ptr<const SpanCoordinates>> solvers_;
};

}  // namespace fusionlab
