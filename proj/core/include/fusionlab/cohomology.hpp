#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusionlab/fp_linalg.hpp"
#include "fusionlab/fp_module.hpp"
#include "fusionlab/fusion_system.hpp"
#include "fusionlab/resolution.hpp"

namespace fusionlab {

/// How cochains are modelled.
///   Bar:        normalized bar cochains, functions (P∖1)^n → M.
///   Resolution: Hom_P(R_n, M) for the minimal free resolution R of P.
/// Both compute H^n(P;M); pullbacks along homomorphisms agree on classes.
enum class Engine { Resolution, Bar };

std::string to_string(Engine e);
Engine engine_from_string(const std::string& name);

/// Cochain complex C^0 → C^1 → … computing H^*(P;M) for the acting group P
/// of a module. Differentials are built for degrees 0..max_degree; d∘d = 0 is
/// verified at construction.
class CochainComplex {
 public:
  virtual ~CochainComplex() = default;
  CochainComplex(const CochainComplex&) = delete;
  CochainComplex& operator=(const CochainComplex&) = delete;

  virtual Engine engine() const = 0;

  const FpModule& module() const { return module_; }
  const Subgroup& group() const { return module_.acting_group(); }
  Prime prime() const { return module_.prime(); }
  int max_degree() const { return max_degree_; }

  /// dim C^n for n in 0..max_degree+1.
  std::size_t cochain_dim(int n) const { return dims_.at(static_cast<std::size_t>(n)); }
  /// d^n : C^n → C^{n+1} for n in 0..max_degree.
  const FpMatrix& differential(int n) const { return diffs_.at(static_cast<std::size_t>(n)); }

  /// Cochain maps C^k(this) → C^k(target) induced by φ: target.group() → group(),
  /// for k = 0..max_n. Only a chain map when the target's action agrees with
  /// the action pulled back along φ; callers check this.
  virtual std::vector<FpMatrix> pullbacks(const CochainComplex& target, const GroupHom& phi, int max_n) const = 0;

  /// Estimated bytes for building and reducing the complex up to max_degree.
  virtual double payload_bytes() const = 0;

  /// Recomputes d^{n+1}∘d^n for all built degrees.
  bool square_zero() const;

 protected:
  CochainComplex(FpModule module, int max_degree);
  void check_square_zero() const;

  FpModule module_;
  int max_degree_;
  std::vector<std::size_t> dims_;
  std::vector<FpMatrix> diffs_;
};

class BarComplex final : public CochainComplex {
 public:
  BarComplex(FpModule module, int max_degree, const Limits& limits = {});
  Engine engine() const override { return Engine::Bar; }
  std::vector<FpMatrix> pullbacks(const CochainComplex& target, const GroupHom& phi, int max_n) const override;
  double payload_bytes() const override;

  /// Estimated payload of a bar complex without building it.
  static double estimate_bytes(std::size_t group_order, std::size_t dim, int max_degree);

 private:
  FpMatrix build_differential(int n) const;
};

class ResolutionComplex final : public CochainComplex {
 public:
  ResolutionComplex(FpModule module, int max_degree, const Limits& limits = {});
  Engine engine() const override { return Engine::Resolution; }
  std::vector<FpMatrix> pullbacks(const CochainComplex& target, const GroupHom& phi, int max_n) const override;
  double payload_bytes() const override;
  const FreeResolution& resolution() const { return resolution_; }

 private:
  /// Σ_k coeff(g_k·e_i) · action(g_k) as a d×d block of triplets.
  void add_block(std::vector<FpMatrix::Triplet>& out, std::size_t row0, std::size_t col0, const Vector& element,
                 std::size_t i) const;

  FreeResolution resolution_;
};

std::unique_ptr<CochainComplex> make_complex(Engine engine, const FpModule& module, int max_degree,
                                             const Limits& limits = {});

/// H^n = Z^n / B^n with chosen cocycle representatives.
class CohomologySpace {
 public:
  CohomologySpace(const CochainComplex& complex, int n);

  int degree() const { return degree_; }
  std::size_t ambient_dim() const { return cocycles_.ambient_dim(); }
  const FpSubspace& cocycles() const { return cocycles_; }
  const FpSubspace& coboundaries() const { return coboundaries_; }
  /// Cocycle representatives of a basis of H^n.
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Coordinates of the class of a cocycle in basis(). Throws InternalError
  /// when the vector is not a cocycle.
  Vector coordinates(const Vector& cocycle) const;

 private:
  int degree_;
  FpSubspace cocycles_;
  FpSubspace coboundaries_;
  std::vector<Vector> basis_;
  std::shared_ptr<const SpanCoordinates> coords_;
};

/// Matrix (target.dim × source.dim) of the map on classes induced by a
/// cochain map between the ambient cochain spaces.
FpMatrix induced_map(const CohomologySpace& source, const CohomologySpace& target, const FpMatrix& cochain_map);

struct CohomologyOptions {
  Engine engine = Engine::Resolution;
  int max_degree = 4;
  Limits limits;
};

/// H^n(P; M restricted to P).
CohomologySpace cohomology(const Subgroup& p, const FpModule& m, int n, const CohomologyOptions& options = {});

/// H^n(G; M) on the whole acting group of M by the normalized bar complex.
/// Independent of fusion data; used to cross-check stable elements.
CohomologySpace group_cohomology_direct(const FpModule& m, int n, const Limits& limits = {});

/// Cohomology of an S-module M together with the restriction and fusion maps
/// out of H^n(S;M). Complexes and classes are cached per subgroup, so an
/// instance must not be shared between threads.
class FusionCohomology {
 public:
  FusionCohomology(const FusionSystem& f, FpModule m, CohomologyOptions options = {});

  const FusionSystem& fusion() const { return *f_; }
  const FpModule& module() const { return m_; }
  const CohomologyOptions& options() const { return options_; }
  const ModuleCheck& centric_compatibility() const { return compat_centric_; }
  const ModuleCheck& full_compatibility() const { return compat_all_; }

  const CochainComplex& complex(std::size_t subgroup);
  const CohomologySpace& space(std::size_t subgroup, int n);
  const CohomologySpace& sylow_space(int n) { return space(f_->sylow_index(), n); }

  /// res: H^n(S;M) → H^n(P;M) for P = subgroups()[subgroup].
  FpMatrix restriction_map(std::size_t subgroup, int n);
  /// φ*: H^n(S;M) → H^n(P;M) for φ = homs_to_sylow(subgroup)[morphism].
  FpMatrix phi_star(std::size_t subgroup, std::size_t morphism, int n);
  /// φ* for any homomorphism from a subgroup P ≤ S into S.
  FpMatrix phi_star(const GroupHom& phi, int n);

  /// {z ∈ H^n(S;M) : res(z) = φ*(z) for all F-centric P, φ ∈ Hom_F(P,S)},
  /// as a subspace of class coordinates. Throws IncompatibleModule when M
  /// fails is_fusion_compatible.
  FpSubspace stable_elements(int n);
  /// Same with the quantifier over every P ≤ S.
  FpSubspace stable_elements_all_subgroups(int n);

 private:
  const std::vector<FpMatrix>& pullbacks_for(std::size_t subgroup, std::size_t morphism);
  FpSubspace stable_over(const std::vector<std::size_t>& subgroups, int n);
  void require_compatible(const GroupHom& phi) const;

  const FusionSystem* f_;
  FpModule m_;
  CohomologyOptions options_;
  ModuleCheck compat_centric_;
  ModuleCheck compat_all_;
  std::map<std::size_t, std::unique_ptr<CochainComplex>> complexes_;
  std::map<std::pair<std::size_t, int>, CohomologySpace> spaces_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FpMatrix>> pullbacks_;
};

FpSubspace stable_elements(const FusionSystem& f, const FpModule& m, int n, const CohomologyOptions& options = {});
FpSubspace stable_elements_all_subgroups(const FusionSystem& f, const FpModule& m, int n,
                                         const CohomologyOptions& options = {});

/// Human-readable description of a compatibility witness.
std::string describe_witness(const FusionSystem& f, const ModuleWitness& w);

}  // namespace fusionlab
