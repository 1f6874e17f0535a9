#include "fusionlab/cohomology.hpp"

#include <cmath>
#include <sstream>

#include "fusionlab/group_io.hpp"

namespace fusionlab {

namespace {

constexpr double kMiB = 1024.0 * 1024.0;

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_budget(double bytes, const Limits& limits, const std::string& what) {
  const double cap = static_cast<double>(limits.budget_mb) * kMiB;
  if (bytes > cap) {
    std::ostringstream os;
    os << what << " needs about " << static_cast<long long>(std::ceil(bytes / kMiB)) << " MB, budget is "
       << limits.budget_mb << " MB";
    throw BudgetError(os.str());
  }
}

std::string element_name(const Group& g, ElementId x) {
  if (!g.permutations().empty()) return format_cycles(g.permutations()[x]);
  return "#" + std::to_string(x);
}

std::string subgroup_name(const Group& g, const Subgroup& s) {
  std::string out = "<";
  const auto gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += element_name(g, gens[i]);
  }
  return out + ">";
}

}  // namespace

std::string to_string(Engine e) { return e == Engine::Bar ? "bar" : "resolution"; }

Engine engine_from_string(const std::string& name) {
  if (name == "bar") return Engine::Bar;
  if (name == "resolution") return Engine::Resolution;
  throw InvalidInput("unknown cochain engine '" + name + "' (expected bar or resolution)");
}

CochainComplex::CochainComplex(FpModule module, int max_degree) : module_(std::move(module)), max_degree_(max_degree) {
  if (max_degree < 0) throw InvalidInput("cohomological degree must be non-negative");
}

bool CochainComplex::square_zero() const {
  for (std::size_t n = 0; n + 1 < diffs_.size(); ++n) {
    if (!(diffs_[n + 1] * diffs_[n]).is_zero()) return false;
  }
  return true;
}

void CochainComplex::check_square_zero() const {
  for (std::size_t n = 0; n + 1 < diffs_.size(); ++n) {
    if (!(diffs_[n + 1] * diffs_[n]).is_zero()) {
      throw InternalError("d∘d ≠ 0 in degree " + std::to_string(n) + " (" + to_string(engine()) + " engine)");
    }
  }
}

// ---- bar complex ----------------------------------------------------------
//
// A normalized n-cochain is a function on tuples (g_1..g_n) of non-identity
// elements. Tuples are numbered in base |P|-1 with g_1 most significant, digit
// = position(g) - 1; the cochain vector stores value components at
// tuple·d + r.

double BarComplex::estimate_bytes(std::size_t group_order, std::size_t dim, int max_degree) {
  if (group_order <= 1) return 0.0;
  const double base = static_cast<double>(group_order - 1);
  const double d = static_cast<double>(dim);
  double worst = 0.0;
  for (int k = 0; k <= max_degree; ++k) {
    const double cols = std::pow(base, k) * d;
    const double rows = cols * base;
    worst = std::max(worst, rows * (d + k + 1) * 8.0 + cols * cols * 4.0);
  }
  return worst;
}

double BarComplex::payload_bytes() const {
  return estimate_bytes(group().order(), module_.dim(), max_degree_);
}

BarComplex::BarComplex(FpModule module, int max_degree, const Limits& limits)
    : CochainComplex(std::move(module), max_degree) {
  const std::size_t n = group().order();
  const std::size_t d = module_.dim();
  const double bytes = estimate_bytes(n, d, max_degree);
  if (bytes > static_cast<double>(limits.budget_mb) * kMiB) {
    // Name the first degree that breaks the budget.
    int k = 0;
    while (k < max_degree && estimate_bytes(n, d, k) <= static_cast<double>(limits.budget_mb) * kMiB) ++k;
    check_budget(bytes, limits,
                 "bar complex for |P|=" + std::to_string(n) + ", dim M=" + std::to_string(d) + " in degree " +
                     std::to_string(k));
  }
  for (int k = 0; k <= max_degree + 1; ++k) dims_.push_back(ipow(n - 1, k) * d);
  for (int k = 0; k <= max_degree; ++k) diffs_.push_back(build_differential(k));
  check_square_zero();
}

FpMatrix BarComplex::build_differential(int n) const {
  const Subgroup& grp = group();
  const Group& g = grp.parent();
  const std::size_t base = grp.order() - 1;
  const std::size_t d = module_.dim();
  const std::size_t rows = dims_[static_cast<std::size_t>(n) + 1];
  const std::size_t cols = dims_[static_cast<std::size_t>(n)];
  if (rows == 0 || cols == 0) return FpMatrix(prime(), rows, cols);

  const std::size_t tuples = rows / d;
  std::vector<FpMatrix::Triplet> t;
  t.reserve(rows * (d + static_cast<std::size_t>(n) + 1));
  std::vector<std::size_t> digits(static_cast<std::size_t>(n) + 1);
  std::vector<ElementId> elems(digits.size());

  for (std::size_t tup = 0; tup < tuples; ++tup) {
    std::size_t rest = tup;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = rest % base;
      rest /= base;
      elems[i] = grp.members()[digits[i] + 1];
    }
    const std::size_t row0 = tup * d;

    // g_1 · c(g_2..g_{n+1})
    {
      std::size_t col_tup = 0;
      for (std::size_t i = 1; i < digits.size(); ++i) col_tup = col_tup * base + digits[i];
      const FpMatrix& a = module_.action(elems[0]);
      for (std::size_t r = 0; r < d; ++r) {
        for (const auto& e : a.sparse_row(r)) t.push_back({row0 + r, col_tup * d + e.col, e.value});
      }
    }
    // (-1)^i c(.., g_i g_{i+1}, ..)
    for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
      const ElementId prod = g.mul(elems[i], elems[i + 1]);
      if (prod == g.identity()) continue;
      std::size_t col_tup = 0;
      for (std::size_t j = 0; j < digits.size(); ++j) {
        if (j == i + 1) continue;
        const std::size_t dig = j == i ? grp.position(prod) - 1 : digits[j];
        col_tup = col_tup * base + dig;
      }
      const std::int64_t sign = (i + 1) % 2 ? -1 : 1;
      for (std::size_t r = 0; r < d; ++r) t.push_back({row0 + r, col_tup * d + r, sign});
    }
    // (-1)^{n+1} c(g_1..g_n)
    {
      std::size_t col_tup = 0;
      for (std::size_t i = 0; i + 1 < digits.size(); ++i) col_tup = col_tup * base + digits[i];
      const std::int64_t sign = (n + 1) % 2 ? -1 : 1;
      for (std::size_t r = 0; r < d; ++r) t.push_back({row0 + r, col_tup * d + r, sign});
    }
  }
  return FpMatrix::from_triplets(prime(), rows, cols, std::move(t));
}

std::vector<FpMatrix> BarComplex::pullbacks(const CochainComplex& target, const GroupHom& phi, int max_n) const {
  if (target.engine() != Engine::Bar) throw InvalidInput("pullback between different cochain engines");
  if (max_n > max_degree_ || max_n > target.max_degree()) throw InvalidInput("pullback requested beyond built degrees");
  if (!(phi.domain() == target.group())) throw InvalidInput("pullback: φ must be defined on the target's group");
  if (target.module().dim() != module_.dim()) throw InvalidInput("pullback between modules of different dimension");
  const Subgroup& src = group();
  const Subgroup& dst = target.group();
  const std::size_t sb = src.order() - 1;
  const std::size_t tb = dst.order() - 1;
  const std::size_t d = module_.dim();

  // Digit of φ(h) in the source numbering, or npos when φ(h) = 1.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image_digit(dst.order(), npos);
  for (std::size_t k = 1; k < dst.order(); ++k) {
    const ElementId y = phi.images()[k];
    if (!src.contains(y)) throw InvalidInput("pullback: φ does not land in the complex's group");
    if (y != src.parent().identity()) image_digit[k] = src.position(y) - 1;
  }

  std::vector<FpMatrix> out;
  for (int k = 0; k <= max_n; ++k) {
    const std::size_t rows = target.cochain_dim(k);
    const std::size_t cols = cochain_dim(k);
    std::vector<FpMatrix::Triplet> t;
    const std::size_t tuples = d ? rows / d : 0;
    for (std::size_t tup = 0; tup < tuples; ++tup) {
      std::size_t rest = tup;
      std::size_t col_tup = 0;
      std::size_t scale = 1;
      bool degenerate = false;
      for (int i = 0; i < k; ++i) {
        const std::size_t dig = image_digit[rest % tb + 1];
        rest /= tb;
        if (dig == npos) {
          degenerate = true;
          break;
        }
        col_tup += dig * scale;
        scale *= sb;
      }
      if (degenerate) continue;
      for (std::size_t r = 0; r < d; ++r) t.push_back({tup * d + r, col_tup * d + r, 1});
    }
    out.push_back(FpMatrix::from_triplets(prime(), rows, cols, std::move(t)));
  }
  return out;
}

// ---- resolution complex ---------------------------------------------------
//
// C^n = Hom_P(R_n, M) ≅ M^{rank n}, f ↦ (f(e_1), .., f(e_r)). For
// ∂e_j = Σ_{i,k} b[i·N+k] g_k e_i the differential has block (j,i) equal to
// Σ_k b[i·N+k]·action(g_k).

ResolutionComplex::ResolutionComplex(FpModule module, int max_degree, const Limits& limits)
    : CochainComplex(std::move(module), max_degree), resolution_(group(), prime(), max_degree + 1) {
  check_budget(payload_bytes(), limits,
               "resolution complex for |P|=" + std::to_string(group().order()) + ", dim M=" +
                   std::to_string(module_.dim()));
  const std::size_t d = module_.dim();
  for (int k = 0; k <= max_degree + 1; ++k) dims_.push_back(resolution_.rank(k) * d);
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<FpMatrix::Triplet> t;
    const auto& bounds = resolution_.boundaries(k + 1);
    for (std::size_t j = 0; j < bounds.size(); ++j) {
      for (std::size_t i = 0; i < resolution_.rank(k); ++i) add_block(t, j * d, i * d, bounds[j], i);
    }
    diffs_.push_back(FpMatrix::from_triplets(prime(), dims_[k + 1], dims_[k], std::move(t)));
  }
  check_square_zero();
}

double ResolutionComplex::payload_bytes() const {
  const double n = static_cast<double>(group().order());
  const double d = static_cast<double>(module_.dim());
  double total = 0.0;
  for (int k = 1; k <= resolution_.length(); ++k) {
    const double r0 = static_cast<double>(resolution_.rank(k - 1));
    const double r1 = static_cast<double>(resolution_.rank(k));
    total += r0 * n * r1 * n * 4.0 + r0 * d * r1 * d * 4.0;
  }
  return total;
}

void ResolutionComplex::add_block(std::vector<FpMatrix::Triplet>& out, std::size_t row0, std::size_t col0,
                                  const Vector& element, std::size_t i) const {
  const Subgroup& grp = group();
  const std::size_t n = grp.order();
  const std::size_t d = module_.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Residue c = element[i * n + k];
    if (c == 0) continue;
    const FpMatrix& a = module_.action(grp.members()[k]);
    for (std::size_t r = 0; r < d; ++r) {
      for (const auto& e : a.sparse_row(r)) {
        out.push_back({row0 + r, col0 + e.col, static_cast<std::int64_t>(fp::mul(c, e.value, prime()))});
      }
    }
  }
}

std::vector<FpMatrix> ResolutionComplex::pullbacks(const CochainComplex& target, const GroupHom& phi,
                                                   int max_n) const {
  if (target.engine() != Engine::Resolution) throw InvalidInput("pullback between different cochain engines");
  if (max_n > max_degree_ || max_n > target.max_degree()) throw InvalidInput("pullback requested beyond built degrees");
  if (target.module().dim() != module_.dim()) throw InvalidInput("pullback between modules of different dimension");
  const auto& tgt = static_cast<const ResolutionComplex&>(target);
  const auto lifted = resolution_.lift(tgt.resolution(), phi, max_n);
  const std::size_t d = module_.dim();
  std::vector<FpMatrix> out;
  for (int k = 0; k <= max_n; ++k) {
    std::vector<FpMatrix::Triplet> t;
    const auto& images = lifted[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < images.size(); ++j) {
      for (std::size_t i = 0; i < resolution_.rank(k); ++i) add_block(t, j * d, i * d, images[j], i);
    }
    out.push_back(FpMatrix::from_triplets(prime(), target.cochain_dim(k), cochain_dim(k), std::move(t)));
  }
  return out;
}

std::unique_ptr<CochainComplex> make_complex(Engine engine, const FpModule& module, int max_degree,
                                             const Limits& limits) {
  if (engine == Engine::Bar) return std::make_unique<BarComplex>(module, max_degree, limits);
  return std::make_unique<ResolutionComplex>(module, max_degree, limits);
}

// ---- cohomology classes ---------------------------------------------------

CohomologySpace::CohomologySpace(const CochainComplex& complex, int n)
    : degree_(n),
      cocycles_(complex.prime(), 0),
      coboundaries_(complex.prime(), 0) {
  if (n < 0 || n > complex.max_degree()) {
    throw InvalidInput("degree " + std::to_string(n) + " outside the built range 0.." +
                       std::to_string(complex.max_degree()));
  }
  cocycles_ = kernel(complex.differential(n));
  coboundaries_ = n == 0 ? FpSubspace(complex.prime(), complex.cochain_dim(0)) : image(complex.differential(n - 1));
  if (!cocycles_.contains(coboundaries_)) throw InternalError("coboundaries are not cocycles in degree " + std::to_string(n));
  basis_ = quotient_basis(cocycles_, coboundaries_);
  std::vector<Vector> gens = basis_;
  gens.insert(gens.end(), coboundaries_.basis().begin(), coboundaries_.basis().end());
  coords_ = std::make_shared<const SpanCoordinates>(complex.prime(), cocycles_.ambient_dim(), gens);
}

Vector CohomologySpace::coordinates(const Vector& cocycle) const {
  auto x = coords_->coordinates(cocycle);
  if (!x) throw InternalError("vector is not a cocycle in degree " + std::to_string(degree_));
  x->resize(basis_.size());
  return *x;
}

FpMatrix induced_map(const CohomologySpace& source, const CohomologySpace& target, const FpMatrix& cochain_map) {
  if (cochain_map.cols() != source.ambient_dim() || cochain_map.rows() != target.ambient_dim()) {
    throw InvalidInput("cochain map has the wrong shape for the given cohomology spaces");
  }
  FpMatrix out(cochain_map.prime(), target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const Vector c = target.coordinates(cochain_map.apply(source.basis()[j]));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) out.set(i, j, c[i]);
    }
  }
  return out;
}

CohomologySpace cohomology(const Subgroup& p, const FpModule& m, int n, const CohomologyOptions& options) {
  const FpModule res = p == m.acting_group() ? m : restrict_module(m, p);
  auto complex = make_complex(options.engine, res, n, options.limits);
  return CohomologySpace(*complex, n);
}

CohomologySpace group_cohomology_direct(const FpModule& m, int n, const Limits& limits) {
  BarComplex complex(m, n, limits);
  return CohomologySpace(complex, n);
}

// ---- fusion ---------------------------------------------------------------

FusionCohomology::FusionCohomology(const FusionSystem& f, FpModule m, CohomologyOptions options)
    : f_(&f), m_(std::move(m)), options_(options) {
  compat_centric_ = is_fusion_compatible(m_, f, false);
  compat_all_ = is_fusion_compatible(m_, f, true);
}

const CochainComplex& FusionCohomology::complex(std::size_t subgroup) {
  auto it = complexes_.find(subgroup);
  if (it == complexes_.end()) {
    const Subgroup& p = f_->subgroups().at(subgroup);
    const FpModule res = subgroup == f_->sylow_index() ? m_ : restrict_module(m_, p);
    it = complexes_.emplace(subgroup, make_complex(options_.engine, res, options_.max_degree, options_.limits)).first;
  }
  return *it->second;
}

const CohomologySpace& FusionCohomology::space(std::size_t subgroup, int n) {
  const auto key = std::make_pair(subgroup, n);
  auto it = spaces_.find(key);
  if (it == spaces_.end()) it = spaces_.emplace(key, CohomologySpace(complex(subgroup), n)).first;
  return it->second;
}

void FusionCohomology::require_compatible(const GroupHom& phi) const {
  const Subgroup& p = phi.domain();
  for (std::size_t t = 0; t < p.order(); ++t) {
    const ElementId x = p.members()[t];
    if (!(m_.action(phi.images()[t]) == m_.action(x))) {
      const Group& g = f_->group();
      throw IncompatibleModule("module " + (m_.label().empty() ? std::string("M") : m_.label()) +
                               " is not compatible with the morphism on " + subgroup_name(g, p) + ": " +
                               element_name(g, x) + " and its image " + element_name(g, phi.images()[t]) +
                               " act differently");
    }
  }
}

const std::vector<FpMatrix>& FusionCohomology::pullbacks_for(std::size_t subgroup, std::size_t morphism) {
  const auto key = std::make_pair(subgroup, morphism);
  auto it = pullbacks_.find(key);
  if (it == pullbacks_.end()) {
    const GroupHom& phi = f_->homs_to_sylow(subgroup).at(morphism);
    require_compatible(phi);
    const CochainComplex& target = complex(subgroup);
    const CochainComplex& src = complex(f_->sylow_index());
    it = pullbacks_.emplace(key, src.pullbacks(target, phi, options_.max_degree)).first;
  }
  return it->second;
}

FpMatrix FusionCohomology::restriction_map(std::size_t subgroup, int n) {
  const Subgroup& p = f_->subgroups().at(subgroup);
  const GroupHom inc = GroupHom::inclusion(p, f_->sylow());
  const auto& homs = f_->homs_to_sylow(subgroup);
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (homs[k] == inc) return induced_map(sylow_space(n), space(subgroup, n), pullbacks_for(subgroup, k)[n]);
  }
  throw InternalError("inclusion missing from Hom_F(P,S)");
}

FpMatrix FusionCohomology::phi_star(std::size_t subgroup, std::size_t morphism, int n) {
  return induced_map(sylow_space(n), space(subgroup, n), pullbacks_for(subgroup, morphism)[n]);
}

FpMatrix FusionCohomology::phi_star(const GroupHom& phi, int n) {
  require_compatible(phi);
  const std::size_t i = f_->index_of(phi.domain());
  const auto maps = complex(f_->sylow_index()).pullbacks(complex(i), phi, n);
  return induced_map(sylow_space(n), space(i, n), maps[n]);
}

FpSubspace FusionCohomology::stable_over(const std::vector<std::size_t>& subgroups, int n) {
  const CohomologySpace& top = sylow_space(n);
  std::vector<FpMatrix> blocks;
  for (auto i : subgroups) {
    const auto& homs = f_->homs_to_sylow(i);
    FpMatrix res = restriction_map(i, n);
    for (std::size_t k = 0; k < homs.size(); ++k) {
      if (homs[k].is_identity_map()) continue;
      FpMatrix diff = res - phi_star(i, k, n);
      if (!diff.is_zero()) blocks.push_back(std::move(diff));
    }
  }
  if (blocks.empty()) return FpSubspace::whole(m_.prime(), top.dim());
  return kernel(vstack(blocks, m_.prime(), top.dim()));
}

FpSubspace FusionCohomology::stable_elements(int n) {
  if (!compat_centric_.ok) {
    throw IncompatibleModule("module is not compatible with the fusion system on centric subgroups: " +
                             describe_witness(*f_, *compat_centric_.witness));
  }
  return stable_over(centric_subgroups(*f_), n);
}

FpSubspace FusionCohomology::stable_elements_all_subgroups(int n) {
  if (!compat_all_.ok) {
    throw IncompatibleModule("module is not compatible with the fusion system: " +
                             describe_witness(*f_, *compat_all_.witness));
  }
  std::vector<std::size_t> all(f_->subgroups().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return stable_over(all, n);
}

FpSubspace stable_elements(const FusionSystem& f, const FpModule& m, int n, const CohomologyOptions& options) {
  CohomologyOptions opts = options;
  opts.max_degree = std::max(opts.max_degree, n);
  FusionCohomology calc(f, m, opts);
  return calc.stable_elements(n);
}

FpSubspace stable_elements_all_subgroups(const FusionSystem& f, const FpModule& m, int n,
                                         const CohomologyOptions& options) {
  CohomologyOptions opts = options;
  opts.max_degree = std::max(opts.max_degree, n);
  FusionCohomology calc(f, m, opts);
  return calc.stable_elements_all_subgroups(n);
}

std::string describe_witness(const FusionSystem& f, const ModuleWitness& w) {
  const Group& g = f.group();
  std::ostringstream os;
  if (w.subgroup) {
    const Subgroup& p = f.subgroups()[*w.subgroup];
    os << "P = " << subgroup_name(g, p) << " (order " << p.order() << ")";
    if (w.morphism) {
      const GroupHom& phi = f.homs_to_sylow(*w.subgroup)[*w.morphism];
      os << ", φ = conjugation by " << element_name(g, f.conjugator(*w.subgroup, *w.morphism)) << ", x = "
         << element_name(g, w.element) << ", φ(x) = " << element_name(g, phi(w.element));
    }
    os << ": actions differ in column " << w.column;
  } else {
    os << "element " << element_name(g, w.element) << " of the focal subgroup acts nontrivially (column " << w.column
       << ")";
  }
  return os.str();
}

}  // namespace fusionlab
