#include "fusionlab/resolution.hpp"

#include <string>

namespace fusionlab {

FreeResolution::FreeResolution(Subgroup g, Prime p, int length) : group_(std::move(g)), p_(p) {
  if (length < 0) throw InvalidInput("resolution length must be non-negative");
  const Group& grp = group_.parent();
  const std::size_t n = group_.order();
  const auto& mem = group_.members();
  mult_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult_[a * n + b] = group_.position(grp.mul(mem[a], mem[b]));
  }

  ranks_.push_back(1);
  boundaries_.emplace_back();
  matrices_.emplace_back(p_, 0, n);
  solvers_.emplace_back();

  // Augmentation ideal: e_g - e_1.
  std::vector<Vector> aug;
  for (std::size_t k = 1; k < n; ++k) {
    Vector v(n, 0);
    v[k] = 1;
    v[0] = fp::neg(1, p_);
    aug.push_back(std::move(v));
  }
  FpSubspace cycles = FpSubspace::span(p_, n, aug);

  for (int deg = 1; deg <= length; ++deg) {
    const std::size_t prev_rank = ranks_.back();
    std::vector<Vector> gens = choose_generators(cycles, prev_rank);
    const std::size_t rank = gens.size();

    std::vector<Vector> columns;
    columns.reserve(rank * n);
    std::vector<FpMatrix::Triplet> t;
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector col = translate(mem[k], gens[j], prev_rank);
        for (std::size_t r = 0; r < col.size(); ++r) {
          if (col[r] != 0) t.push_back({r, j * n + k, col[r]});
        }
        columns.push_back(std::move(col));
      }
    }
    FpMatrix boundary = FpMatrix::from_triplets(p_, prev_rank * n, rank * n, std::move(t));
    auto solver = std::make_shared<const SpanCoordinates>(p_, prev_rank * n, columns);
    if (solver->rank() != cycles.dim()) throw InternalError("resolution is not exact at degree " + std::to_string(deg - 1));

    ranks_.push_back(rank);
    boundaries_.push_back(std::move(gens));
    solvers_.push_back(std::move(solver));
    if (deg < length) cycles = kernel(boundary);
    matrices_.push_back(std::move(boundary));
  }
}

Vector FreeResolution::translate(ElementId g, const Vector& v, std::size_t rank) const {
  const std::size_t n = group_.order();
  const std::size_t gp = group_.position(g);
  Vector out(rank * n, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t k = 0; k < n; ++k) out[i * n + mult_[gp * n + k]] = v[i * n + k];
  }
  return out;
}

std::vector<Vector> FreeResolution::choose_generators(const FpSubspace& cycles, std::size_t rank) const {
  if (cycles.dim() == 0) return {};
  const auto& mem = group_.members();
  const std::size_t ambient = cycles.ambient_dim();

  // J·K, with J generated as a left ideal by (s - 1) for generators s.
  RowEchelon ech(p_, ambient);
  for (auto s : group_.generators()) {
    for (const auto& k : cycles.basis()) {
      Vector v = translate(s, k, rank);
      for (std::size_t c = 0; c < ambient; ++c) v[c] = fp::sub(v[c], k[c], p_);
      ech.insert(std::move(v));
    }
  }
  std::vector<Vector> gens;
  for (const auto& k : cycles.basis()) {
    if (ech.insert(k)) gens.push_back(k);
  }

  RowEchelon generated(p_, ambient);
  auto absorb = [&](const Vector& x) {
    for (auto g : mem) generated.insert(translate(g, x, rank));
  };
  for (const auto& x : gens) absorb(x);
  for (const auto& k : cycles.basis()) {
    if (generated.rank() == cycles.dim()) break;
    if (!generated.contains(k)) {
      gens.push_back(k);
      absorb(k);
    }
  }
  return gens;
}

std::vector<std::vector<Vector>> FreeResolution::lift(const FreeResolution& source, const GroupHom& phi, int n) const {
  if (n > length() || n > source.length()) throw InvalidInput("chain map requested beyond the resolution length");
  if (!(phi.domain() == source.group())) throw InvalidInput("chain map: φ must be defined on the source group");
  const std::size_t ns = source.group().order();
  const std::size_t nt = group_.order();

  std::vector<ElementId> image_of(ns);
  for (std::size_t k = 0; k < ns; ++k) {
    image_of[k] = phi.images()[k];
    if (!group_.contains(image_of[k])) throw InvalidInput("chain map: φ does not land in the target group");
  }

  std::vector<std::vector<Vector>> out(static_cast<std::size_t>(n) + 1);
  Vector e0(nt, 0);
  e0[0] = 1;  // identity has position 0
  out[0].push_back(std::move(e0));

  for (int deg = 1; deg <= n; ++deg) {
    const std::size_t prev_rank_src = source.rank(deg - 1);
    const std::size_t prev_rank = rank(deg - 1);
    const auto& prev = out[static_cast<std::size_t>(deg - 1)];
    for (const auto& b : source.boundaries(deg)) {
      Vector y(prev_rank * nt, 0);
      for (std::size_t i = 0; i < prev_rank_src; ++i) {
        for (std::size_t k = 0; k < ns; ++k) {
          const Residue c = b[i * ns + k];
          if (c == 0) continue;
          const Vector moved = translate(image_of[k], prev[i], prev_rank);
          for (std::size_t r = 0; r < y.size(); ++r) {
            if (moved[r] != 0) y[r] = fp::add(y[r], fp::mul(c, moved[r], p_), p_);
          }
        }
      }
      auto x = solvers_[static_cast<std::size_t>(deg)]->coordinates(y);
      if (!x) throw InternalError("chain map lift failed at degree " + std::to_string(deg));
      out[static_cast<std::size_t>(deg)].push_back(std::move(*x));
    }
  }
  return out;
}

}  // namespace fusionlab
