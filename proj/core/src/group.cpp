#include "fusionlab/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace fusionlab {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.same_parent(b)) throw InvalidInput("subgroups belong to different parent groups");
}

}  // namespace

// ---------------------------------------------------------------------------
// Group

Group Group::from_table(std::vector<ElementId> table, std::string name) {
  const std::size_t total = table.size();
  std::size_t n = 0;
  while (n * n < total) ++n;
  if (n == 0 || n * n != total) throw InvalidInput("multiplication table is not square");

  for (auto v : table) {
    if (v >= n) throw InvalidInput("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] != a || table[a * n] != a) {
      throw InvalidInput("element 0 is not a two-sided identity");
    }
  }
  // Latin square: rows and columns are permutations.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a * n + b]] || col[table[b * n + a]]) {
        throw InvalidInput("multiplication table is not a Latin square");
      }
      row[table[a * n + b]] = true;
      col[table[b * n + a]] = true;
    }
  }

  Group g;
  g.order_ = n;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

Group Group::from_permutations(std::size_t degree, std::span<const Permutation> gens,
                               std::size_t order_cap, std::string name) {
  for (const auto& gen : gens) {
    if (gen.size() != degree) throw InvalidInput("generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (auto v : gen) {
      if (v >= degree || seen[v]) throw InvalidInput("generator is not a bijection");
      seen[v] = true;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::set<Permutation> elements{id};
  std::deque<Permutation> todo{id};
  while (!todo.empty()) {
    Permutation x = std::move(todo.front());
    todo.pop_front();
    for (const auto& gen : gens) {
      Permutation y = compose(x, gen);
      if (elements.insert(y).second) {
        if (elements.size() > order_cap) {
          throw SizeLimitError("group closure exceeds the order cap of " + std::to_string(order_cap));
        }
        todo.push_back(std::move(y));
      }
    }
  }

  std::vector<Permutation> sorted(elements.begin(), elements.end());
  std::unordered_map<Permutation, ElementId, PermHash> index;
  index.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], static_cast<ElementId>(i));

  const std::size_t n = sorted.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose(sorted[a], sorted[b]));
    }
  }

  Group g;
  g.order_ = n;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  g.degree_ = degree;
  for (const auto& gen : gens) g.input_generators_.push_back(index.at(gen));
  g.perms_ = std::move(sorted);
  g.finish();
  return g;
}

void Group::finish() {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == 0) {
        if (table_[b * order_ + a] != 0) throw InvalidInput("left and right inverses differ");
        inverse_[a] = static_cast<ElementId>(b);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidInput("element without inverse");
  }
  element_order_.assign(order_, 1);
  for (std::size_t a = 0; a < order_; ++a) {
    ElementId x = static_cast<ElementId>(a);
    std::size_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<ElementId>(a));
      ++k;
      if (k > order_) throw InvalidInput("element of unbounded order; table is not a group");
    }
    element_order_[a] = k;
  }
}

ElementId Group::pow(ElementId a, long long e) const {
  const auto ord = static_cast<long long>(element_order_[a]);
  long long k = e % ord;
  if (k < 0) k += ord;
  ElementId x = identity();
  for (long long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (auto o : element_order_) e = std::lcm(e, o);
  return e;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

bool Group::verify_associative() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      const ElementId ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c) {
        const ElementId bc = table_[b * order_ + c];
        if (table_[ab * order_ + c] != table_[a * order_ + bc]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members, Unchecked)
    : parent_(std::move(parent)), members_(std::move(members)) {
  mask_.assign(parent_->order(), false);
  for (auto x : members_) mask_[x] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members)
    : Subgroup(std::move(parent), std::move(members), Unchecked{}) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidInput("subgroup member list has duplicates");
  }
  for (auto x : members_) {
    if (x >= parent_->order()) throw InvalidInput("subgroup member out of range");
  }
  if (members_.empty() || members_.front() != parent_->identity()) {
    throw InvalidInput("subgroup does not contain the identity");
  }
  for (auto a : members_) {
    if (!contains(parent_->inv(a))) throw InvalidInput("subgroup is not closed under inverses");
    for (auto b : members_) {
      if (!contains(parent_->mul(a, b))) throw InvalidInput("subgroup is not closed under composition");
    }
  }
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(std::move(parent), std::move(all), Unchecked{});
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0}, Unchecked{});
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const ElementId> gens) {
  const Group& g = *parent;
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      if (s >= g.order()) throw InvalidInput("generator id out of range");
      const ElementId y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(parent), std::move(members), Unchecked{});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!same_parent(other)) return false;
  return std::all_of(members_.begin(), members_.end(), [&](ElementId x) { return other.contains(x); });
}

std::size_t Subgroup::position(ElementId x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) throw InvalidInput("element is not a member of the subgroup");
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<ElementId> Subgroup::generators() const {
  std::vector<ElementId> gens;
  Subgroup current = trivial(parent_);
  for (auto x : members_) {
    if (current.order() == order()) break;
    if (!current.contains(x)) {
      gens.push_back(x);
      current = generated_by(parent_, gens);
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(Subgroup domain, Subgroup codomain, std::vector<ElementId> images, bool validate)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.order()) throw InvalidInput("hom image list has wrong length");
  if (!validate) return;
  for (auto y : images_) {
    if (!codomain_.contains(y)) throw InvalidInput("hom image outside the codomain");
  }
  const Group& src = domain_.parent();
  const Group& dst = codomain_.parent();
  const auto& mem = domain_.members();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j < mem.size(); ++j) {
      const ElementId xy = src.mul(mem[i], mem[j]);
      if (images_[domain_.position(xy)] != dst.mul(images_[i], images_[j])) {
        throw InvalidInput("map is not a homomorphism");
      }
    }
  }
}

GroupHom::GroupHom(Subgroup domain, Subgroup codomain, std::vector<ElementId> images)
    : GroupHom(std::move(domain), std::move(codomain), std::move(images), true) {}

GroupHom GroupHom::trusted(Subgroup domain, Subgroup codomain, std::vector<ElementId> images) {
  return GroupHom(std::move(domain), std::move(codomain), std::move(images), false);
}

GroupHom GroupHom::inclusion(const Subgroup& domain, const Subgroup& codomain) {
  if (!domain.is_subgroup_of(codomain)) throw InvalidInput("inclusion requires a subgroup");
  return trusted(domain, codomain, domain.members());
}

GroupHom GroupHom::conjugation(ElementId g, const Subgroup& domain, const Subgroup& codomain) {
  const Group& grp = domain.parent();
  std::vector<ElementId> images;
  images.reserve(domain.order());
  for (auto x : domain.members()) {
    const ElementId y = grp.conjugate(g, x);
    if (!codomain.contains(y)) throw InvalidInput("conjugate does not land in the codomain");
    images.push_back(y);
  }
  return trusted(domain, codomain, std::move(images));
}

bool GroupHom::is_injective() const {
  std::vector<ElementId> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GroupHom::is_identity_map() const {
  return domain_.parent_ptr() == codomain_.parent_ptr() && images_ == domain_.members();
}

Subgroup GroupHom::image() const {
  std::vector<ElementId> im = images_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup(codomain_.parent_ptr(), std::move(im));
}

GroupHom GroupHom::after(const GroupHom& first) const {
  std::vector<ElementId> images;
  images.reserve(first.images_.size());
  for (auto y : first.images_) images.push_back((*this)(y));
  return trusted(first.domain_, codomain_, std::move(images));
}

GroupHom GroupHom::restrict_to(const Subgroup& sub) const {
  if (!sub.is_subgroup_of(domain_)) throw InvalidInput("restriction to a non-subgroup");
  std::vector<ElementId> images;
  images.reserve(sub.order());
  for (auto x : sub.members()) images.push_back((*this)(x));
  return trusted(sub, codomain_, std::move(images));
}

// ---------------------------------------------------------------------------
// Subgroup machinery

bool is_normal(const Subgroup& n, const Subgroup& h) {
  require_same_parent(n, h);
  if (!n.is_subgroup_of(h)) return false;
  const Group& g = h.parent();
  for (auto x : h.members()) {
    for (auto y : n.members()) {
      if (!n.contains(g.conjugate(x, y))) return false;
    }
  }
  return true;
}

Subgroup centralizer(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = h.parent();
  std::vector<ElementId> out;
  for (auto x : h.members()) {
    bool commutes = std::all_of(k.members().begin(), k.members().end(),
                                [&](ElementId y) { return g.mul(x, y) == g.mul(y, x); });
    if (commutes) out.push_back(x);
  }
  return Subgroup(h.parent_ptr(), std::move(out));
}

Subgroup normalizer(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = h.parent();
  std::vector<ElementId> out;
  for (auto x : h.members()) {
    bool normalizes = std::all_of(k.members().begin(), k.members().end(),
                                  [&](ElementId y) { return k.contains(g.conjugate(x, y)); });
    if (normalizes) out.push_back(x);
  }
  return Subgroup(h.parent_ptr(), std::move(out));
}

Subgroup center(const Subgroup& h) { return centralizer(h, h); }

Subgroup derived_subgroup(const Subgroup& h) {
  const Group& g = h.parent();
  std::set<ElementId> comms;
  for (auto x : h.members()) {
    for (auto y : h.members()) comms.insert(g.commutator(x, y));
  }
  std::vector<ElementId> gens(comms.begin(), comms.end());
  return Subgroup::generated_by(h.parent_ptr(), gens);
}

Subgroup o_p_residual(const Subgroup& h, Prime p) {
  const Group& g = h.parent();
  std::vector<ElementId> gens;
  for (auto x : h.members()) {
    if (g.element_order(x) % p.value() != 0) gens.push_back(x);
  }
  return Subgroup::generated_by(h.parent_ptr(), gens);
}

std::vector<Subgroup> all_subgroups(const Subgroup& h, std::size_t cap) {
  if (h.order() > cap) {
    throw SizeLimitError("subgroup enumeration of a group of order " + std::to_string(h.order()) +
                         " exceeds the cap of " + std::to_string(cap));
  }
  const GroupPtr& parent = h.parent_ptr();

  // Every subgroup is a join of cyclic subgroups.
  std::map<std::vector<ElementId>, std::vector<ElementId>> found;  // members -> generators
  std::vector<ElementId> cyclic_gens;
  std::set<std::vector<ElementId>> cyclic_seen;
  for (auto x : h.members()) {
    Subgroup c = Subgroup::generated_by(parent, std::span<const ElementId>(&x, 1));
    if (cyclic_seen.insert(c.members()).second) {
      cyclic_gens.push_back(x);
      found.emplace(c.members(), std::vector<ElementId>{x});
    }
  }

  std::deque<std::vector<ElementId>> todo;
  for (const auto& [members, gens] : found) todo.push_back(members);
  while (!todo.empty()) {
    const std::vector<ElementId> members = std::move(todo.front());
    todo.pop_front();
    const std::vector<ElementId> gens = found.at(members);
    for (auto x : cyclic_gens) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      std::vector<ElementId> joined_gens = gens;
      joined_gens.push_back(x);
      Subgroup joined = Subgroup::generated_by(parent, joined_gens);
      if (found.emplace(joined.members(), joined_gens).second) todo.push_back(joined.members());
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [members, gens] : found) {
    out.push_back(Subgroup::generated_by(parent, gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t p_part(std::size_t n, std::uint32_t p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::size_t n, std::uint32_t p) { return n > 0 && p_part(n, p) == n; }

Subgroup sylow_subgroup(const Subgroup& h, Prime p) {
  const Group& g = h.parent();
  const GroupPtr& parent = h.parent_ptr();
  const std::size_t target = p_part(h.order(), p);
  Subgroup q = Subgroup::trivial(parent);
  if (target == 1) return q;

  for (auto x : h.members()) {
    if (g.element_order(x) == p.value()) {
      q = Subgroup::generated_by(parent, std::span<const ElementId>(&x, 1));
      break;
    }
  }
  while (q.order() < target) {
    // N_H(Q)/Q has order divisible by p, so some y ∉ Q has y^p ∈ Q.
    const Subgroup n = normalizer(h, q);
    bool grown = false;
    for (auto y : n.members()) {
      if (q.contains(y) || !q.contains(g.pow(y, p.value()))) continue;
      std::vector<ElementId> gens = q.generators();
      gens.push_back(y);
      q = Subgroup::generated_by(parent, gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("normalizer climbing stalled below the Sylow order");
  }
  return q;
}

Quotient quotient_group(const Subgroup& h, const Subgroup& n) {
  require_same_parent(h, n);
  if (!is_normal(n, h)) throw InvalidInput("quotient by a subgroup that is not normal");
  const Group& g = h.parent();

  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (auto x : h.members()) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (auto y : n.members()) coset_of[g.mul(x, y)] = id;
  }

  const std::size_t k = reps.size();
  std::vector<ElementId> table(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = coset_of[g.mul(reps[a], reps[b])];
  }
  std::string name = (g.name().empty() ? std::string("G") : g.name()) + "/N";
  auto q = std::make_shared<const Group>(Group::from_table(std::move(table), std::move(name)));

  std::vector<ElementId> images;
  images.reserve(h.order());
  for (auto x : h.members()) images.push_back(coset_of[x]);
  return Quotient{q, GroupHom::trusted(h, Subgroup::whole(q), std::move(images))};
}

}  // namespace fusionlab
