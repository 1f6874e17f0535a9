#include "fusionlab/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace fusionlab {

namespace {

std::size_t parse_count(const std::string& text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidInput("catalog parameter for " + std::string(what) + " is not a number: '" + text + "'");
  }
  return value;
}

void require_params(std::span<const std::string> params, std::size_t n, std::string_view name) {
  if (params.size() != n) {
    throw InvalidInput("catalog entry '" + std::string(name) + "' expects " + std::to_string(n) +
                       " parameter(s), got " + std::to_string(params.size()));
  }
}

Permutation identity_perm(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// Cycle on the given points.
Permutation cycle(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  Permutation p = identity_perm(degree);
  std::vector<std::uint32_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

PermPresentation cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group order must be positive");
  PermPresentation out{n, {}, "C" + std::to_string(n)};
  if (n > 1) {
    Permutation r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((i + 1) % n);
    out.generators.push_back(std::move(r));
  }
  return out;
}

PermPresentation elementary_abelian(std::size_t p, std::size_t k) {
  if (!Prime::is_prime(p)) throw InvalidInput("elementary_abelian needs a prime, got " + std::to_string(p));
  if (k > 8) throw InvalidInput("elementary_abelian rank out of range (max 8)");
  std::string name = (p == 2 && k == 2) ? "V4" : "E" + std::to_string(p) + "^" + std::to_string(k);
  PermPresentation out{std::max<std::size_t>(p * k, 1), {}, name};
  for (std::size_t b = 0; b < k; ++b) {
    Permutation g = identity_perm(out.degree);
    for (std::size_t i = 0; i < p; ++i) g[b * p + i] = static_cast<std::uint32_t>(b * p + (i + 1) % p);
    out.generators.push_back(std::move(g));
  }
  return out;
}

PermPresentation dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw InvalidInput("dihedral order must be even and at least 2");
  if (order == 2) {
    auto c = cyclic(2);
    c.name = "D2";
    return c;
  }
  if (order == 4) {
    auto v = elementary_abelian(2, 2);
    v.name = "D4";
    return v;
  }
  const std::size_t n = order / 2;
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % n);
    s[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return {n, {r, s}, "D" + std::to_string(order)};
}

PermPresentation quaternion8() {
  // Units 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k; left multiplication by i, j.
  // unit_mul[a][b] = (sign flip, unit) for a,b ∈ {1,i,j,k}.
  const int unit_mul[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  auto left = [&](int unit) {
    Permutation perm(8);
    for (int x = 0; x < 8; ++x) {
      const int xu = x / 2, xs = x % 2;
      const int flip = unit_mul[unit][xu][0];
      const int u = unit_mul[unit][xu][1];
      perm[x] = static_cast<std::uint32_t>(2 * u + (xs ^ flip));
    }
    return perm;
  };
  return {8, {left(1), left(2)}, "Q8"};
}

PermPresentation symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidInput("symmetric degree must be in 1..5");
  PermPresentation out{n, {}, "S" + std::to_string(n)};
  if (n >= 2) {
    out.generators.push_back(cycle(n, {0, 1}));
    Permutation r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((i + 1) % n);
    if (n > 2) out.generators.push_back(std::move(r));
  }
  return out;
}

PermPresentation alternating(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidInput("alternating degree must be in 1..5");
  PermPresentation out{n, {}, "A" + std::to_string(n)};
  for (std::uint32_t i = 2; i < n; ++i) out.generators.push_back(cycle(n, {0, 1, i}));
  return out;
}

PermPresentation special_linear_2_3() {
  // Action on the 8 nonzero column vectors of F_3^2, point index 3a+b-1.
  auto act = [](int m00, int m01, int m10, int m11) {
    Permutation perm(8);
    for (int v = 1; v < 9; ++v) {
      const int a = v / 3, b = v % 3;
      const int a2 = (m00 * a + m01 * b) % 3, b2 = (m10 * a + m11 * b) % 3;
      perm[v - 1] = static_cast<std::uint32_t>(3 * a2 + b2 - 1);
    }
    return perm;
  };
  return {8, {act(1, 1, 0, 1), act(1, 0, 1, 1)}, "SL(2,3)"};
}

PermPresentation semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r) {
  if (n == 0 || m == 0) throw InvalidInput("semidirect_cyclic orders must be positive");
  if (std::gcd(r, n) != 1 && n > 1) throw InvalidInput("semidirect_cyclic multiplier must be a unit mod n");
  std::size_t rm = 1 % n;
  for (std::size_t i = 0; i < m; ++i) rm = (rm * r) % n;
  if (n > 1 && rm != 1 % n) throw InvalidInput("semidirect_cyclic needs r^m ≡ 1 (mod n)");
  const std::size_t degree = n + m;
  Permutation a = identity_perm(degree), b = identity_perm(degree);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<std::uint32_t>((i + 1) % n);
    b[i] = static_cast<std::uint32_t>((i * r) % n);
  }
  for (std::size_t i = 0; i < m; ++i) b[n + i] = static_cast<std::uint32_t>(n + (i + 1) % m);
  return {degree, {a, b}, "C" + std::to_string(n) + ":C" + std::to_string(m)};
}

PermPresentation direct_product(const PermPresentation& a, const PermPresentation& b) {
  PermPresentation out{a.degree + b.degree, {}, a.name + " x " + b.name};
  for (const auto& g : a.generators) {
    Permutation p = identity_perm(out.degree);
    std::copy(g.begin(), g.end(), p.begin());
    out.generators.push_back(std::move(p));
  }
  for (const auto& g : b.generators) {
    Permutation p = identity_perm(out.degree);
    for (std::size_t i = 0; i < g.size(); ++i) p[a.degree + i] = static_cast<std::uint32_t>(a.degree + g[i]);
    out.generators.push_back(std::move(p));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ':' || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

/// Expands short aliases ("S3", "Q8", ...) into catalog tokens.
std::vector<std::string> expand_alias(const std::string& token) {
  if (token == "Q8") return {"quaternion", "8"};
  if (token == "V4") return {"elementary_abelian", "2", "2"};
  if (token == "SL23" || token == "SL(2,3)") return {"special_linear_2_3"};
  if (token.size() >= 2 && std::all_of(token.begin() + 1, token.end(), ::isdigit)) {
    const std::string digits = token.substr(1);
    switch (token[0]) {
      case 'S': return {"symmetric", digits};
      case 'A': return {"alternating", digits};
      case 'C': return {"cyclic", digits};
      case 'D': return {"dihedral", digits};
      default: break;
    }
  }
  return {token};
}

}  // namespace

PermPresentation catalog_presentation(std::string_view name, std::span<const std::string> params) {
  if (name == "direct") {
    auto sep = std::find(params.begin(), params.end(), std::string("x"));
    if (sep == params.end() || sep == params.begin() || sep + 1 == params.end()) {
      throw InvalidInput("direct expects '<A...> x <B...>'");
    }
    std::span<const std::string> left(params.begin(), sep);
    std::span<const std::string> right(sep + 1, params.end());
    auto a = catalog_presentation(left.front(), left.subspan(1));
    auto b = catalog_presentation(right.front(), right.subspan(1));
    return direct_product(a, b);
  }
  if (name == "cyclic") {
    require_params(params, 1, name);
    return cyclic(parse_count(params[0], name));
  }
  if (name == "dihedral") {
    require_params(params, 1, name);
    return dihedral(parse_count(params[0], name));
  }
  if (name == "quaternion") {
    require_params(params, 1, name);
    if (parse_count(params[0], name) != 8) throw InvalidInput("only quaternion 8 is available");
    return quaternion8();
  }
  if (name == "symmetric") {
    require_params(params, 1, name);
    return symmetric(parse_count(params[0], name));
  }
  if (name == "alternating") {
    require_params(params, 1, name);
    return alternating(parse_count(params[0], name));
  }
  if (name == "elementary_abelian") {
    require_params(params, 2, name);
    return elementary_abelian(parse_count(params[0], name), parse_count(params[1], name));
  }
  if (name == "special_linear_2_3") {
    require_params(params, 0, name);
    return special_linear_2_3();
  }
  if (name == "semidirect_cyclic") {
    require_params(params, 3, name);
    return semidirect_cyclic(parse_count(params[0], name), parse_count(params[1], name),
                             parse_count(params[2], name));
  }
  // A single alias token, e.g. the "S3" in "direct S3 x C2".
  auto expanded = expand_alias(std::string(name));
  if (expanded.size() > 1 || expanded.front() != name) {
    if (!params.empty()) throw InvalidInput("alias '" + std::string(name) + "' takes no parameters");
    return catalog_presentation(expanded.front(), std::span<const std::string>(expanded).subspan(1));
  }
  throw InvalidInput("unknown catalog group '" + std::string(name) + "'");
}

GroupPtr group_from_catalog(std::string_view name, std::span<const std::string> params, const Limits& limits) {
  auto pres = catalog_presentation(name, params);
  return std::make_shared<const Group>(
      Group::from_permutations(pres.degree, pres.generators, limits.order_cap, pres.name));
}

GroupPtr group_from_descriptor(std::string_view descriptor, const Limits& limits) {
  // The one alias containing a separator character.
  if (descriptor == "SL(2,3)") descriptor = "SL23";
  std::vector<std::string> tokens = tokenize(descriptor);
  if (tokens.empty()) throw InvalidInput("empty group descriptor");
  if (tokens.size() == 1) tokens = expand_alias(tokens.front());
  std::span<const std::string> params(tokens.begin() + 1, tokens.end());
  return group_from_catalog(tokens.front(), params, limits);
}

std::vector<CatalogEntry> catalog_listing() {
  return {
      {"cyclic", "n", "cyclic group C_n of order n (alias Cn)"},
      {"dihedral", "N", "dihedral group of order N, N even (alias DN)"},
      {"quaternion", "8", "quaternion group Q_8 (alias Q8)"},
      {"symmetric", "n<=5", "symmetric group S_n (alias Sn)"},
      {"alternating", "n<=5", "alternating group A_n (alias An)"},
      {"elementary_abelian", "p k", "elementary abelian group of order p^k (V4 = elementary_abelian 2 2)"},
      {"special_linear_2_3", "", "SL(2,3), order 24 (alias SL23)"},
      {"semidirect_cyclic", "n m r", "C_n ⋊ C_m with the generator of C_m acting by x -> x^r"},
      {"direct", "<A...> x <B...>", "direct product of two catalog entries"},
  };
}

std::vector<CatalogInstance> standard_instances() {
  return {
      {"S3", 2},  {"S3", 3},  {"A4", 2},  {"A4", 3},  {"S4", 2},  {"S4", 3},
      {"SL23", 2}, {"SL23", 3}, {"A5", 2}, {"A5", 3}, {"A5", 5},
      {"semidirect_cyclic 3 4 2", 2}, {"semidirect_cyclic 3 4 2", 3},
      {"semidirect_cyclic 7 3 2", 3}, {"semidirect_cyclic 7 3 2", 7},
      {"C2", 2},  {"C3", 3},  {"C4", 2},  {"C9", 3},  {"V4", 2},
      {"D8", 2},  {"Q8", 2},  {"elementary_abelian 3 2", 3},
  };
}

}  // namespace fusionlab
