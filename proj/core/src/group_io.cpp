#include "fusionlab/group_io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fusionlab/catalog.hpp"

namespace fusionlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<bool> moved(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InvalidInput("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InvalidInput("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) throw InvalidInput("bad point in cycle notation");
      i = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > degree) {
        throw InvalidInput("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      const auto pt = static_cast<std::uint32_t>(value - 1);
      if (moved[pt]) throw InvalidInput("point " + std::to_string(value) + " repeated; cycles must be disjoint");
      moved[pt] = true;
      cyc.push_back(pt);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return perm;
}

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr parse_group_text(std::string_view text, const std::string& source, const Limits& limits) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t degree = 0;
  bool have_header = false;
  std::vector<Permutation> gens;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!have_header) {
      auto words = split_words(t);
      if (words.front() == "catalog") {
        if (words.size() < 2) throw ParseError(source, line_no, "catalog header needs a name");
        std::vector<std::string> params(words.begin() + 2, words.end());
        try {
          return group_from_catalog(words[1], params, limits);
        } catch (const InvalidInput& e) {
          throw ParseError(source, line_no, e.what());
        }
      }
      if (words.front() != "perm" || words.size() != 2) {
        throw ParseError(source, line_no, "expected 'perm <degree>' or 'catalog <name> [params]'");
      }
      auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), degree);
      if (ec != std::errc{} || ptr != words[1].data() + words[1].size() || degree == 0) {
        throw ParseError(source, line_no, "bad degree '" + words[1] + "'");
      }
      have_header = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(t, degree));
    } catch (const InvalidInput& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(source, line_no, "missing header line");
  return std::make_shared<const Group>(Group::from_permutations(degree, gens, limits.order_cap, source));
}

GroupPtr load_group_file(const std::filesystem::path& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path.filename().string(), limits);
}

GroupPtr resolve_group(const std::string& argument, const Limits& limits) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) return load_group_file(argument, limits);
  return group_from_descriptor(argument, limits);
}

}  // namespace fusionlab
