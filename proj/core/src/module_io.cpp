#include "fusionlab/module_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fusionlab {

namespace {

bool parse_key(const std::string& word, std::string_view key, std::size_t& out) {
  if (word.rfind(key, 0) != 0 || word.size() <= key.size() || word[key.size()] != '=') return false;
  const char* b = word.data() + key.size() + 1;
  const char* e = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && ptr == e;
}

}  // namespace

std::vector<ElementId> module_generator_order(const FusionSystem& f) {
  const Group& g = f.group();
  if (f.sylow().order() == g.order() && !g.input_generators().empty()) return g.input_generators();
  return f.sylow().generators();
}

FpModule parse_module_text(std::string_view text, const std::string& source, const Subgroup& acting,
                           std::span<const ElementId> gens) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t p = 0, dim = 0, count = 0;
  bool have_header = false;
  std::vector<std::vector<std::int64_t>> rows;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> w;
    std::string tok;
    while (words >> tok) w.push_back(tok);
    if (w.empty() || w.front().front() == '#') continue;
    if (!have_header) {
      if (w.size() != 4 || w[0] != "module" || !parse_key(w[1], "p", p) || !parse_key(w[2], "dim", dim) ||
          !parse_key(w[3], "generators", count)) {
        throw ParseError(source, line_no, "expected 'module p=<p> dim=<d> generators=<k>'");
      }
      if (!Prime::is_prime(p)) throw ParseError(source, line_no, "p=" + std::to_string(p) + " is not prime");
      if (dim == 0) throw ParseError(source, line_no, "dim must be positive");
      if (count != gens.size()) {
        throw ParseError(source, line_no,
                         "the acting group has " + std::to_string(gens.size()) + " generators, file lists " +
                             std::to_string(count));
      }
      have_header = true;
      continue;
    }
    if (w.size() != dim) {
      throw ParseError(source, line_no, "matrix row has " + std::to_string(w.size()) + " entries, expected " +
                                            std::to_string(dim));
    }
    std::vector<std::int64_t> row;
    for (const auto& s : w) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(source, line_no, "bad entry '" + s + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(source, line_no, "missing module header");
  if (rows.size() != dim * count) {
    throw ParseError(source, line_no, "expected " + std::to_string(dim * count) + " matrix rows, found " +
                                          std::to_string(rows.size()));
  }

  const Prime prime(static_cast<std::uint32_t>(p));
  std::vector<FpMatrix> mats;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<FpMatrix::Triplet> t;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) t.push_back({r, c, rows[k * dim + r][c]});
    }
    mats.push_back(FpMatrix::from_triplets(prime, dim, dim, std::move(t)));
  }
  try {
    return FpModule::from_generators(acting, prime, dim, gens, mats, "file:" + source);
  } catch (const InvalidInput& e) {
    throw ParseError(source + ": " + e.what());
  }
}

FpModule load_module_file(const std::filesystem::path& path, const FusionSystem& f) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open module file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto gens = module_generator_order(f);
  FpModule m = parse_module_text(buf.str(), path.filename().string(), f.sylow(), gens);
  if (!(m.prime() == f.prime())) {
    throw ParseError(path.filename().string() + ": module is over F_" + std::to_string(m.prime().value()) +
                     " but the fusion system is at p=" + std::to_string(f.prime().value()));
  }
  return m;
}

std::string format_module(const FpModule& m, std::span<const ElementId> gens) {
  std::ostringstream out;
  out << "module p=" << m.prime().value() << " dim=" << m.dim() << " generators=" << gens.size() << "\n";
  for (auto g : gens) {
    const FpMatrix& a = m.action(g);
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) out << (c ? " " : "") << a.at(r, c);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace fusionlab
