#include "rainbow/generators.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

LatinSquare::LatinSquare(std::vector<std::vector<std::uint32_t>> cells) : cells_(std::move(cells)) {
  const std::size_t n = cells_.size();
  if (n == 0) throw std::invalid_argument("Latin square must have order >= 1");
  for (std::size_t r = 0; r < n; ++r)
    if (cells_[r].size() != n)
      throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(cells_[r].size()) +
                                  " entries, expected " + std::to_string(n));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<char> row_seen(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      const auto s = cells_[r][c];
      if (s >= n)
        throw std::invalid_argument("cell (" + std::to_string(r) + "," + std::to_string(c) + "): symbol " +
                                    std::to_string(s) + " out of range");
      if (row_seen[s]++) throw std::invalid_argument("row " + std::to_string(r) + " repeats symbol " + std::to_string(s));
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<char> col_seen(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      if (col_seen[cells_[r][c]]++)
        throw std::invalid_argument("column " + std::to_string(c) + " repeats symbol " +
                                    std::to_string(cells_[r][c]));
  }
}

LatinSquare LatinSquare::cyclic(std::size_t order) {
  std::vector<std::vector<std::uint32_t>> cells(order, std::vector<std::uint32_t>(order));
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c) cells[r][c] = static_cast<std::uint32_t>((r + c) % order);
  return LatinSquare(std::move(cells));
}

ParsedSquare parse_latin_square(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    std::vector<std::uint32_t> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
      if (ec != std::errc{} || ptr != line.data() + end)
        throw ParseError("line " + std::to_string(line_no) + ", entry " + std::to_string(row.size() + 1) +
                         ": expected a non-negative integer, got '" + std::string(line.substr(pos, end - pos)) + "'");
      row.push_back(value);
      pos = end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("Latin square file is empty");

  bool has_zero = false;
  for (const auto& row : rows)
    for (auto s : row) has_zero = has_zero || s == 0;
  const bool one_based = !has_zero;
  if (one_based)
    for (auto& row : rows)
      for (auto& s : row) --s;
  try {
    return ParsedSquare{LatinSquare(std::move(rows)), one_based};
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed Latin square: ") + e.what());
  }
}

Instance gen_triangle_extremal(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gen_triangle_extremal needs n >= 2");
  std::vector<ColourClass> classes;
  for (Colour c = 0; c < n; ++c) {
    ColourClass cls(c);
    for (Vertex t = 0; t + 1 < n; ++t) cls.add_clique({3 * t, 3 * t + 1, 3 * t + 2});
    classes.push_back(std::move(cls));
  }
  return Instance(n, 3 * (n - 1), std::move(classes));
}

Instance gen_double_k4() {
  // The three perfect matchings of K4 on {0,1,2,3}.
  constexpr Vertex kMatchings[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  std::vector<ColourClass> classes;
  for (Colour c = 0; c < 3; ++c) {
    ColourClass cls(c);
    for (Vertex offset : {0u, 4u})
      for (const auto& e : kMatchings[c]) cls.add_clique({e[0] + offset, e[1] + offset});
    classes.push_back(std::move(cls));
  }
  return Instance(3, 8, std::move(classes));
}

Instance gen_latin_bridge(const LatinSquare& square, std::size_t c) {
  if (c % 2 != 0) throw std::invalid_argument("gen_latin_bridge needs an even star budget c");
  const std::size_t n = square.order();
  const std::size_t stars = c / 2;
  std::vector<ColourClass> classes;
  for (Colour s = 0; s < n; ++s) classes.emplace_back(s);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      classes[square.at(r, col)].add_clique({static_cast<Vertex>(r), static_cast<Vertex>(n + col)});
  for (std::size_t j = 0; j < stars; ++j) {
    const auto centre = static_cast<Vertex>(2 * n + j * (n + 1));
    for (Colour s = 0; s < n; ++s) classes[s].add_clique({centre, centre + 1 + s});
  }
  return Instance(n, 2 * n + stars * (n + 1), std::move(classes));
}

namespace {

constexpr int kPickTries = 64;
constexpr int kColourRestarts = 200;

std::uint64_t pair_key(Vertex x, Vertex y) {
  const EdgePair p(x, y);
  return (static_cast<std::uint64_t>(p.a) << 32) | p.b;
}

}  // namespace

Instance gen_random(const RandomSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("RandomSpec: n must be >= 1");
  if (spec.v < 2) throw std::invalid_argument("RandomSpec: v must be >= 2");
  if (spec.max_multiplicity < 1) throw std::invalid_argument("RandomSpec: max_multiplicity must be >= 1");
  if (!(spec.triangle_fraction >= 0.0 && spec.triangle_fraction <= 1.0))
    throw std::invalid_argument("RandomSpec: triangle_fraction must lie in [0, 1]");

  const std::size_t vc = spec.vertex_count == 0 ? spec.v : spec.vertex_count;
  if (spec.v > vc)
    throw InfeasibleSpec("v=" + std::to_string(spec.v) + " exceeds the vertex budget " + std::to_string(vc));
  const std::size_t cap = std::min(spec.max_multiplicity, spec.n);
  const bool track = cap < spec.n;
  if (track) {
    // Each colour needs at least ceil(v/2) distinct pairs.
    const double needed = static_cast<double>(spec.n) * static_cast<double>((spec.v + 1) / 2);
    const double available = static_cast<double>(cap) * static_cast<double>(vc) * static_cast<double>(vc - 1) / 2.0;
    if (needed > available)
      throw InfeasibleSpec("multiplicity cap " + std::to_string(cap) + " leaves too few pairs on " +
                           std::to_string(vc) + " vertices for " + std::to_string(spec.n) + " colours of cover " +
                           std::to_string(spec.v));
  }

  Rng rng(spec.seed);
  std::unordered_map<std::uint64_t, std::uint32_t> used_pairs;
  auto fits = [&](std::span<const Vertex> q) {
    if (!track) return true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        auto it = used_pairs.find(pair_key(q[i], q[j]));
        if (it != used_pairs.end() && it->second >= cap) return false;
      }
    return true;
  };

  std::vector<ColourClass> classes;
  classes.reserve(spec.n);
  std::vector<Vertex> pool;
  for (Colour c = 0; c < spec.n; ++c) {
    bool built = false;
    for (int restart = 0; restart < kColourRestarts && !built; ++restart) {
      ColourClass cls(c);
      pool.resize(vc);
      for (std::size_t i = 0; i < vc; ++i) pool[i] = static_cast<Vertex>(i);
      std::size_t cover = 0;
      bool stuck = false;
      while (cover < spec.v && !stuck) {
        const std::size_t need = spec.v - cover;
        bool triangle = false;
        if (need == 3)
          triangle = spec.triangle_fraction > 0.0;
        else if (need > 4)
          triangle = rng.bernoulli(spec.triangle_fraction);

        bool placed = false;
        for (std::size_t size : {std::size_t{3}, std::size_t{2}}) {
          if (size == 3 && !triangle) continue;
          if (pool.size() < size) continue;
          for (int attempt = 0; attempt < kPickTries && !placed; ++attempt) {
            std::size_t idx[3];
            Vertex q[3];
            for (std::size_t k = 0; k < size; ++k) {
              bool fresh;
              do {
                idx[k] = static_cast<std::size_t>(rng.below(pool.size()));
                fresh = std::find(idx, idx + k, idx[k]) == idx + k;
              } while (!fresh);
              q[k] = pool[idx[k]];
            }
            if (!fits({q, size})) continue;
            cls.add_clique(std::span<const Vertex>(q, size));
            std::sort(idx, idx + size, std::greater<>());
            for (std::size_t k = 0; k < size; ++k) {
              pool[idx[k]] = pool.back();
              pool.pop_back();
            }
            cover += size;
            placed = true;
          }
          if (placed) break;
        }
        stuck = !placed;
      }
      if (stuck) continue;
      if (track)
        for (std::size_t i = 0; i < cls.clique_count(); ++i) {
          auto q = cls.clique(i);
          for (std::size_t x = 0; x < q.size(); ++x)
            for (std::size_t y = x + 1; y < q.size(); ++y) ++used_pairs[pair_key(q[x], q[y])];
        }
      classes.push_back(std::move(cls));
      built = true;
    }
    if (!built)
      throw InfeasibleSpec("could not place colour " + std::to_string(c) + " with cover " + std::to_string(spec.v) +
                           " on " + std::to_string(vc) + " vertices under multiplicity cap " + std::to_string(cap) +
                           " after " + std::to_string(kColourRestarts) + " restarts");
  }
  return Instance(spec.n, vc, std::move(classes));
}

}  // namespace rainbow
