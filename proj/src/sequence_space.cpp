#include "hlab/sequence_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hlab/error.hpp"

namespace hlab {

namespace {

void check_word(const SequenceSpaceSpec& spec, const std::string& w) {
  for (char c : w) {
    const int v = symbol_value(c);
    if (v < 0 || v >= spec.n) {
      throw Error(ErrorCode::BadSymbol, std::string("'") + c + "' in word \"" + w + "\"");
    }
  }
}

std::size_t common_prefix(const std::string& a, const std::string& b) {
  const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(ia - a.begin());
}

// True when every extension of `prefix` to length `level` has a prefix in `cells`.
bool covers(const SequenceSpaceSpec& spec, const std::set<std::string>& cells, std::string& prefix,
            std::size_t level) {
  if (cells.count(prefix) != 0) return true;
  if (prefix.size() >= level) return false;
  for (int s = 0; s < spec.n; ++s) {
    prefix.push_back(symbol_char(s));
    const bool ok = covers(spec, cells, prefix, level);
    prefix.pop_back();
    if (!ok) return false;
  }
  return true;
}

std::size_t checked_power(int base, std::size_t exp, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / static_cast<std::size_t>(base)) return limit + 1;
    v *= static_cast<std::size_t>(base);
  }
  return v;
}

}  // namespace

SequenceSpaceSpec SequenceSpaceSpec::create(int n, double rho, int depth) {
  if (n < 2 || n > 36) throw Error(ErrorCode::BadParams, "alphabet size must be in [2, 36]");
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::BadParams, "rho must lie in (0, 1)");
  if (depth < 1) throw Error(ErrorCode::BadParams, "depth must be at least 1");
  return SequenceSpaceSpec{n, rho, depth};
}

double SequenceSpaceSpec::alpha_star() const {
  return std::log(static_cast<double>(n)) / std::log(1.0 / rho);
}

char symbol_char(int symbol) {
  return symbol < 10 ? static_cast<char>('0' + symbol) : static_cast<char>('a' + symbol - 10);
}

int symbol_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

double cell_diameter(const SequenceSpaceSpec& spec, const Cell& cell) {
  return std::pow(spec.rho, static_cast<double>(cell.level()));
}

double cell_distance(const SequenceSpaceSpec& spec, const std::string& w1, const std::string& w2) {
  check_word(spec, w1);
  check_word(spec, w2);
  if (w1 == w2) return 0.0;
  return std::pow(spec.rho, static_cast<double>(common_prefix(w1, w2)));
}

const char* to_string(CellRelation r) noexcept {
  switch (r) {
    case CellRelation::FirstInSecond: return "nested_1_in_2";
    case CellRelation::SecondInFirst: return "nested_2_in_1";
    case CellRelation::Equal: return "equal";
    case CellRelation::Disjoint: return "disjoint";
  }
  return "disjoint";
}

CellRelation cell_relation(const Cell& c1, const Cell& c2) {
  if (c1.word == c2.word) return CellRelation::Equal;
  const std::size_t l = common_prefix(c1.word, c2.word);
  if (l == c1.word.size()) return CellRelation::SecondInFirst;
  if (l == c2.word.size()) return CellRelation::FirstInSecond;
  return CellRelation::Disjoint;
}

std::vector<std::string> words_of_length(const SequenceSpaceSpec& spec, std::size_t level) {
  std::vector<std::string> words{""};
  for (std::size_t l = 0; l < level; ++l) {
    std::vector<std::string> next;
    next.reserve(words.size() * static_cast<std::size_t>(spec.n));
    for (const std::string& w : words) {
      for (int s = 0; s < spec.n; ++s) next.push_back(w + symbol_char(s));
    }
    words = std::move(next);
  }
  return words;
}

NormalizedCovering normalize_covering(const SequenceSpaceSpec& spec, const std::vector<Cell>& cells,
                                      double alpha, std::size_t max_cells) {
  if (!(alpha >= 0.0) || std::isinf(alpha)) throw Error(ErrorCode::InvalidAlpha, std::to_string(alpha));
  std::set<std::string> words;
  std::size_t level = 0;
  for (const Cell& c : cells) {
    check_word(spec, c.word);
    words.insert(c.word);
    level = std::max(level, c.level());
  }
  std::string prefix;
  if (cells.empty() || !covers(spec, words, prefix, level)) {
    throw Error(ErrorCode::NotACovering, "cells do not cover the sequence space");
  }

  NormalizedCovering out;
  out.level = level;
  std::size_t total = 0;
  for (const Cell& c : cells) {
    out.cost_before += diameter_power(cell_diameter(spec, c), alpha);
    total += checked_power(spec.n, level - c.level(), max_cells);
    if (total > max_cells) {
      throw Error(ErrorCode::TooLarge, "normalized covering exceeds " + std::to_string(max_cells) + " cells");
    }
  }
  out.level_cells.reserve(total);
  for (const Cell& c : cells) {
    for (const std::string& tail : words_of_length(spec, level - c.level())) {
      out.level_cells.push_back(Cell{c.word + tail});
    }
  }
  const double leaf = diameter_power(std::pow(spec.rho, static_cast<double>(level)), alpha);
  out.cost_after = leaf * static_cast<double>(out.level_cells.size());
  return out;
}

Extended exact_measure(const SequenceSpaceSpec& spec, double alpha) {
  if (!(alpha >= 0.0) || std::isinf(alpha)) throw Error(ErrorCode::InvalidAlpha, std::to_string(alpha));
  // The level-l covering costs (n rho^alpha)^l; its limit decides the case.
  const double star = spec.alpha_star();
  if (std::abs(alpha - star) <= kAlphaStarTolerance) return Extended(1.0);
  return alpha < star ? Extended::infinity() : Extended(0.0);
}

Materialization materialize(const SequenceSpaceSpec& spec, std::size_t limit) {
  const std::size_t count = checked_power(spec.n, static_cast<std::size_t>(spec.depth), limit);
  if (count > limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(spec.n) + "^" + std::to_string(spec.depth) +
                                         " cells exceed limit " + std::to_string(limit));
  }
  Materialization m;
  m.words = words_of_length(spec, static_cast<std::size_t>(spec.depth));
  const double leaf = std::pow(spec.rho, static_cast<double>(spec.depth));

  DistanceTable between(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      between.set_symmetric(i, j, std::pow(spec.rho, static_cast<double>(common_prefix(m.words[i], m.words[j]))));
    }
  }
  m.points = PointSpace::from_table(between, PointSpace::Validation::Structural);

  DistanceTable sup = between;
  for (std::size_t i = 0; i < count; ++i) sup(i, i) = leaf;
  m.atoms = AtomicSpace::create(std::vector<double>(count, leaf), std::move(sup), std::move(between),
                                Provenance::CellSpace);
  return m;
}

}  // namespace hlab
