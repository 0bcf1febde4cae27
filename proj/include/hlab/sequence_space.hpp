#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hlab/atomic_covering.hpp"
#include "hlab/extended.hpp"
#include "hlab/metric_core.hpp"

namespace hlab {

// Words over an n-letter alphabet with d(x,y) = rho^(common prefix length),
// truncated at a finite depth. Symbols are written "0".."9" then "a".."z".
struct SequenceSpaceSpec {
  int n = 2;
  double rho = 1.0 / 3.0;
  int depth = 1;

  // Throws BadParams unless n in [2, 36], 0 < rho < 1, depth >= 1.
  static SequenceSpaceSpec create(int n, double rho, int depth);

  // The exponent with n * rho^alpha = 1.
  double alpha_star() const;
};

// Exponent tolerance for comparisons against alpha_star.
inline constexpr double kAlphaStarTolerance = 1e-12;

char symbol_char(int symbol);
int symbol_value(char c);  // -1 when c is not a symbol character

// A cell is the set of sequences extending `word`; the empty word is the
// whole space. Its diameter is rho^level.
struct Cell {
  std::string word;

  std::size_t level() const { return word.size(); }
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

double cell_diameter(const SequenceSpaceSpec& spec, const Cell& cell);

// 0 for equal words, else rho^l with l the common prefix length. For
// disjoint cells this is both the sup and the inf distance between them.
double cell_distance(const SequenceSpaceSpec& spec, const std::string& w1, const std::string& w2);

enum class CellRelation { FirstInSecond, SecondInFirst, Equal, Disjoint };

const char* to_string(CellRelation r) noexcept;

CellRelation cell_relation(const Cell& c1, const Cell& c2);

struct NormalizedCovering {
  std::vector<Cell> level_cells;  // descendants at the common level, with multiplicity
  std::size_t level = 0;
  double cost_before = 0.0;
  double cost_after = 0.0;
};

// Replaces every cell by its descendants at the deepest level present.
// Throws NotACovering when the cells miss part of the space.
NormalizedCovering normalize_covering(const SequenceSpaceSpec& spec, const std::vector<Cell>& cells,
                                      double alpha, std::size_t max_cells = std::size_t{1} << 20);

// H^alpha of the infinite sequence space: 1 at alpha_star, +inf below, 0 above.
Extended exact_measure(const SequenceSpaceSpec& spec, double alpha);

struct Materialization {
  std::vector<std::string> words;  // all words of length depth, lexicographic
  AtomicSpace atoms;               // one cell atom per word
  PointSpace points;               // one representative point per word
};

inline constexpr std::size_t kDefaultMaterializeLimit = 4096;

Materialization materialize(const SequenceSpaceSpec& spec,
                            std::size_t limit = kDefaultMaterializeLimit);

// All n^level words of the given length, lexicographic.
std::vector<std::string> words_of_length(const SequenceSpaceSpec& spec, std::size_t level);

}  // namespace hlab
