#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ballsearch/query.hpp"
#include "ballsearch/separating.hpp"

namespace ballsearch {

/// n-bit vector of Q_n; coordinate i is bit i-1.
using Codeword = std::uint32_t;

/// Number of points within Hamming distance r: sum_{i<=r} C(n, i); 2^n when r >= n.
std::uint64_t v_ball(unsigned n, unsigned r);

/// ceil(2^n / V(n, r)).
std::uint64_t sphere_covering_lower(unsigned n, unsigned r);

enum class CodeProvenance { Greedy, Exact, Hamming, User };
std::string to_string(CodeProvenance p);

struct CoveringCode {
  unsigned n = 0;
  unsigned r = 0;
  std::vector<Codeword> codewords;
  CodeProvenance provenance = CodeProvenance::User;
  bool verified = false;

  std::size_t size() const { return codewords.size(); }
  /// Radius-r balls at the codewords, as queries on Graph::hypercube(n).
  QuerySet queries() const;
};

/// True iff every vertex of Q_n is within distance r of some codeword.
bool covers(unsigned n, unsigned r, const std::vector<Codeword>& codewords);

/**
 * Greedy cover: repeatedly take the codeword covering the most uncovered
 * vertices, ties to the smallest value. Gains are kept exact by decrementing
 * them as vertices get covered; a lazy max-heap finds the best. n <= 20.
 */
CoveringCode greedy_covering(unsigned n, unsigned r);

struct ExactCoveringResult {
  SearchStatus status = SearchStatus::Solved;
  CoveringCode code;  // best cover found (optimal when Solved)
  std::uint64_t nodes_explored = 0;
  bool meets_sphere_bound = false;
};

/**
 * K(n, r) by branch and bound: branch on the codewords covering the smallest
 * uncovered vertex, prune with |code| + ceil(uncovered / V(n, r)), and fix
 * the first codeword to 0 (covers are translation invariant). Seeded with the
 * greedy cover as incumbent. Default exhaustive limit is n <= 8.
 */
ExactCoveringResult exact_K(unsigned n, unsigned r, const SearchOptions& opts = SearchOptions{std::nullopt, 8});

/// The [7,4] Hamming code: the 16 vectors whose set coordinates' indices XOR to 0.
/// Throws std::invalid_argument for n != 7.
CoveringCode hamming_code(unsigned n);

/// The 7 lines of PG(2,2) as weight-3 vectors of Q_7.
struct FanoCode {
  std::array<Codeword, 7> lines{};
};

FanoCode fano_code();
/// The seven radius-3 balls centred at the Fano lines.
QuerySet fano_queries();

/// Bit i set iff u lies in B(line_i, 3).
std::uint8_t fano_signature(Codeword u);

enum class FanoCase {
  Empty,       // |supp u| = 0: all 7 balls
  Point,       // |supp u| = 1: the 3 lines through the point
  Pair,        // |supp u| = 2: the 5 lines meeting the pair
  Line,        // supp u is a line: that line only
  NonLine,     // |supp u| = 3, not a line: the 3 lines meeting supp u twice
  Complement,  // |supp u| >= 4: the balls missing from the complement's set
};
std::string to_string(FanoCase c);

struct FanoPrediction {
  FanoCase label = FanoCase::Empty;
  FanoCase complement_label = FanoCase::Empty;  // case of ~u when label is Complement
  unsigned predicted_size = 0;
  std::uint8_t predicted_balls = 0;
};

/// Predicts S(u) from the support of u alone, without distance computations.
FanoPrediction fano_case_analysis(Codeword u);

struct FanoVerification {
  bool separating = false;
  std::vector<Codeword> empty_signature_vertices;
  std::vector<Codeword> case_table_mismatches;
  bool complement_partition = false;  // S(u) and S(~u) partition the 7 balls for all u
  bool high_weight_even = false;      // |S(u)| even whenever |supp u| > 3
};

FanoVerification fano_verify();

}  // namespace ballsearch
