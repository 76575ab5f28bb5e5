#pragma once

// Exhaustive search for the minimum discrepancy attainable by any de Bruijn
// sequence of a given order and alphabet size. Only feasible for tiny
// parameters: the number of de Bruijn sequences grows doubly exponentially.

#include "lowdisc/core.hpp"
#include "lowdisc/cyclic_sequence.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace lowdisc {

/// Exceeding either limit yields an indeterminate answer, never a wrong one.
struct SearchBudget {
  std::chrono::duration<double> time_limit = std::chrono::seconds(60);
  /// Maximum number of DFS expansions; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

/// Largest k^n the search accepts.
inline constexpr std::uint64_t kSearchMaxNodes = std::uint64_t{1} << 24;

enum class SearchAnswer { Yes, No, Indeterminate };

struct SearchOutcome {
  SearchAnswer answer = SearchAnswer::Indeterminate;
  /// Present iff answer == Yes.
  std::optional<CyclicSequence> witness;
  std::uint64_t expansions = 0;
};

/// Decides whether some de Bruijn sequence of order n over k symbols has
/// discrepancy <= max_discrepancy. The DFS walks Hamiltonian paths of the de
/// Bruijn graph from 0^n, trying symbols in increasing order, and prunes a
/// partial path as soon as a linear substring of the sequence built so far
/// exceeds the bound. Completed cycles get a full circular check, so a Yes
/// witness is the lexicographically least sequence (anchored at 0^n) that
/// meets the bound.
///
/// With threads > 1 the branches below 0^n are searched concurrently, each
/// with its own copy of the budget; the merged result prefers Yes, then No,
/// and among Yes answers the lowest branch.
///
/// Throws std::invalid_argument when n < 1 or k^n > kSearchMaxNodes.
SearchOutcome exists_debruijn_with_discrepancy(AlphabetSize k, std::size_t n,
                                               std::int64_t max_discrepancy,
                                               const SearchBudget& budget,
                                               unsigned threads = 1);

struct MinDiscrepancyResult {
  bool exact = false;
  /// Meaningful only when exact.
  std::int64_t value = 0;
  /// A sequence attaining `value` when exact.
  std::optional<CyclicSequence> witness;
};

/// Tests bound n; if it is unattainable the generator's output attains n+1.
MinDiscrepancyResult min_discrepancy(AlphabetSize k, std::size_t n,
                                     const SearchBudget& budget, unsigned threads = 1);

} // namespace lowdisc
