#pragma once

// Discrepancy of circular sequences and de Bruijn validation.

#include "lowdisc/core.hpp"
#include "lowdisc/cyclic_sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace lowdisc {

/// One maximizing circular substring: `length` symbols starting at `start`
/// in which `symbol_max` occurs `value` more times than `symbol_min`.
struct DiscrepancyWitness {
  std::size_t start = 0;
  std::size_t length = 0;
  Symbol symbol_max = 0;
  Symbol symbol_min = 0;

  friend bool operator==(const DiscrepancyWitness&, const DiscrepancyWitness&) = default;
};

struct DiscrepancyReport {
  std::int64_t value = 0;
  DiscrepancyWitness witness;
};

/// Maximum over circular substrings of length 1..N of (most frequent count -
/// least frequent count). O(k^2 N) time, O(N) memory. The witness is the
/// maximizer with the smallest start, then the smallest length.
DiscrepancyReport discrepancy(const CyclicSequence& w);

/// Largest input accepted by discrepancy_naive.
inline constexpr std::size_t kNaiveDiscrepancyLimit = std::size_t{1} << 14;

/// Quadratic enumeration of every circular substring. Throws
/// std::invalid_argument above kNaiveDiscrepancyLimit symbols.
std::int64_t discrepancy_naive(const CyclicSequence& w);

struct DuplicateWindow {
  std::size_t first = 0;
  std::size_t second = 0;
};

struct DeBruijnCheck {
  bool ok = false;
  /// Empty when ok.
  std::string reason;
  /// Set when the length matched but some window occurs twice: the first
  /// position whose window was already seen, and where it was seen.
  std::optional<DuplicateWindow> duplicate;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that |w| = k^n and every length-n circular window is distinct.
DeBruijnCheck check_de_bruijn(const CyclicSequence& w, std::size_t n);

bool is_de_bruijn(const CyclicSequence& w, std::size_t n);

namespace detail {

// Window deduplication by base-k encoding. Requires n * log2(k) <= 60.
std::optional<DuplicateWindow> first_duplicate_by_encoding(const CyclicSequence& w,
                                                           std::size_t n);
// Same result via sorting window start positions lexicographically.
std::optional<DuplicateWindow> first_duplicate_by_sorting(const CyclicSequence& w,
                                                          std::size_t n);

} // namespace detail

} // namespace lowdisc
