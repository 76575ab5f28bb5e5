#pragma once

// Alphabet-parameterized primitives: symbol strings, histograms, the
// incremented cycle register (ICR) rules and difference arrays.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lowdisc {

using Symbol = std::uint32_t;

/// Number of symbols in the alphabet. Always at least 2.
class AlphabetSize {
public:
  explicit AlphabetSize(std::uint32_t k);

  std::uint32_t value() const noexcept { return k_; }

  /// Non-negative residue of x modulo k.
  Symbol reduce(std::int64_t x) const noexcept {
    const auto k = static_cast<std::int64_t>(k_);
    return static_cast<Symbol>(((x % k) + k) % k);
  }

  friend bool operator==(AlphabetSize, AlphabetSize) = default;

private:
  std::uint32_t k_;
};

/// k^n, or 0 when it does not fit in 63 bits.
std::uint64_t checked_power(AlphabetSize k, std::size_t n) noexcept;

/// Fixed-length word over Z_k. A node of the de Bruijn graph.
class SymbolString {
public:
  SymbolString(std::vector<Symbol> symbols, AlphabetSize k);
  SymbolString(std::initializer_list<Symbol> symbols, AlphabetSize k)
      : SymbolString(std::vector<Symbol>(symbols), k) {}

  /// The all-zero string 0^n.
  static SymbolString zeros(std::size_t n, AlphabetSize k);

  std::size_t size() const noexcept { return symbols_.size(); }
  AlphabetSize alphabet() const noexcept { return k_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

private:
  std::vector<Symbol> symbols_;
  AlphabetSize k_;
};

/// Symbol -> count map. Counts are signed: histograms form a group.
class Histogram {
public:
  explicit Histogram(AlphabetSize k) : counts_(k.value(), 0) {}
  explicit Histogram(std::vector<std::int64_t> counts);

  /// Indicator histogram e_b.
  static Histogram unit(Symbol b, AlphabetSize k);
  /// The constant-one histogram K.
  static Histogram constant_one(AlphabetSize k);

  std::size_t size() const noexcept { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  std::int64_t& operator[](std::size_t i) { return counts_[i]; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  Histogram& operator+=(const Histogram& other);
  Histogram& operator-=(const Histogram& other);
  friend Histogram operator+(Histogram a, const Histogram& b) { return a += b; }
  friend Histogram operator-(Histogram a, const Histogram& b) { return a -= b; }

  friend bool operator==(const Histogram&, const Histogram&) = default;

private:
  std::vector<std::int64_t> counts_;
};

/// Difference array of a string. Entries lie in [0, k) and sum to -1 mod k.
class DifferenceArray {
public:
  /// Throws std::invalid_argument if an entry is out of range or the sum
  /// invariant is violated.
  DifferenceArray(std::vector<Symbol> entries, AlphabetSize k);

  std::size_t size() const noexcept { return entries_.size(); }
  AlphabetSize alphabet() const noexcept { return k_; }
  Symbol operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Symbol> entries() const noexcept { return entries_; }

  friend bool operator==(const DifferenceArray&, const DifferenceArray&) = default;

private:
  std::vector<Symbol> entries_;
  AlphabetSize k_;
};

/// ICR_inc(s) = s[1..n-1] (s[0] + inc mod k).
SymbolString icr(const SymbolString& s, std::int64_t inc);

/// Inverse of icr for the same increment.
SymbolString icr_inverse(const SymbolString& s, std::int64_t inc);

Histogram histogram(const SymbolString& s);

/// max_i H(i) - min_j H(j).
std::int64_t hist_difference(const Histogram& h);

/// P(H)(i) = sum_{j <= i} H(j).
Histogram hist_partial_sum(const Histogram& h);

/// Canonical representative of H modulo multiples of K: entry 0 is zero.
Histogram hist_normalize_mod_K(const Histogram& h);

DifferenceArray diff_array(const SymbolString& s);

/// True iff no rotation of `a` is lexicographically smaller. O(n).
bool is_minimal_rotation(std::span<const Symbol> a);

namespace detail {

// Allocation-free kernels shared by the value API and the streaming
// generator. `out` must have the same length as `s` and must not alias it.
void icr_into(std::span<const Symbol> s, std::int64_t inc, AlphabetSize k,
              std::span<Symbol> out) noexcept;
void diff_array_into(std::span<const Symbol> s, AlphabetSize k,
                     std::span<Symbol> out) noexcept;

} // namespace detail

} // namespace lowdisc
