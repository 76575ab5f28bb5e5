#pragma once

#include "lowdisc/core.hpp"

#include <span>
#include <vector>

namespace lowdisc {

/// A sequence over Z_k interpreted circularly.
class CyclicSequence {
public:
  /// Throws std::invalid_argument on an empty sequence or out-of-range symbol.
  CyclicSequence(std::vector<Symbol> symbols, AlphabetSize k);

  std::size_t size() const noexcept { return symbols_.size(); }
  AlphabetSize alphabet() const noexcept { return k_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  /// Symbol at circular position i (any i).
  Symbol at_circular(std::size_t i) const { return symbols_[i % symbols_.size()]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

private:
  std::vector<Symbol> symbols_;
  AlphabetSize k_;
};

} // namespace lowdisc
