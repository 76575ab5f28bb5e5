#pragma once

// Streaming generator for minimum-discrepancy de Bruijn sequences.
//
// The cycle of orbits under ICR_1 is joined into a single Hamiltonian cycle
// by following an implicit spanning tree over orbits. Neither the tree nor
// the de Bruijn graph is stored; membership of a string in the set of
// orbit representatives is decided from its difference array alone, so the
// working state is one string plus a depth counter.

#include "lowdisc/core.hpp"
#include "lowdisc/cyclic_sequence.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lowdisc {

struct GeneratorState {
  SymbolString s;
  /// Tree depth of the ICR_1-orbit containing `s`. The root orbit (of 0^n)
  /// has depth 0. Unbounded; only compared modulo k.
  std::int64_t depth = 0;

  friend bool operator==(const GeneratorState&, const GeneratorState&) = default;
};

enum class TransitionKind {
  EnterChild,     // ICR_0 branch
  ReturnToParent, // ICR_2 branch
  Stay,           // ICR_1 branch
};

struct Transition {
  GeneratorState next;
  TransitionKind kind;
};

/// True iff Δ(s) has the shape required of a representative: its first
/// trailing zero-run ends at the last position, the rotation that starts
/// that run is lexicographically minimal, and s is not in the root orbit.
bool correct_difference_array(const SymbolString& s);

/// Representative test given the tree depth of orbit(s).
bool is_rep(const SymbolString& s, std::int64_t depth);

/// One step of the transition rule. Branches are tried in order
/// ICR_0, ICR_2, ICR_1; the first that applies wins.
Transition transition(const GeneratorState& state);

/// Thrown by is_valid_arc when (s, t) is not an arc of the de Bruijn graph.
class NotAnArc : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Arc validity for the valid subgraph with depths ds, dt (taken mod k):
/// with b = s[0] and c = t[n-1], either b+1 = c and ds = dt, or
/// b+1 = dt and c = ds.
bool is_valid_arc(const SymbolString& s, const SymbolString& t, std::int64_t ds,
                  std::int64_t dt);

/// Pull-based generator. Emits k^n symbols, the last symbol of each
/// successor state, starting from 0^n and stopping when 0^n recurs.
/// Working memory is O(n) and each symbol costs O(n).
class Generator {
public:
  /// Throws std::invalid_argument if n < 1.
  Generator(AlphabetSize k, std::size_t n);

  /// Next symbol, or nullopt once the cycle has closed.
  /// Throws std::logic_error if the walk closes early or overruns k^n.
  std::optional<Symbol> next();

  bool done() const noexcept { return done_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  /// k^n, or 0 if it does not fit in 63 bits.
  std::uint64_t length() const noexcept { return length_; }
  AlphabetSize alphabet() const noexcept { return k_; }
  std::size_t order() const noexcept { return s_.size(); }
  std::int64_t depth() const noexcept { return depth_; }
  std::span<const Symbol> current() const noexcept { return s_; }
  TransitionKind last_kind() const noexcept { return last_kind_; }

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Symbol;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Generator* g) : g_(g) { ++*this; }

    Symbol operator*() const { return value_; }
    iterator& operator++() {
      auto v = g_->next();
      if (v) {
        value_ = *v;
      } else {
        g_ = nullptr;
      }
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.g_ == nullptr;
    }

  private:
    Generator* g_ = nullptr;
    Symbol value_ = 0;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

private:
  AlphabetSize k_;
  std::vector<Symbol> s_;
  std::vector<Symbol> icr0_;
  std::vector<Symbol> icr1_;
  std::vector<Symbol> scratch_;
  std::int64_t depth_ = 0;
  std::uint64_t emitted_ = 0;
  std::uint64_t length_ = 0;
  TransitionKind last_kind_ = TransitionKind::Stay;
  bool done_ = false;
};

/// Calls emit(symbol) for each of the k^n output symbols.
template <typename Emit>
void generate_each(AlphabetSize k, std::size_t n, Emit&& emit) {
  Generator g(k, n);
  while (auto v = g.next()) emit(*v);
}

/// Materializes the whole sequence.
CyclicSequence generate(AlphabetSize k, std::size_t n);

namespace detail {

// `scratch` must have length s.size().
bool correct_difference_array(std::span<const Symbol> s, AlphabetSize k,
                              std::span<Symbol> scratch) noexcept;

} // namespace detail

} // namespace lowdisc
