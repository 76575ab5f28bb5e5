#include "lowdisc/generator.hpp"

#include <algorithm>
#include <string>

namespace lowdisc {

namespace detail {

bool correct_difference_array(std::span<const Symbol> s, AlphabetSize k,
                              std::span<Symbol> d) noexcept {
  const std::size_t n = s.size();
  diff_array_into(s, k, d);
  if (d[n - 1] == 0) return false;

  std::size_t i = n - 1;
  while (i > 0 && d[i - 1] == 0) --i;
  // Only the root orbit has n-1 zeros in its difference array.
  if (i == 0) return false;

  std::rotate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(i), d.end());
  return is_minimal_rotation(d);
}

bool depth_matches(std::span<const Symbol> s, std::int64_t depth,
                   AlphabetSize k) noexcept {
  return k.reduce(depth - static_cast<std::int64_t>(s.back())) == 0;
}

} // namespace detail

bool correct_difference_array(const SymbolString& s) {
  std::vector<Symbol> scratch(s.size());
  return detail::correct_difference_array(s.symbols(), s.alphabet(), scratch);
}

bool is_rep(const SymbolString& s, std::int64_t depth) {
  return correct_difference_array(s) &&
         detail::depth_matches(s.symbols(), depth, s.alphabet());
}

Transition transition(const GeneratorState& state) {
  const SymbolString& s = state.s;
  SymbolString down = icr(s, 0);
  if (is_rep(down, state.depth + 1)) {
    return {{std::move(down), state.depth + 1}, TransitionKind::EnterChild};
  }
  if (is_rep(icr(s, 1), state.depth)) {
    return {{icr(s, 2), state.depth - 1}, TransitionKind::ReturnToParent};
  }
  return {{icr(s, 1), state.depth}, TransitionKind::Stay};
}

bool is_valid_arc(const SymbolString& s, const SymbolString& t, std::int64_t ds,
                  std::int64_t dt) {
  const AlphabetSize k = s.alphabet();
  const std::size_t n = s.size();
  if (t.size() != n || t.alphabet() != k ||
      !std::equal(s.symbols().begin() + 1, s.symbols().end(), t.symbols().begin())) {
    throw NotAnArc("strings do not form an arc of the de Bruijn graph");
  }
  const std::int64_t b = s.front();
  const std::int64_t c = t.back();
  const bool increment_arc = k.reduce(b + 1 - c) == 0 && k.reduce(ds - dt) == 0;
  const bool depth_arc = k.reduce(b + 1 - dt) == 0 && k.reduce(c - ds) == 0;
  return increment_arc || depth_arc;
}

Generator::Generator(AlphabetSize k, std::size_t n) : k_(k) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  s_.assign(n, 0);
  icr0_.resize(n);
  icr1_.resize(n);
  scratch_.resize(n);
  length_ = checked_power(k, n);
}

std::optional<Symbol> Generator::next() {
  if (done_) return std::nullopt;

  detail::icr_into(s_, 0, k_, icr0_);
  detail::icr_into(s_, 1, k_, icr1_);
  if (detail::depth_matches(icr0_, depth_ + 1, k_) &&
      detail::correct_difference_array(icr0_, k_, scratch_)) {
    s_.swap(icr0_);
    ++depth_;
    last_kind_ = TransitionKind::EnterChild;
  } else if (detail::depth_matches(icr1_, depth_, k_) &&
             detail::correct_difference_array(icr1_, k_, scratch_)) {
    // ICR_2(s) is ICR_1(s) with its last symbol incremented once more.
    s_.swap(icr1_);
    s_.back() = k_.reduce(static_cast<std::int64_t>(s_.back()) + 1);
    --depth_;
    last_kind_ = TransitionKind::ReturnToParent;
  } else {
    s_.swap(icr1_);
    last_kind_ = TransitionKind::Stay;
  }
  ++emitted_;

  const bool at_start = std::all_of(s_.begin(), s_.end(), [](Symbol c) { return c == 0; });
  if (length_ != 0) {
    if (at_start != (emitted_ == length_)) {
      throw std::logic_error("transition walk closed after " + std::to_string(emitted_) +
                             " steps, expected " + std::to_string(length_));
    }
  }
  done_ = at_start;
  return s_.back();
}

CyclicSequence generate(AlphabetSize k, std::size_t n) {
  Generator g(k, n);
  std::vector<Symbol> out;
  if (g.length() != 0) out.reserve(g.length());
  while (auto v = g.next()) out.push_back(*v);
  return CyclicSequence(std::move(out), k);
}

} // namespace lowdisc
