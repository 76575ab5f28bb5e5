#include "lowdisc/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lowdisc {

AlphabetSize::AlphabetSize(std::uint32_t k) : k_(k) {
  if (k < 2) {
    throw std::invalid_argument("alphabet size must be at least 2, got " +
                                std::to_string(k));
  }
}

std::uint64_t checked_power(AlphabetSize k, std::size_t n) noexcept {
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (p > limit / k.value()) return 0;
    p *= k.value();
  }
  return p;
}

SymbolString::SymbolString(std::vector<Symbol> symbols, AlphabetSize k)
    : symbols_(std::move(symbols)), k_(k) {
  if (symbols_.empty()) {
    throw std::invalid_argument("symbol string must have length >= 1");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= k.value()) {
      throw std::invalid_argument("symbol " + std::to_string(symbols_[i]) +
                                  " at position " + std::to_string(i) +
                                  " out of range for alphabet size " +
                                  std::to_string(k.value()));
    }
  }
}

SymbolString SymbolString::zeros(std::size_t n, AlphabetSize k) {
  return SymbolString(std::vector<Symbol>(n, 0), k);
}

Histogram::Histogram(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  if (counts_.size() < 2) {
    throw std::invalid_argument("histogram needs at least 2 symbols");
  }
}

Histogram Histogram::unit(Symbol b, AlphabetSize k) {
  Histogram h(k);
  h.counts_.at(b) = 1;
  return h;
}

Histogram Histogram::constant_one(AlphabetSize k) {
  return Histogram(std::vector<std::int64_t>(k.value(), 1));
}

Histogram& Histogram::operator+=(const Histogram& other) {
  if (other.size() != size()) throw std::invalid_argument("histogram size mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

Histogram& Histogram::operator-=(const Histogram& other) {
  if (other.size() != size()) throw std::invalid_argument("histogram size mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  return *this;
}

DifferenceArray::DifferenceArray(std::vector<Symbol> entries, AlphabetSize k)
    : entries_(std::move(entries)), k_(k) {
  if (entries_.empty()) {
    throw std::invalid_argument("difference array must have length >= 1");
  }
  std::uint64_t sum = 0;
  for (Symbol e : entries_) {
    if (e >= k.value()) {
      throw std::invalid_argument("difference array entry out of range");
    }
    sum += e;
  }
  if ((sum + 1) % k.value() != 0) {
    throw std::invalid_argument("difference array entries must sum to -1 mod k");
  }
}

namespace detail {

void icr_into(std::span<const Symbol> s, std::int64_t inc, AlphabetSize k,
              std::span<Symbol> out) noexcept {
  const std::size_t n = s.size();
  std::copy(s.begin() + 1, s.end(), out.begin());
  out[n - 1] = k.reduce(static_cast<std::int64_t>(s[0]) + k.reduce(inc));
}

void diff_array_into(std::span<const Symbol> s, AlphabetSize k,
                     std::span<Symbol> out) noexcept {
  const std::size_t n = s.size();
  out[0] = k.reduce(static_cast<std::int64_t>(s[n - 1]) - s[0] - 1);
  for (std::size_t i = 1; i < n; ++i) {
    out[i] = k.reduce(static_cast<std::int64_t>(s[i - 1]) - s[i]);
  }
}

} // namespace detail

SymbolString icr(const SymbolString& s, std::int64_t inc) {
  std::vector<Symbol> out(s.size());
  detail::icr_into(s.symbols(), inc, s.alphabet(), out);
  return SymbolString(std::move(out), s.alphabet());
}

SymbolString icr_inverse(const SymbolString& s, std::int64_t inc) {
  const AlphabetSize k = s.alphabet();
  const std::size_t n = s.size();
  std::vector<Symbol> out(n);
  out[0] = k.reduce(static_cast<std::int64_t>(s[n - 1]) - k.reduce(inc));
  for (std::size_t i = 1; i < n; ++i) out[i] = s[i - 1];
  return SymbolString(std::move(out), k);
}

Histogram histogram(const SymbolString& s) {
  Histogram h(s.alphabet());
  for (Symbol c : s.symbols()) ++h[c];
  return h;
}

std::int64_t hist_difference(const Histogram& h) {
  const auto [lo, hi] = std::minmax_element(h.counts().begin(), h.counts().end());
  return *hi - *lo;
}

Histogram hist_partial_sum(const Histogram& h) {
  Histogram p = h;
  for (std::size_t i = 1; i < p.size(); ++i) p[i] += p[i - 1];
  return p;
}

Histogram hist_normalize_mod_K(const Histogram& h) {
  Histogram out = h;
  const std::int64_t base = h[0];
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= base;
  return out;
}

DifferenceArray diff_array(const SymbolString& s) {
  std::vector<Symbol> out(s.size());
  detail::diff_array_into(s.symbols(), s.alphabet(), out);
  return DifferenceArray(std::move(out), s.alphabet());
}

// Duval-style scan over the doubled array: `i` tracks the position in the
// current candidate period. Any strictly smaller continuation means a
// smaller rotation exists.
bool is_minimal_rotation(std::span<const Symbol> a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0, j = 1; j < 2 * n; ++j) {
    const Symbol x = a[i % n];
    const Symbol y = a[j % n];
    if (y < x) return false;
    if (x < y) {
      i = 0;
    } else {
      ++i;
    }
  }
  return true;
}

} // namespace lowdisc
