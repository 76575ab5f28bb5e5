#include "lowdisc/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lowdisc {

CyclicSequence::CyclicSequence(std::vector<Symbol> symbols, AlphabetSize k)
    : symbols_(std::move(symbols)), k_(k) {
  if (symbols_.empty()) throw std::invalid_argument("sequence must be non-empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= k.value()) {
      throw std::invalid_argument("symbol " + std::to_string(symbols_[i]) +
                                  " at position " + std::to_string(i) +
                                  " out of range for alphabet size " +
                                  std::to_string(k.value()));
    }
  }
}

namespace {

bool better(std::int64_t value, std::size_t start, std::size_t length,
            const DiscrepancyReport& best) {
  if (value != best.value) return value > best.value;
  if (start != best.witness.start) return start < best.witness.start;
  return length < best.witness.length;
}

} // namespace

DiscrepancyReport discrepancy(const CyclicSequence& w) {
  const std::size_t n = w.size();
  if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2)) {
    throw std::invalid_argument("sequence too long for discrepancy");
  }
  const Symbol k = w.alphabet().value();

  DiscrepancyReport best;
  best.value = std::numeric_limits<std::int64_t>::min();

  // prefix[t] = sum of the +1/-1/0 weights of the doubled sequence before t.
  std::vector<std::int32_t> prefix(2 * n);
  std::deque<std::size_t> window;

  for (Symbol a = 0; a < k; ++a) {
    for (Symbol c = 0; c < k; ++c) {
      if (a == c) continue;
      prefix[0] = 0;
      for (std::size_t t = 0; t + 1 < 2 * n; ++t) {
        const Symbol x = w.at_circular(t);
        prefix[t + 1] = prefix[t] + (x == a) - (x == c);
      }

      // For each start b, the best end lies in [b+1, b+n]. The deque holds
      // candidate ends with non-increasing prefix values; ties keep the
      // earliest end at the front so the shortest maximizer wins.
      window.clear();
      auto push = [&](std::size_t e) {
        while (!window.empty() && prefix[window.back()] < prefix[e]) window.pop_back();
        window.push_back(e);
      };
      for (std::size_t e = 1; e <= n; ++e) push(e);
      for (std::size_t b = 0; b < n; ++b) {
        if (b > 0) push(b + n);
        while (window.front() <= b) window.pop_front();
        const std::size_t e = window.front();
        const std::int64_t value = prefix[e] - prefix[b];
        if (better(value, b, e - b, best)) {
          best.value = value;
          best.witness = {b, e - b, a, c};
        }
      }
    }
  }
  return best;
}

std::int64_t discrepancy_naive(const CyclicSequence& w) {
  const std::size_t n = w.size();
  if (n > kNaiveDiscrepancyLimit) {
    throw std::invalid_argument("sequence too long for naive discrepancy");
  }
  const std::size_t k = w.alphabet().value();
  std::vector<std::int64_t> counts(k);
  std::int64_t best = 0;
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t len = 1; len <= n; ++len) {
      ++counts[w.at_circular(start + len - 1)];
      const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
      best = std::max(best, *hi - *lo);
    }
  }
  return best;
}

namespace detail {

std::optional<DuplicateWindow> first_duplicate_by_encoding(const CyclicSequence& w,
                                                           std::size_t n) {
  const std::size_t len = w.size();
  const std::uint64_t k = w.alphabet().value();
  const std::uint64_t modulus = checked_power(w.alphabet(), n);
  if (modulus == 0 || modulus > (std::uint64_t{1} << 60)) {
    throw std::invalid_argument("window encoding exceeds 60 bits");
  }
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  // Codes are only < len when len == k^n; otherwise fall back to a sort.
  if (modulus > len) return first_duplicate_by_sorting(w, n);
  std::vector<std::size_t> seen(len, unseen);

  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) code = (code * k + w.at_circular(i)) % modulus;
  for (std::size_t pos = 0; pos < len; ++pos) {
    if (pos > 0) code = (code * k + w.at_circular(pos + n - 1)) % modulus;
    if (seen[code] != unseen) return DuplicateWindow{seen[code], pos};
    seen[code] = pos;
  }
  return std::nullopt;
}

std::optional<DuplicateWindow> first_duplicate_by_sorting(const CyclicSequence& w,
                                                          std::size_t n) {
  const std::size_t len = w.size();
  std::vector<std::size_t> order(len);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i) {
      const Symbol a = w.at_circular(x + i);
      const Symbol b = w.at_circular(y + i);
      if (a != b) return a < b;
    }
    return false;
  };
  std::stable_sort(order.begin(), order.end(), less);

  std::optional<DuplicateWindow> result;
  for (std::size_t i = 1; i < len; ++i) {
    // Groups of equal windows are contiguous and ordered by position.
    if (less(order[i - 1], order[i])) continue;
    std::size_t j = i;
    while (j > 0 && !less(order[j - 1], order[j])) --j;
    const DuplicateWindow dup{order[j], order[i]};
    if (!result || dup.second < result->second) result = dup;
  }
  return result;
}

} // namespace detail

DeBruijnCheck check_de_bruijn(const CyclicSequence& w, std::size_t n) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  DeBruijnCheck check;
  const std::uint64_t expected = checked_power(w.alphabet(), n);
  if (expected == 0 || expected != w.size()) {
    check.reason = "length " + std::to_string(w.size()) + " != " +
                   std::to_string(w.alphabet().value()) + "^" + std::to_string(n);
    return check;
  }
  check.duplicate = expected <= (std::uint64_t{1} << 60)
                        ? detail::first_duplicate_by_encoding(w, n)
                        : detail::first_duplicate_by_sorting(w, n);
  if (check.duplicate) {
    check.reason = "window at position " + std::to_string(check.duplicate->second) +
                   " repeats position " + std::to_string(check.duplicate->first);
    return check;
  }
  check.ok = true;
  return check;
}

bool is_de_bruijn(const CyclicSequence& w, std::size_t n) {
  return check_de_bruijn(w, n).ok;
}

} // namespace lowdisc
