#include "lowdisc/search.hpp"

#include "lowdisc/analysis.hpp"
#include "lowdisc/generator.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lowdisc {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first search over Hamiltonian cycles of the de Bruijn graph with
// nodes encoded as base-k integers. The sequence under construction is
// L = 0^n followed by the emitted symbols; L is a circular substring of the
// final sequence, so for |L| <= N every window of L must already respect the
// bound.
class CycleSearch {
public:
  CycleSearch(AlphabetSize k, std::size_t n, std::int64_t bound, const SearchBudget& budget,
              const std::atomic<std::size_t>* cancel_above, std::size_t branch)
      : k_(k.value()), n_(n), nodes_(checked_power(k, n)), bound_(bound), budget_(budget),
        cancel_above_(cancel_above), branch_(branch), alphabet_(k) {
    for (Symbol a = 0; a < k_; ++a) {
      for (Symbol c = 0; c < k_; ++c) {
        if (a != c) pairs_.push_back({a, c});
      }
    }
  }

  // Searches cycles whose first emitted symbol lies in [first_lo, first_hi).
  SearchOutcome run(Symbol first_lo, Symbol first_hi) {
    const std::size_t pairs = pairs_.size();
    const std::size_t len = static_cast<std::size_t>(nodes_);
    visited_.assign(len, 0);
    prefix_.assign((len + 1) * pairs, 0);
    minimum_.assign((len + 1) * pairs, 0);
    path_.assign(len + 1, 0);
    next_symbol_.assign(len + 1, 0);
    emitted_.assign(len, 0);

    // The leading 0^n: prefix value of pair (a, c) is +n if a == 0, -n if
    // c == 0; the running minimum includes the empty prefix.
    const auto n = static_cast<std::int32_t>(n_);
    for (std::size_t p = 0; p < pairs; ++p) {
      const std::int32_t v = pairs_[p].a == 0 ? n : (pairs_[p].c == 0 ? -n : 0);
      prefix_[p] = v;
      minimum_[p] = std::min(0, v);
    }

    SearchOutcome out;
    const auto deadline = Clock::now() +
                          std::chrono::duration_cast<Clock::duration>(budget_.time_limit);
    visited_[0] = 1;
    path_[0] = 0;
    next_symbol_[0] = first_lo;
    std::size_t depth = 0;

    while (true) {
      const Symbol limit = depth == 0 ? first_hi : k_;
      if (next_symbol_[depth] >= limit) {
        if (depth == 0) {
          out.answer = SearchAnswer::No;
          return out;
        }
        visited_[path_[depth]] = 0;
        --depth;
        continue;
      }
      const Symbol x = next_symbol_[depth]++;
      const std::uint64_t node = (path_[depth] * k_ + x) % nodes_;
      const bool closing = depth + 1 == len;
      if (closing ? node != 0 : visited_[node] != 0) continue;
      if (!extend(depth, x)) continue;

      ++out.expansions;
      if (budget_.node_limit != 0 && out.expansions > budget_.node_limit) {
        out.answer = SearchAnswer::Indeterminate;
        return out;
      }
      if ((out.expansions & 0xfff) == 0) {
        if (Clock::now() > deadline) {
          out.answer = SearchAnswer::Indeterminate;
          return out;
        }
        if (cancel_above_ != nullptr && cancel_above_->load() < branch_) {
          out.answer = SearchAnswer::Indeterminate;
          return out;
        }
      }

      emitted_[depth] = x;
      if (closing) {
        CyclicSequence w(emitted_, alphabet_);
        if (discrepancy(w).value <= bound_) {
          out.answer = SearchAnswer::Yes;
          out.witness = std::move(w);
          return out;
        }
        continue;
      }
      ++depth;
      path_[depth] = node;
      visited_[node] = 1;
      next_symbol_[depth] = 0;
    }
  }

private:
  struct Pair {
    Symbol a;
    Symbol c;
  };

  // Computes the pair statistics after appending x at position `depth` of
  // the emitted sequence; false if some window now exceeds the bound.
  bool extend(std::size_t depth, Symbol x) {
    const std::size_t pairs = pairs_.size();
    const std::int32_t* p_old = &prefix_[depth * pairs];
    const std::int32_t* m_old = &minimum_[depth * pairs];
    std::int32_t* p_new = &prefix_[(depth + 1) * pairs];
    std::int32_t* m_new = &minimum_[(depth + 1) * pairs];
    // Windows of L longer than N would wrap onto themselves; those are left
    // to the final circular check.
    const bool check = n_ + depth + 1 <= static_cast<std::size_t>(nodes_);
    for (std::size_t p = 0; p < pairs; ++p) {
      const std::int32_t v = p_old[p] + (pairs_[p].a == x) - (pairs_[p].c == x);
      if (check && v - m_old[p] > bound_) return false;
      p_new[p] = v;
      m_new[p] = std::min(m_old[p], v);
    }
    return true;
  }

  Symbol k_;
  std::size_t n_;
  std::uint64_t nodes_;
  std::int64_t bound_;
  SearchBudget budget_;
  const std::atomic<std::size_t>* cancel_above_;
  std::size_t branch_;
  AlphabetSize alphabet_;
  std::vector<Pair> pairs_;

  std::vector<std::uint8_t> visited_;
  std::vector<std::int32_t> prefix_;
  std::vector<std::int32_t> minimum_;
  std::vector<std::uint64_t> path_;
  std::vector<Symbol> next_symbol_;
  std::vector<Symbol> emitted_;
};

SearchOutcome merge(std::vector<SearchOutcome>& branches) {
  SearchOutcome merged;
  merged.answer = SearchAnswer::No;
  for (auto& b : branches) merged.expansions += b.expansions;
  for (auto& b : branches) {
    if (b.answer == SearchAnswer::Yes) {
      merged.answer = SearchAnswer::Yes;
      merged.witness = std::move(b.witness);
      return merged;
    }
  }
  for (const auto& b : branches) {
    if (b.answer == SearchAnswer::Indeterminate) merged.answer = SearchAnswer::Indeterminate;
  }
  return merged;
}

} // namespace

SearchOutcome exists_debruijn_with_discrepancy(AlphabetSize k, std::size_t n,
                                               std::int64_t max_discrepancy,
                                               const SearchBudget& budget,
                                               unsigned threads) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  const std::uint64_t nodes = checked_power(k, n);
  if (nodes == 0 || nodes > kSearchMaxNodes) {
    throw std::invalid_argument("search is limited to k^n <= 2^24");
  }
  // Every de Bruijn sequence contains the run 0^n.
  if (max_discrepancy < static_cast<std::int64_t>(n)) {
    return {SearchAnswer::No, std::nullopt, 0};
  }

  // The first emitted symbol cannot be 0: node 0^n is the start.
  const Symbol branches = k.value() - 1;
  if (threads <= 1 || branches == 1) {
    return CycleSearch(k, n, max_discrepancy, budget, nullptr, 0).run(1, k.value());
  }

  std::vector<SearchOutcome> results(branches);
  std::atomic<std::size_t> next_branch{0};
  std::atomic<std::size_t> lowest_yes{branches};
  auto worker = [&] {
    while (true) {
      const std::size_t b = next_branch.fetch_add(1);
      if (b >= branches) return;
      if (lowest_yes.load() < b) {
        results[b].answer = SearchAnswer::Indeterminate;
        continue;
      }
      const Symbol first = static_cast<Symbol>(b + 1);
      results[b] = CycleSearch(k, n, max_discrepancy, budget, &lowest_yes, b).run(first, first + 1);
      if (results[b].answer == SearchAnswer::Yes) {
        std::size_t cur = lowest_yes.load();
        while (b < cur && !lowest_yes.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = std::min<unsigned>(threads, branches);
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  pool.clear();
  return merge(results);
}

MinDiscrepancyResult min_discrepancy(AlphabetSize k, std::size_t n,
                                     const SearchBudget& budget, unsigned threads) {
  const auto bound = static_cast<std::int64_t>(n);
  SearchOutcome at_n = exists_debruijn_with_discrepancy(k, n, bound, budget, threads);
  MinDiscrepancyResult result;
  switch (at_n.answer) {
  case SearchAnswer::Yes:
    result.exact = true;
    result.value = bound;
    result.witness = std::move(at_n.witness);
    break;
  case SearchAnswer::No: {
    CyclicSequence w = generate(k, n);
    if (discrepancy(w).value > bound + 1) {
      throw std::logic_error("generated sequence exceeds discrepancy n+1");
    }
    result.exact = true;
    result.value = bound + 1;
    result.witness = std::move(w);
    break;
  }
  case SearchAnswer::Indeterminate:
    break;
  }
  return result;
}

} // namespace lowdisc
