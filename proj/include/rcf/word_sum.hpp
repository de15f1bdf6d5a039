#ifndef RCF_WORD_SUM_HPP
#define RCF_WORD_SUM_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

#include "rcf/ifs.hpp"

namespace rcf {

namespace detail {

// Right-multiplication by the generator with x = 0 resp. x = alpha.
// b' = x*(a+b) + b and d' = x*(c+d) + d, so the zero branch is add-only.
inline Mat2 step_zero(const Mat2& m) {
  return {m.a + m.b, m.b, m.c + m.d, m.d};
}

inline Mat2 step_alpha(const Mat2& m, double alpha) {
  const double sa = m.a + m.b;
  const double sc = m.c + m.d;
  return {sa, alpha * sa + m.b, sc, alpha * sc + m.d};
}

template <class Leaf>
void walk_words(const Mat2& m, double alpha, int remaining, Leaf& leaf) {
  if (remaining == 0) {
    leaf(m);
    return;
  }
  walk_words(step_zero(m), alpha, remaining - 1, leaf);
  walk_words(step_alpha(m, alpha), alpha, remaining - 1, leaf);
}

inline void collect_prefixes(const Mat2& m, double alpha, int remaining,
                             std::vector<Mat2>& out) {
  if (remaining == 0) {
    out.push_back(m);
    return;
  }
  collect_prefixes(step_zero(m), alpha, remaining - 1, out);
  collect_prefixes(step_alpha(m, alpha), alpha, remaining - 1, out);
}

// Runs fn(b) for b = 0..blocks-1 on up to `threads` workers. Each block is
// handled exactly once; blocks write only to their own slots, so the result
// does not depend on the schedule.
template <class Fn>
void parallel_blocks(std::size_t blocks, int threads, Fn&& fn) {
  const int workers =
      std::min<std::size_t>(std::max(threads, 1), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      fn(b);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

// Blocking depth is a function of the word depth only, never of the thread
// count, so per-block partial sums (and therefore the combined total) are
// bit-identical for every parallelism degree.
inline int prefix_depth_for(int depth) { return std::min(depth, 8); }

}  // namespace detail

/// Visits the generator-product matrix of every length-`depth` word in
/// depth-first order (zero branch first). Memory is O(depth).
template <class Leaf>
void for_each_word_matrix(double alpha, int depth, Leaf&& leaf) {
  detail::walk_words(Mat2{}, alpha, depth, leaf);
}

/// Sums K accumulators of leaf contributions over all 2^depth words.
/// `leaf(m, acc)` adds one word's contribution to acc. The traversal is
/// partitioned into fixed prefix blocks summed in index order, so the result
/// is independent of `threads`.
template <std::size_t K, class LeafFn>
std::array<double, K> sum_over_words(double alpha, int depth, int threads,
                                     LeafFn leaf) {
  const int prefix_depth = detail::prefix_depth_for(depth);
  std::vector<Mat2> prefixes;
  prefixes.reserve(std::size_t{1} << prefix_depth);
  detail::collect_prefixes(Mat2{}, alpha, prefix_depth, prefixes);

  std::vector<std::array<double, K>> partial(prefixes.size());
  const int tail = depth - prefix_depth;
  detail::parallel_blocks(prefixes.size(), threads, [&](std::size_t b) {
    std::array<double, K> acc{};
    auto visit = [&](const Mat2& m) { leaf(m, acc); };
    detail::walk_words(prefixes[b], alpha, tail, visit);
    partial[b] = acc;
  });

  std::array<double, K> total{};
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k] += part[k];
  }
  return total;
}

/// Vector-valued variant: each leaf adds into a width-`width` accumulator.
/// Same deterministic blocking as sum_over_words.
template <class LeafFn>
void sum_over_words_vec(double alpha, int depth, int threads,
                        std::size_t width, LeafFn leaf,
                        std::span<double> out) {
  const int prefix_depth = detail::prefix_depth_for(depth);
  std::vector<Mat2> prefixes;
  prefixes.reserve(std::size_t{1} << prefix_depth);
  detail::collect_prefixes(Mat2{}, alpha, prefix_depth, prefixes);

  std::vector<std::vector<double>> partial(prefixes.size());
  const int tail = depth - prefix_depth;
  detail::parallel_blocks(prefixes.size(), threads, [&](std::size_t b) {
    std::vector<double> acc(width, 0.0);
    auto visit = [&](const Mat2& m) { leaf(m, std::span<double>(acc)); };
    detail::walk_words(prefixes[b], alpha, tail, visit);
    partial[b] = std::move(acc);
  });

  std::fill(out.begin(), out.end(), 0.0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < width; ++i) out[i] += part[i];
  }
}

}  // namespace rcf

#endif
