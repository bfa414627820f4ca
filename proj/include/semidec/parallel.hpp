// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#ifndef SEMIDEC_PARALLEL_HPP_
#define SEMIDEC_PARALLEL_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <thread>       // for thread
#include <type_traits>  // for is_same_v
#include <vector>     // for vector

namespace semidec {

  //! Calls fn(i) for i in [0, count) on `threads` threads, item i going to
  //! thread i % threads, and returns the results in index order.
  template <typename Fn>
  auto parallel_map(std::size_t count, std::size_t threads, Fn&& fn) {
    using Result = decltype(fn(std::size_t(0)));
    // vector<bool> packs bits, so concurrent writes would race.
    static_assert(!std::is_same_v<Result, bool>);
    std::vector<Result> results(count);
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
      for (std::size_t i = 0; i < count; ++i) {
        results[i] = fn(i);
      }
      return results;
    }
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < count; i += threads) {
          results[i] = fn(i);
        }
      });
    }
    for (auto& w : workers) {
      w.join();
    }
    return results;
  }

}  // namespace semidec

#endif  // SEMIDEC_PARALLEL_HPP_
