#ifndef BINSYS_SRC_PARALLEL_HPP_
#define BINSYS_SRC_PARALLEL_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <exception>  // for exception_ptr
#include <thread>     // for thread
#include <vector>     // for vector

namespace binsys::detail {

  // Splits [0, total) into contiguous shards and runs f(shard, begin, end) on
  // each, one thread per shard. Returns one result per shard in shard order,
  // so merging is independent of scheduling. Rethrows the first exception.
  template <typename Result, typename F>
  std::vector<Result> run_sharded(std::uint64_t total,
                                  std::size_t   threads,
                                  F&&           f) {
    std::size_t const shards = static_cast<std::size_t>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
    std::vector<Result>             results(shards);
    std::vector<std::exception_ptr> errors(shards);
    auto work = [&](std::size_t s) {
      std::uint64_t const begin = total * s / shards;
      std::uint64_t const end   = total * (s + 1) / shards;
      try {
        results[s] = f(s, begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    };
    if (shards == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(shards);
      for (std::size_t s = 0; s < shards; ++s) {
        pool.emplace_back(work, s);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return results;
  }

}  // namespace binsys::detail

#endif  // BINSYS_SRC_PARALLEL_HPP_
