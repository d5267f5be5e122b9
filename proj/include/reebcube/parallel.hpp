#pragma once

#include <thread>
#include <vector>

namespace reebcube {

// Runs fn(begin, end, worker) over [0, n) split into contiguous blocks, one
// per worker. Workers write only into their own slot, then callers merge the
// slots in worker order, so results do not depend on the job count.
template <class Fn>
void run_blocks(int n, int jobs, Fn fn) {
  if (jobs <= 1 || n <= 1) {
    fn(0, n, 0);
    return;
  }
  if (jobs > n) jobs = n;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  const int chunk = (n + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const int b = w * chunk;
    const int e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([=] { fn(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace reebcube
