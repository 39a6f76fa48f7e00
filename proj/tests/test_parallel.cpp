#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "majent/parallel.hpp"

using namespace majent;

TEST_CASE("parallel_for visits every index once") {
  for (int threads : {1, 3, 8}) {
    set_thread_count(threads);
    std::vector<int> hits(1001, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1001);
    CHECK(*std::min_element(hits.begin(), hits.end()) == 1);
  }
  set_thread_count(1);
}

TEST_CASE("nested loops run inline") {
  set_thread_count(4);
  std::atomic<int> total{0};
  parallel_for(8, [&](std::size_t) { parallel_for(10, [&](std::size_t) { ++total; }); });
  CHECK(total == 80);
  set_thread_count(1);
}

TEST_CASE("the lowest failing block's exception propagates") {
  set_thread_count(4);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i == 10) throw std::runtime_error("low");
      if (i == 90) throw std::logic_error("high");
    });
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "low");
  }
  set_thread_count(1);
  set_thread_count(0);
  CHECK(thread_count() == 1);
}
