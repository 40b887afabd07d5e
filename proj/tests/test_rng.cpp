#include <doctest.h>

#include <cmath>
#include <vector>

#include "syngand/rng.hpp"

using namespace syngand;

TEST_SUITE("rng") {

TEST_CASE("same seed reproduces the stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("labeled splits are stable and distinct") {
  Rng root(7);
  Rng s1 = root.split("train");
  Rng s2 = root.split("train");
  Rng s3 = root.split("sample");
  CHECK(s1.next_u64() == s2.next_u64());
  CHECK(s1.next_u64() != s3.next_u64());
  Rng i0 = root.split(std::uint64_t{0});
  Rng i1 = root.split(std::uint64_t{1});
  CHECK(i0.next_u64() != i1.next_u64());
}

TEST_CASE("uniform stays in [0,1)") {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal moments") {
  Rng rng(11);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}

TEST_CASE("categorical matches weights") {
  Rng rng(5);
  std::vector<double> w = {0.2, 0.5, 0.3};
  std::vector<int> counts(3, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++counts[rng.categorical(w)];
  for (int k = 0; k < 3; ++k) CHECK(std::abs(counts[k] / double(n) - w[k]) < 0.01);
  std::vector<double> zero = {0.0, 0.0};
  CHECK_THROWS(rng.categorical(zero));
}

TEST_CASE("shuffle is a permutation") {
  Rng rng(9);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  rng.shuffle(std::span<int>(v));
  std::vector<bool> seen(50, false);
  for (int x : v) {
    CHECK(!seen[x]);
    seen[x] = true;
  }
}

}  // TEST_SUITE
