#include <random>
#include <vector>

#include "doctest.h"
#include "modrad/ring.hpp"
#include "modrad/scan.hpp"
#include "reference.hpp"

using namespace modrad;

TEST_CASE("find_first agrees with the serial reference") {
  CHECK(scan::max_threads() >= 1);

  auto never = [](long) { return false; };
  CHECK(scan::find_first(0, never) == -1);
  CHECK(scan::find_first(100000, never) == -1);
  CHECK(scan::find_first(100000, [](long i) { return i >= 0; }) == 0);
  CHECK(scan::find_first(100000, [](long i) { return i == 99999; }) == 99999);
  CHECK(scan::find_first(100000, [](long i) { return i == 17; }) == 17);

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    long n = 1 + long(rng() % 200000);
    double density = (trial % 4 == 0) ? 0.0 : 1.0 / double(1 + rng() % 5000);
    std::vector<char> hits(n, 0);
    std::bernoulli_distribution flip(density);
    for (long i = 0; i < n; ++i) hits[i] = flip(rng);
    auto pred = [&](long i) { return hits[i] != 0; };
    long expect = ref::find_first_serial(n, pred);
    CHECK(scan::find_first(n, pred) == expect);
    CHECK(scan::find_first(n, pred) == expect);
  }
}

TEST_CASE("parallel_for covers the range exactly once") {
  const long n = 50000;
  std::vector<int> cell(n, 0);
  scan::parallel_for(n, [&](long i) { cell[i] += int(i % 7); });
  for (long i = 0; i < n; ++i) CHECK(cell[i] == int(i % 7));
}

TEST_CASE("pair scans match a serial sweep on a ring predicate") {
  RingPtr R = Ring::residue({101});
  const long n = R->n;
  // first nontrivial pair multiplying to 1
  auto inverse_pair = [&](long i) {
    int a = int(i / n), b = int(i % n);
    return a > 1 && b > 1 && R->mulv(a, b) == R->one;
  };
  long expect = ref::find_first_serial(n * n, inverse_pair);
  CHECK(expect >= 0);
  CHECK(scan::find_first(n * n, inverse_pair) == expect);

  // exhaustive agreement when no pair qualifies
  auto impossible = [&](long i) {
    int a = int(i / n), b = int(i % n);
    return a != 0 && b != 0 && R->mulv(a, b) == R->zero;
  };
  CHECK(scan::find_first(n * n, impossible) == -1);
  CHECK(ref::find_first_serial(n * n, impossible) == -1);
}
