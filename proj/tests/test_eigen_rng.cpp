#include <cmath>
#include <set>

#include "doctest.h"
#include "hyperroute/eigen.hpp"
#include "hyperroute/rng.hpp"

using namespace hyperroute;

TEST_CASE("rng streams are deterministic and substreams independent") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng s1 = Rng::substream(42, {1, 2});
  Rng s2 = Rng::substream(42, {1, 3});
  CHECK(s1.next() != s2.next());
  Rng s3 = Rng::substream(42, {1, 2});
  CHECK(Rng::substream(42, {1, 2}).next() == s3.next());
}

TEST_CASE("rng permutation is a bijection and below is in range") {
  Rng r(7);
  auto p = r.permutation(50);
  std::set<int> seen(p.begin(), p.end());
  CHECK(seen.size() == 50);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(13) < 13);
}

TEST_CASE("ql eigensolver matches jacobi oracle on random symmetric matrices") {
  Rng rng(123);
  for (int n : {2, 3, 5, 8, 13, 21, 40}) {
    std::vector<double> a(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = rng.uniform() * 4.0 - 2.0;
        a[i * n + j] = a[j * n + i] = v;
      }
    auto fast = symmetric_eigenvalues(a, n);
    auto slow = jacobi_eigenvalues(a, n);
    for (int i = 0; i < n; ++i) CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-9));
  }
}

TEST_CASE("known spectra: C4 cycle and complete graph") {
  // C4: {2, 0, 0, -2}
  std::vector<double> c4 = {0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0};
  auto e = symmetric_eigenvalues(c4, 4);
  CHECK(e[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e[3] == doctest::Approx(-2.0).epsilon(1e-12));
  // K5: {4, -1, -1, -1, -1}
  std::vector<double> k5(25, 1.0);
  for (int i = 0; i < 5; ++i) k5[i * 5 + i] = 0.0;
  auto ek = symmetric_eigenvalues(k5, 5);
  CHECK(ek[0] == doctest::Approx(4.0));
  for (int i = 1; i < 5; ++i) CHECK(ek[i] == doctest::Approx(-1.0));
}
