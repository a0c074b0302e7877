#ifndef RIGIDSPACE_TESTS_SUPPORT_HPP
#define RIGIDSPACE_TESTS_SUPPORT_HPP

// Seeded generators for the property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rigidspace/arrow_perm.hpp"
#include "rigidspace/discrete.hpp"
#include "rigidspace/matrix_groups.hpp"

namespace rigidspace::prop
{

inline constexpr int kTrials = 200;

class Gen
{
public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::uint64_t seed() { return engine_(); }

  ArrowPermutation arrow(int n)
  {
    std::vector<int> t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 1);
    std::shuffle(t.begin(), t.end(), engine_);
    for (auto &x : t)
      if (integer(0, 1))
        x = -x;
    return ArrowPermutation(std::move(t));
  }

  IntervalPartition partition(int n)
  {
    std::vector<int> sizes;
    int left = n;
    while (left > 0) {
      int const s = integer(1, left);
      sizes.push_back(s);
      left -= s;
    }
    return IntervalPartition(std::move(sizes));
  }

  BitVector bits(int n)
  {
    BitVector v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      v.set(static_cast<std::size_t>(i), Bit(integer(0, 1)));
    return v;
  }

  ComplexMatrix complex(int n)
  {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = {real(-1, 1), real(-1, 1)};
    return m;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace rigidspace::prop

#endif // RIGIDSPACE_TESTS_SUPPORT_HPP
