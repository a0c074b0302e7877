#ifndef RIGIDSPACE_ARROW_PERM_HPP
#define RIGIDSPACE_ARROW_PERM_HPP

// Signed ("arrow") permutations of degree n: maps p : {1..n} -> {+-1..+-n}
// whose magnitude |p| is a bijection. They form the hyperoctahedral group P_n
// of order 2^n n!, represented faithfully by transition matrices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rigidspace
{

/// Hard bound for operations that enumerate all of P_n (2^6 * 6! = 46080).
inline constexpr int kMaxExhaustiveDegree = 6;

class ArrowPermutation
{
public:
  /// Validates that every target is nonzero and |targets| is a bijection of {1..n}.
  explicit ArrowPermutation(std::vector<int> targets);
  ArrowPermutation(std::initializer_list<int> targets);

  static ArrowPermutation identity(int n);

  int degree() const { return static_cast<int>(targets_.size()); }
  /// Signed image of i, 1-based.
  int operator()(int i) const { return targets_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> targets() const { return targets_; }
  bool is_identity() const;

  friend bool operator==(const ArrowPermutation &, const ArrowPermutation &) = default;
  friend auto operator<=>(const ArrowPermutation &, const ArrowPermutation &) = default;

private:
  std::vector<int> targets_;
};

struct ArrowPermutationHash
{
  std::size_t operator()(const ArrowPermutation &p) const noexcept;
};

/// Exact n x n integer matrix with exactly one +-1 in every row and column.
class TransitionMatrix
{
public:
  /// Row-major entries; throws std::invalid_argument if the shape invariant fails.
  TransitionMatrix(int n, std::vector<int> entries);

  static TransitionMatrix identity(int n);

  int size() const { return n_; }
  /// 1-based (row, column).
  int operator()(int row, int col) const
  {
    return entries_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
  }
  std::span<const int> entries() const { return entries_; }

  friend TransitionMatrix operator*(const TransitionMatrix &a, const TransitionMatrix &b);
  friend bool operator==(const TransitionMatrix &, const TransitionMatrix &) = default;

private:
  int n_;
  std::vector<int> entries_;
};

/// Consecutive index blocks I_1, ..., I_m of {1..n} given by their sizes.
class IntervalPartition
{
public:
  struct Block
  {
    int first; // 1-based, inclusive
    int last;
  };

  explicit IntervalPartition(std::vector<int> sizes);

  static IntervalPartition single(int n) { return IntervalPartition({n}); }

  int degree() const { return degree_; }
  int block_count() const { return static_cast<int>(sizes_.size()); }
  std::span<const int> sizes() const { return sizes_; }
  Block block(int j) const; // 0-based block index
  /// 0-based index of the block containing i (1-based).
  int block_of(int i) const;
  std::vector<int> rows(int j) const;

  friend bool operator==(const IntervalPartition &, const IntervalPartition &) = default;

private:
  std::vector<int> sizes_;
  int degree_ = 0;
};

/// Thrown when closure() would exceed its element cap.
class ClosureOverflow : public std::runtime_error
{
public:
  explicit ClosureOverflow(std::size_t cap);
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

struct GroupClosure
{
  std::vector<ArrowPermutation> generators;
  /// Sorted lexicographically by target sequence.
  std::vector<ArrowPermutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const ArrowPermutation &p) const;
};

/// (p2 p1)(i) = sign(p1(i)) * p2(|p1(i)|): apply p1 first.
ArrowPermutation compose(const ArrowPermutation &p2, const ArrowPermutation &p1);
ArrowPermutation inverse(const ArrowPermutation &p);

// Column i of to_matrix(p) carries sign(p(i)) at row |p(i)|. This makes
// to_matrix(compose(p2, p1)) == to_matrix(p2) * to_matrix(p1).
TransitionMatrix to_matrix(const ArrowPermutation &p);
ArrowPermutation from_matrix(const TransitionMatrix &m);

int det(const TransitionMatrix &m);
/// (-1)^(number of negative targets).
int negative_parity(const ArrowPermutation &p);
/// Sign of the pattern bijection rows -> occupied columns (both in rank order)
/// times the product of the entries in those rows. rows are 1-based.
int subset_det(const TransitionMatrix &m, std::span<const int> rows);
int composite_parity(const ArrowPermutation &p, const IntervalPartition &part);

struct ParityFlags
{
  bool in_plus;  // det = +1
  bool in_minus; // even number of negative targets
  bool in_pm;    // composite parity = +1

  friend bool operator==(const ParityFlags &, const ParityFlags &) = default;
};

ParityFlags classify(const ArrowPermutation &p, const IntervalPartition &part);

enum class GeneratorKind
{
  even,         // l_{k,k+1}
  even_inverse, // +-t_{k,k+1}
  composite,    // l inside blocks, +-t across block boundaries
  full,         // inversions and adjacent swaps
};

// Embedded 2x2 generators at positions (k, k+1), 1-based k.
ArrowPermutation plane_l(int n, int k);
ArrowPermutation plane_t(int n, int k, bool negated = false);
ArrowPermutation inversion(int n, int i);

/// part is required for GeneratorKind::composite and ignored otherwise.
std::vector<ArrowPermutation> standard_generators(GeneratorKind kind, int n,
                                                  const std::optional<IntervalPartition> &part = {});

/// Breadth-first closure of the generators inside P_n; throws ClosureOverflow
/// once more than cap elements appear. degree is needed when generators is empty.
GroupClosure closure(std::span<const ArrowPermutation> generators, std::size_t cap, int degree = 0);

/// All 2^n n! elements of P_n in lexicographic order; n <= kMaxExhaustiveDegree.
std::vector<ArrowPermutation> all_arrow_permutations(int n);

std::vector<ArrowPermutation> filter(std::span<const ArrowPermutation> elements,
                                     const std::function<bool(const ArrowPermutation &)> &keep);

// "[+2,-1]" and "2+1" literal syntax.
std::string to_string(const ArrowPermutation &p);
ArrowPermutation parse_arrow_permutation(std::string_view text);
std::string to_string(const IntervalPartition &part);
IntervalPartition parse_partition(std::string_view text);

} // namespace rigidspace

#endif // RIGIDSPACE_ARROW_PERM_HPP
