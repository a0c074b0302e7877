#ifndef RIGIDSPACE_QUOTIENT_HPP
#define RIGIDSPACE_QUOTIENT_HPP

// Even-weight subgroups H of D^n, their coset labels (syndromes) realizing
// D^n / H ~ D^m, the integer lift Z^n / ZH, and the class partitions they
// induce on the basis graphs d = {0, e_i} and b = {0, +-e_i}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rigidspace/arrow_perm.hpp"
#include "rigidspace/discrete.hpp"

namespace rigidspace
{

class EvenSubgroup
{
public:
  enum class Variant
  {
    trivial,   // H_n^-: only the zero vector
    plus,      // H_n^+: even total weight
    blockwise, // H_n^+-: even weight inside every block
    full,      // all of D^n
  };

  static EvenSubgroup trivial(int n);
  static EvenSubgroup plus(int n);
  /// A single-block partition yields the plus variant.
  static EvenSubgroup blockwise(IntervalPartition part);
  static EvenSubgroup full(int n);

  int dimension() const { return n_; }
  Variant variant() const { return variant_; }
  const std::optional<IntervalPartition> &partition() const { return part_; }
  /// Length of the syndrome: n, 1, m or 0.
  int syndrome_length() const;

  friend bool operator==(const EvenSubgroup &, const EvenSubgroup &) = default;

private:
  EvenSubgroup(int n, Variant v, std::optional<IntervalPartition> part);

  int n_;
  Variant variant_;
  std::optional<IntervalPartition> part_;
};

/// Coset label; may be empty (the full subgroup has one coset).
struct Syndrome
{
  std::vector<Bit> parities;

  std::size_t size() const { return parities.size(); }
  friend bool operator==(const Syndrome &, const Syndrome &) = default;
  friend auto operator<=>(const Syndrome &, const Syndrome &) = default;
};

/// Practical cap for enumerate().
inline constexpr int kMaxEnumerateDimension = 20;

bool contains(const EvenSubgroup &h, const BitVector &v);
/// All members in lexicographic order; n <= kMaxEnumerateDimension.
std::vector<BitVector> enumerate(const EvenSubgroup &h);
/// Every vector of D^n, lexicographic; n <= kMaxEnumerateDimension.
std::vector<BitVector> all_bit_vectors(int n);

Syndrome syndrome(const BitVector &v, const EvenSubgroup &h);
Syndrome syndrome_add(const Syndrome &a, const Syndrome &b);
/// Syndrome of the componentwise unsigned mod-2 reduction of z.
Syndrome z_syndrome(std::span<const std::int64_t> z, const EvenSubgroup &h);

enum class GraphKind
{
  simple, // d: nodes 0, e_1..e_n
  double_, // b: nodes 0, +-e_1..+-e_n
};

// Graph nodes are signed integers: 0 is the basepoint, +i is e_i, -i is -e_i.
using Node = int;

std::vector<Node> graph_nodes(GraphKind kind, int n);
/// Integer vector of a node: 0, e_i or -e_i.
std::vector<std::int64_t> node_vector(Node node, int n);

struct InducedFactorization
{
  GraphKind kind;
  int n;
  /// Classes in order of first appearance in graph_nodes(); each class lists
  /// its nodes in that same order.
  std::vector<std::vector<Node>> classes;
  std::size_t basepoint_class;
};

InducedFactorization induced_factorization(const EvenSubgroup &h, GraphKind kind);

// "H+:n", "Hpm:2+2", "H-:n", "full:n".
EvenSubgroup parse_subgroup(std::string_view text);
std::string to_string(const EvenSubgroup &h);
std::string to_string(const Syndrome &s);
std::string to_string(GraphKind kind);
/// "{0} {+1,-1} {+2,-2}"
std::string to_string(const InducedFactorization &f);

} // namespace rigidspace

#endif // RIGIDSPACE_QUOTIENT_HPP
