#ifndef RIGIDSPACE_TOPO_AUT_HPP
#define RIGIDSPACE_TOPO_AUT_HPP

// Topological automorphism groups of factorized basis graphs.
//
// A factorization is a class partition of the node set of d = {0, e_i} or
// b = {0, +-e_i}. Candidate elementary moves are filtered by the
// reversible-arrow prohibition: an exchange of two nodes (2-cycle, inversion,
// signed swap) is forbidden when the two nodes are equivalent and their class
// does not contain the basepoint 0. Cyclic moves (3-cycles on d, 4-cycles
// (+j,+k,-j,-k) on b) are one-directional and usable when every node they
// touch lies in a single class. The group is the closure of what survives.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidspace/arrow_perm.hpp"
#include "rigidspace/quotient.hpp"

namespace rigidspace
{

inline constexpr int kMaxSimpleDegree = 7;
inline constexpr int kMaxDoubleDegree = 5;

class FactorizedGraph
{
public:
  /// Validates that classes partition graph_nodes(kind, n).
  FactorizedGraph(GraphKind kind, int n, std::vector<std::vector<Node>> classes);
  explicit FactorizedGraph(const InducedFactorization &f);

  // Canonical shapes.
  static FactorizedGraph discrete(GraphKind kind, int n); // every node alone
  static FactorizedGraph axes(int n);                     // b: {0}, {+-e_i} per axis
  static FactorizedGraph one(GraphKind kind, int n);      // {0}, all other nodes
  static FactorizedGraph blocks(const IntervalPartition &part); // b: {0}, one class per block
  static FactorizedGraph point(GraphKind kind, int n);    // everything ~ 0

  GraphKind kind() const { return kind_; }
  int degree() const { return n_; }
  const std::vector<std::vector<Node>> &classes() const { return classes_; }
  std::size_t class_of(Node node) const;
  std::size_t basepoint_class() const { return class_of(0); }
  bool equivalent(Node a, Node b) const { return class_of(a) == class_of(b); }

private:
  GraphKind kind_;
  int n_;
  std::vector<std::vector<Node>> classes_;
  std::vector<std::size_t> lookup_; // indexed by node + n
};

struct MoveGenerator
{
  enum class Type
  {
    swap2,       // d: (i, j)
    cycle3,      // d: i -> j -> k -> i
    inversion,   // b: +i <-> -i
    signed_swap, // b: +j <-> +k, -j <-> -k
    anti_swap,   // b: +j <-> -k, -j <-> +k
    cycle4,      // b: +j -> +k -> -j -> -k -> +j
  };

  Type type;
  int i = 0;
  int j = 0;
  int k = 0;

  bool reversible() const;
  /// Pairs of nodes the move exchanges (empty for cyclic moves).
  std::vector<std::pair<Node, Node>> exchanged() const;
  /// Nodes moved by the move.
  std::vector<Node> touched() const;
  /// As an element of P_n (positive targets only for d-moves).
  ArrowPermutation as_permutation(int n) const;

  friend bool operator==(const MoveGenerator &, const MoveGenerator &) = default;
};

std::string to_string(const MoveGenerator &m);

/// The full candidate pool for a graph kind: all 2-cycles and 3-cycles on d;
/// all inversions, signed and anti swaps, and 4-cycles on b.
std::vector<MoveGenerator> candidate_moves(GraphKind kind, int n);
bool move_forbidden(const FactorizedGraph &g, const MoveGenerator &m);
std::vector<MoveGenerator> allowed_generators(const FactorizedGraph &g);

/// Closure of allowed_generators(g). Simple-kind groups are positive-sign
/// arrow permutations. Enforces kMaxSimpleDegree / kMaxDoubleDegree.
GroupClosure aut_group(const FactorizedGraph &g, std::size_t cap);

/// Image of a node under an automorphism.
Node act(const ArrowPermutation &p, Node node);
/// Whether p maps every class onto a class.
bool preserves_classes(const ArrowPermutation &p, const FactorizedGraph &g);

enum class GroupLabel
{
  S_n,
  S_n_plus,
  P_n,
  P_n_minus,
  P_n_plus,
  P_n_pm,
};

std::string to_string(GroupLabel label);

struct Prediction
{
  GroupLabel label;
  std::optional<IntervalPartition> partition; // set for P_n_pm
};

/// Lookup of the case table by the shape of the class partition. Returns
/// nullopt ("no prediction") for shapes the table does not cover.
std::optional<Prediction> expected_label(const FactorizedGraph &g);

/// The parity-characterized set named by a prediction, sorted.
std::vector<ArrowPermutation> predicted_elements(const Prediction &pred, int n);

struct CaseReport
{
  std::optional<Prediction> prediction;
  std::size_t computed_order = 0;
  std::size_t expected_order = 0;
  bool set_equal = false;
  /// For P_n_pm only: whether the group equals the closure of the composite
  /// generators (l inside blocks, +-t across boundaries).
  std::optional<bool> equals_generator_presentation;
};

CaseReport verify_case(const FactorizedGraph &g, std::size_t cap);

// "b:n=3:classes=axes", "d:n=4:classes=one", "b:n=4:classes=blocks:2+2",
// "b:n=3:classes=point", "b:n=2:classes=discrete".
FactorizedGraph parse_graph_case(std::string_view text);

} // namespace rigidspace

#endif // RIGIDSPACE_TOPO_AUT_HPP
