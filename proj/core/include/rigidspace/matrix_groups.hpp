#ifndef RIGIDSPACE_MATRIX_GROUPS_HPP
#define RIGIDSPACE_MATRIX_GROUPS_HPP

// Continuous counterparts of the signed permutation groups: the 2x2 algebras
// [[x,y],[-y,x]], [[x,y],[y,x]] and [[x+iy, r+is],[-r+is, x-iy]], plane
// generators embedded at (k, k+1), metric preservation for SO(n_1, ..., n_m),
// Givens decomposition of SO(n), realification C -> R^{2x2}, and the exact
// finite group generated by u_1..u_4.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rigidspace/arrow_perm.hpp"

namespace rigidspace
{

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// [[x, y], [-y, x]]
struct Rot2
{
  double x = 1.0;
  double y = 0.0;
};

/// [[x, y], [y, x]]
struct Split2
{
  double x = 1.0;
  double y = 0.0;
};

/// [[x+iy, r+is], [-r+is, x-iy]]
struct Quat2
{
  double x = 1.0;
  double y = 0.0;
  double r = 0.0;
  double s = 0.0;
};

Rot2 rot2_mul(Rot2 a, Rot2 b);
Split2 split2_mul(Split2 a, Split2 b);
Quat2 quat2_mul(Quat2 a, Quat2 b);

Eigen::Matrix2d as_matrix(Rot2 a);
Eigen::Matrix2d as_matrix(Split2 a);
Eigen::Matrix2cd as_matrix(Quat2 a);

double determinant(Rot2 a);  // x^2 + y^2
double determinant(Split2 a); // x^2 - y^2
double norm_squared(Quat2 a); // x^2 + y^2 + r^2 + s^2, also the determinant

// Divide by the positive scale sqrt|det| so the result has |det| = 1.
// std::domain_error for non-invertible input.
Rot2 normalize(Rot2 a);
Split2 normalize(Split2 a);
Quat2 normalize(Quat2 a);

enum class PlaneKind
{
  rotation, // [[cos, sin], [-sin, cos]]
  boost,    // [[cosh, sinh], [sinh, cosh]]
  unitary,  // unit Quat2 block
};

struct PlaneGenerator
{
  PlaneKind kind = PlaneKind::rotation;
  int position = 1;       // acts on rows/columns (position, position + 1), 1-based
  double parameter = 0.0; // angle or rapidity
  Quat2 block;            // unitary kind only; normalized on use

  static PlaneGenerator rotation(int k, double angle) { return {PlaneKind::rotation, k, angle, {}}; }
  static PlaneGenerator boost(int k, double rapidity) { return {PlaneKind::boost, k, rapidity, {}}; }
  static PlaneGenerator unitary(int k, Quat2 q) { return {PlaneKind::unitary, k, 0.0, q}; }
};

/// Rotation or boost generator as an n x n real matrix.
RealMatrix plane_generator_matrix(const PlaneGenerator &g, int n);
/// Any generator kind as an n x n complex matrix.
ComplexMatrix complex_plane_generator_matrix(const PlaneGenerator &g, int n);
/// Ordered product g_1 g_2 ... g_k of real generators.
RealMatrix word_product(const std::vector<PlaneGenerator> &word, int n);
ComplexMatrix complex_word_product(const std::vector<PlaneGenerator> &word, int n);

/// Diagonal form preserved by the generators attached to a partition: block j
/// (0-based) carries sign (-1)^j.
class SignatureMetric
{
public:
  explicit SignatureMetric(const IntervalPartition &part);
  static SignatureMetric identity(int n) { return SignatureMetric(IntervalPartition::single(n)); }

  int size() const { return static_cast<int>(signs_.size()); }
  const std::vector<int> &signs() const { return signs_; }
  RealMatrix as_matrix() const;

private:
  std::vector<int> signs_;
};

SignatureMetric signature_metric(const IntervalPartition &part);

struct MetricDefect
{
  double metric; // max |M^T eta M - eta|
  double det;    // |det M - 1|
};

MetricDefect pseudo_orthogonal_defect(const RealMatrix &m, const SignatureMetric &eta);
/// std::invalid_argument on size mismatch.
bool check_pseudo_orthogonal(const RealMatrix &m, const SignatureMetric &eta, double tol);

/// Thrown by givens_decompose for input outside SO(n).
class NotSpecialOrthogonal : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Adjacent-plane rotations whose ordered product equals m. Columns are
/// swept bottom-up; exact zeros are skipped and a negative pivot left by a
/// skipped column is fixed with a rotation by pi.
std::vector<PlaneGenerator> givens_decompose(const RealMatrix &m, double tol);

/// Entrywise x + iy -> [[x, y], [-y, x]].
RealMatrix realify(const ComplexMatrix &a);

/// u unitary within tol and realify(u) in SO(2n).
bool check_unitary_embedding(const ComplexMatrix &u, double tol);
/// Additionally det u = 1.
bool check_su_embedding(const ComplexMatrix &u, double tol);

/// Seeded uniform sampling, reproducible across standard libraries.
class SeededRng
{
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// [0, 1)
  double unit();
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// (-pi, pi]
  double angle();
  /// 0 .. count-1
  std::size_t index(std::size_t count);

private:
  std::mt19937_64 engine_;
};

/// A random word of L (inside blocks) and T (across adjacent block
/// boundaries) generators for the partition.
std::vector<PlaneGenerator> random_signature_word(const IntervalPartition &part, std::size_t length,
                                                  SeededRng &rng);

enum class SpecialGroup
{
  SO,
  SU,
};

// Product of 3n random plane generators of the matching kind; the 1x1 identity
// for n = 1.
RealMatrix random_so(int n, std::uint64_t seed);
ComplexMatrix random_su(int n, std::uint64_t seed);
ComplexMatrix random_special_group_element(SpecialGroup kind, int n, std::uint64_t seed);

ComplexMatrix random_complex_matrix(int n, SeededRng &rng);

struct GaussianInt
{
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b)
  {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussianInt, GaussianInt) = default;
  friend auto operator<=>(GaussianInt, GaussianInt) = default;
};

/// Exact square matrix over Z[i].
class GaussianMatrix
{
public:
  GaussianMatrix(int n, std::vector<GaussianInt> entries);
  static GaussianMatrix identity(int n);

  int size() const { return n_; }
  GaussianInt operator()(int row, int col) const // 1-based
  {
    return entries_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
  }

  friend GaussianMatrix operator*(const GaussianMatrix &a, const GaussianMatrix &b);
  friend GaussianMatrix operator-(const GaussianMatrix &a);
  friend bool operator==(const GaussianMatrix &, const GaussianMatrix &) = default;
  friend auto operator<=>(const GaussianMatrix &, const GaussianMatrix &) = default;

private:
  int n_;
  std::vector<GaussianInt> entries_;
};

ComplexMatrix to_complex(const GaussianMatrix &m);
std::string to_string(const GaussianMatrix &m);

/// u_1 = 1, u_2 = [[0,i],[i,0]], u_3 = [[0,1],[-1,0]], u_4 = [[i,0],[0,-i]].
std::vector<GaussianMatrix> quaternion_units();

struct GaussianClosure
{
  std::vector<GaussianMatrix> generators;
  std::vector<GaussianMatrix> elements; // sorted

  std::size_t order() const { return elements.size(); }
};

/// Group generated by u_1..u_4 placed at every adjacent block (j, j+1) of an
/// n x n identity; n = 2 gives the eight-element quaternion group.
GaussianClosure quat_group_closure(int n = 2, std::size_t cap = 100000);

/// Thrown when a realified element is not a det +1 transition matrix.
class EmbeddingViolation : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Realify exactly (1 -> I_2, i -> [[0,1],[-1,0]]) and check P_{2n}^+ membership.
TransitionMatrix expand_to_real(const GaussianMatrix &m);

} // namespace rigidspace

#endif // RIGIDSPACE_MATRIX_GROUPS_HPP
