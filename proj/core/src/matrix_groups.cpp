#include "rigidspace/matrix_groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace rigidspace
{

namespace
{

constexpr double kPi = std::numbers::pi;
/// Entries at or below this magnitude count as already eliminated.
constexpr double kZeroPivot = 1e-15;

void require_position(int k, int n)
{
  if (n < 2 || k < 1 || k >= n)
    throw std::invalid_argument("plane generator position " + std::to_string(k) +
                                " out of range for n = " + std::to_string(n));
}

double wrap_angle(double a)
{
  // into (-pi, pi]
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

void require_square(const auto &m, const char *what)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

} // namespace

Rot2 rot2_mul(Rot2 a, Rot2 b)
{
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

Split2 split2_mul(Split2 a, Split2 b)
{
  return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
}

Quat2 quat2_mul(Quat2 a, Quat2 b)
{
  // Top row of [[p, q], [-conj q, conj p]] products: p = p1 p2 - q1 conj(q2),
  // q = p1 q2 + q1 conj(p2).
  using C = std::complex<double>;
  C const p1{a.x, a.y}, q1{a.r, a.s}, p2{b.x, b.y}, q2{b.r, b.s};
  C const p = p1 * p2 - q1 * std::conj(q2);
  C const q = p1 * q2 + q1 * std::conj(p2);
  return {p.real(), p.imag(), q.real(), q.imag()};
}

Eigen::Matrix2d as_matrix(Rot2 a)
{
  Eigen::Matrix2d m;
  m << a.x, a.y, -a.y, a.x;
  return m;
}

Eigen::Matrix2d as_matrix(Split2 a)
{
  Eigen::Matrix2d m;
  m << a.x, a.y, a.y, a.x;
  return m;
}

Eigen::Matrix2cd as_matrix(Quat2 a)
{
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  m << C{a.x, a.y}, C{a.r, a.s}, C{-a.r, a.s}, C{a.x, -a.y};
  return m;
}

double determinant(Rot2 a)
{
  return a.x * a.x + a.y * a.y;
}

double determinant(Split2 a)
{
  return a.x * a.x - a.y * a.y;
}

double norm_squared(Quat2 a)
{
  return a.x * a.x + a.y * a.y + a.r * a.r + a.s * a.s;
}

Rot2 normalize(Rot2 a)
{
  double const d = determinant(a);
  if (!(d > 0.0))
    throw std::domain_error("normalize: zero element of [[x,y],[-y,x]]");
  double const scale = std::sqrt(d);
  return {a.x / scale, a.y / scale};
}

Split2 normalize(Split2 a)
{
  double const d = std::abs(determinant(a));
  if (!(d > 0.0))
    throw std::domain_error("normalize: x^2 = y^2, element of [[x,y],[y,x]] is singular");
  double const scale = std::sqrt(d);
  return {a.x / scale, a.y / scale};
}

Quat2 normalize(Quat2 a)
{
  double const d = norm_squared(a);
  if (!(d > 0.0))
    throw std::domain_error("normalize: zero quaternionic element");
  double const scale = std::sqrt(d);
  return {a.x / scale, a.y / scale, a.r / scale, a.s / scale};
}

RealMatrix plane_generator_matrix(const PlaneGenerator &g, int n)
{
  require_position(g.position, n);
  RealMatrix m = RealMatrix::Identity(n, n);
  int const k = g.position - 1;
  switch (g.kind) {
  case PlaneKind::rotation: {
    double const c = std::cos(g.parameter), s = std::sin(g.parameter);
    m(k, k) = c;
    m(k, k + 1) = s;
    m(k + 1, k) = -s;
    m(k + 1, k + 1) = c;
    break;
  }
  case PlaneKind::boost: {
    double const c = std::cosh(g.parameter), s = std::sinh(g.parameter);
    m(k, k) = c;
    m(k, k + 1) = s;
    m(k + 1, k) = s;
    m(k + 1, k + 1) = c;
    break;
  }
  case PlaneKind::unitary:
    throw std::invalid_argument("unitary plane generator has no real matrix");
  }
  return m;
}

ComplexMatrix complex_plane_generator_matrix(const PlaneGenerator &g, int n)
{
  if (g.kind != PlaneKind::unitary)
    return plane_generator_matrix(g, n).cast<std::complex<double>>();
  require_position(g.position, n);
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  int const k = g.position - 1;
  m.block<2, 2>(k, k) = as_matrix(normalize(g.block));
  return m;
}

RealMatrix word_product(const std::vector<PlaneGenerator> &word, int n)
{
  // Right-multiply column pairs in extended precision; long boost words grow
  // the entries and double accumulation loses the metric identity.
  using Wide = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Wide m = Wide::Identity(n, n);
  for (auto const &g : word) {
    require_position(g.position, n);
    long double const t = g.parameter;
    long double c = 0, s = 0, sign = 0;
    switch (g.kind) {
    case PlaneKind::rotation: c = std::cos(t), s = std::sin(t), sign = -1; break;
    case PlaneKind::boost: c = std::cosh(t), s = std::sinh(t), sign = 1; break;
    case PlaneKind::unitary: throw std::invalid_argument("unitary plane generator has no real matrix");
    }
    int const k = g.position - 1;
    for (int r = 0; r < n; ++r) {
      long double const a = m(r, k), b = m(r, k + 1);
      m(r, k) = a * c + sign * b * s;
      m(r, k + 1) = a * s + b * c;
    }
  }
  return m.cast<double>();
}

ComplexMatrix complex_word_product(const std::vector<PlaneGenerator> &word, int n)
{
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (auto const &g : word)
    m = m * complex_plane_generator_matrix(g, n);
  return m;
}

SignatureMetric::SignatureMetric(const IntervalPartition &part)
{
  for (int j = 0; j < part.block_count(); ++j) {
    int const sign = j % 2 == 0 ? 1 : -1;
    signs_.insert(signs_.end(), static_cast<std::size_t>(part.sizes()[static_cast<std::size_t>(j)]),
                  sign);
  }
}

RealMatrix SignatureMetric::as_matrix() const
{
  RealMatrix m = RealMatrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i)
    m(i, i) = signs_[static_cast<std::size_t>(i)];
  return m;
}

SignatureMetric signature_metric(const IntervalPartition &part)
{
  return SignatureMetric(part);
}

MetricDefect pseudo_orthogonal_defect(const RealMatrix &m, const SignatureMetric &eta)
{
  require_square(m, "pseudo-orthogonality check");
  if (m.rows() != eta.size())
    throw std::invalid_argument("metric size does not match matrix size");
  using Wide = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Wide const w = m.cast<long double>();
  Wide const e = eta.as_matrix().cast<long double>();
  Wide const gram = w.transpose() * e * w;
  return {static_cast<double>((gram - e).cwiseAbs().maxCoeff()),
          static_cast<double>(std::abs(w.determinant() - 1.0L))};
}

bool check_pseudo_orthogonal(const RealMatrix &m, const SignatureMetric &eta, double tol)
{
  MetricDefect const d = pseudo_orthogonal_defect(m, eta);
  return d.metric <= tol && d.det <= tol;
}

std::vector<PlaneGenerator> givens_decompose(const RealMatrix &m, double tol)
{
  require_square(m, "givens_decompose");
  int const n = static_cast<int>(m.rows());
  if (n == 0)
    throw std::invalid_argument("givens_decompose: empty matrix");

  MetricDefect const d = pseudo_orthogonal_defect(m, SignatureMetric::identity(n));
  if (d.metric > tol)
    throw NotSpecialOrthogonal("not orthogonal: max|M^T M - I| = " + std::to_string(d.metric));
  if (d.det > tol) {
    double const det = m.determinant();
    throw NotSpecialOrthogonal(det < 0 ? "not special: det = -1"
                                       : "not special: det = " + std::to_string(det));
  }

  RealMatrix a = m;
  // Left factors G_N ... G_1 with G_N ... G_1 M = I.
  std::vector<PlaneGenerator> applied;
  auto const apply = [&](int k, double theta) {
    double const c = std::cos(theta), s = std::sin(theta);
    for (int col = 0; col < n; ++col) {
      double const top = a(k - 1, col), bottom = a(k, col);
      a(k - 1, col) = c * top + s * bottom;
      a(k, col) = -s * top + c * bottom;
    }
    applied.push_back(PlaneGenerator::rotation(k, theta));
  };

  for (int c = 1; c < n; ++c) {
    for (int r = n; r > c; --r) {
      double const top = a(r - 2, c - 1), bottom = a(r - 1, c - 1);
      if (std::abs(bottom) <= kZeroPivot)
        continue;
      apply(r - 1, std::atan2(bottom, top));
    }
    if (a(c - 1, c - 1) < 0.0)
      apply(c, kPi);
  }

  // M = G_1^T G_2^T ... G_N^T, and G_k(theta)^T = G_k(-theta).
  std::vector<PlaneGenerator> out;
  out.reserve(applied.size());
  for (auto const &g : applied)
    out.push_back(PlaneGenerator::rotation(g.position, wrap_angle(-g.parameter)));
  return out;
}

RealMatrix realify(const ComplexMatrix &a)
{
  RealMatrix out(2 * a.rows(), 2 * a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      double const x = a(r, c).real(), y = a(r, c).imag();
      out(2 * r, 2 * c) = x;
      out(2 * r, 2 * c + 1) = y;
      out(2 * r + 1, 2 * c) = -y;
      out(2 * r + 1, 2 * c + 1) = x;
    }
  return out;
}

bool check_unitary_embedding(const ComplexMatrix &u, double tol)
{
  require_square(u, "unitary embedding check");
  auto const n = u.rows();
  double const unitarity =
      (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (unitarity > tol)
    return false;
  return check_pseudo_orthogonal(realify(u), SignatureMetric::identity(static_cast<int>(2 * n)), tol);
}

bool check_su_embedding(const ComplexMatrix &u, double tol)
{
  require_square(u, "SU embedding check");
  if (std::abs(u.determinant() - std::complex<double>(1.0, 0.0)) > tol)
    return false;
  return check_unitary_embedding(u, tol);
}

double SeededRng::unit()
{
  // 53 high bits -> [0, 1); independent of the library's distributions.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::angle()
{
  return kPi - 2.0 * kPi * unit();
}

std::size_t SeededRng::index(std::size_t count)
{
  if (count == 0)
    throw std::invalid_argument("SeededRng::index: empty range");
  return std::min(static_cast<std::size_t>(unit() * static_cast<double>(count)), count - 1);
}

std::vector<PlaneGenerator> random_signature_word(const IntervalPartition &part, std::size_t length,
                                                  SeededRng &rng)
{
  std::vector<PlaneGenerator> slots;
  for (int j = 0; j < part.block_count(); ++j) {
    auto const b = part.block(j);
    for (int k = b.first; k < b.last; ++k)
      slots.push_back(PlaneGenerator::rotation(k, 0.0));
    if (j + 1 < part.block_count())
      slots.push_back(PlaneGenerator::boost(b.last, 0.0));
  }

  std::vector<PlaneGenerator> word;
  if (slots.empty())
    return word;
  word.reserve(length);
  for (std::size_t w = 0; w < length; ++w) {
    PlaneGenerator g = slots[rng.index(slots.size())];
    g.parameter = g.kind == PlaneKind::rotation ? rng.angle() : rng.uniform(-1.0, 1.0);
    word.push_back(g);
  }
  return word;
}

RealMatrix random_so(int n, std::uint64_t seed)
{
  if (n < 1)
    throw std::invalid_argument("random_so: n must be at least 1");
  SeededRng rng(seed);
  std::vector<PlaneGenerator> word;
  if (n > 1)
    for (int w = 0; w < 3 * n; ++w) {
      int const k = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
      word.push_back(PlaneGenerator::rotation(k, rng.angle()));
    }
  return word_product(word, n);
}

ComplexMatrix random_su(int n, std::uint64_t seed)
{
  if (n < 1)
    throw std::invalid_argument("random_su: n must be at least 1");
  SeededRng rng(seed);
  std::vector<PlaneGenerator> word;
  if (n > 1)
    for (int w = 0; w < 3 * n; ++w) {
      int const k = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
      Quat2 q;
      do {
        q = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      } while (norm_squared(q) < 1e-6);
      word.push_back(PlaneGenerator::unitary(k, q));
    }
  return complex_word_product(word, n);
}

ComplexMatrix random_special_group_element(SpecialGroup kind, int n, std::uint64_t seed)
{
  if (kind == SpecialGroup::SO)
    return random_so(n, seed).cast<std::complex<double>>();
  return random_su(n, seed);
}

ComplexMatrix random_complex_matrix(int n, SeededRng &rng)
{
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return m;
}

GaussianMatrix::GaussianMatrix(int n, std::vector<GaussianInt> entries)
    : n_(n), entries_(std::move(entries))
{
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("GaussianMatrix needs n*n entries");
}

GaussianMatrix GaussianMatrix::identity(int n)
{
  std::vector<GaussianInt> e(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    e[static_cast<std::size_t>(i * n + i)] = {1, 0};
  return GaussianMatrix(n, std::move(e));
}

GaussianMatrix operator*(const GaussianMatrix &a, const GaussianMatrix &b)
{
  if (a.n_ != b.n_)
    throw std::invalid_argument("GaussianMatrix size mismatch");
  int const n = a.n_;
  std::vector<GaussianInt> e(static_cast<std::size_t>(n * n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      GaussianInt s;
      for (int k = 1; k <= n; ++k)
        s = s + a(r, k) * b(k, c);
      e[static_cast<std::size_t>((r - 1) * n + (c - 1))] = s;
    }
  return GaussianMatrix(n, std::move(e));
}

GaussianMatrix operator-(const GaussianMatrix &a)
{
  std::vector<GaussianInt> e = a.entries_;
  for (auto &z : e)
    z = {-z.re, -z.im};
  return GaussianMatrix(a.n_, std::move(e));
}

ComplexMatrix to_complex(const GaussianMatrix &m)
{
  ComplexMatrix out(m.size(), m.size());
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c)
      out(r - 1, c - 1) = {static_cast<double>(m(r, c).re), static_cast<double>(m(r, c).im)};
  return out;
}

std::string to_string(const GaussianMatrix &m)
{
  auto const entry = [](GaussianInt z) -> std::string {
    if (z.im == 0)
      return std::to_string(z.re);
    std::string im = z.im == 1 ? "i" : (z.im == -1 ? "-i" : std::to_string(z.im) + "i");
    if (z.re == 0)
      return im;
    return std::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
  };
  std::string s = "[";
  for (int r = 1; r <= m.size(); ++r) {
    s += r > 1 ? ",[" : "[";
    for (int c = 1; c <= m.size(); ++c) {
      if (c > 1)
        s += ',';
      s += entry(m(r, c));
    }
    s += ']';
  }
  return s + "]";
}

std::vector<GaussianMatrix> quaternion_units()
{
  GaussianInt const o{0, 0}, one{1, 0}, i{0, 1};
  GaussianInt const minus_one{-1, 0}, minus_i{0, -1};
  return {
      GaussianMatrix(2, {one, o, o, one}),
      GaussianMatrix(2, {o, i, i, o}),
      GaussianMatrix(2, {o, one, minus_one, o}),
      GaussianMatrix(2, {i, o, o, minus_i}),
  };
}

GaussianClosure quat_group_closure(int n, std::size_t cap)
{
  if (n < 2)
    throw std::invalid_argument("quat_group_closure: n must be at least 2");

  GaussianClosure out;
  for (int j = 1; j < n; ++j)
    for (auto const &u : quaternion_units()) {
      std::vector<GaussianInt> e(static_cast<std::size_t>(n * n));
      for (int d = 0; d < n; ++d)
        e[static_cast<std::size_t>(d * n + d)] = {1, 0};
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          e[static_cast<std::size_t>((j - 1 + r) * n + (j - 1 + c))] = u(r + 1, c + 1);
      out.generators.emplace_back(n, std::move(e));
    }

  std::set<GaussianMatrix> seen{GaussianMatrix::identity(n)};
  std::vector<GaussianMatrix> frontier{GaussianMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<GaussianMatrix> next;
    for (auto const &x : frontier)
      for (auto const &g : out.generators) {
        GaussianMatrix y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw ClosureOverflow(cap);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

TransitionMatrix expand_to_real(const GaussianMatrix &m)
{
  int const n = m.size();
  std::vector<int> e(static_cast<std::size_t>(4 * n * n), 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      GaussianInt const z = m(r, c);
      if (std::abs(z.re) > 1 || std::abs(z.im) > 1 || (z.re != 0 && z.im != 0))
        throw EmbeddingViolation("entry outside {0, +-1, +-i}");
      int const x = static_cast<int>(z.re), y = static_cast<int>(z.im);
      std::size_t const top = static_cast<std::size_t>(2 * (r - 1) * 2 * n + 2 * (c - 1));
      std::size_t const bottom = top + static_cast<std::size_t>(2 * n);
      e[top] = x;
      e[top + 1] = y;
      e[bottom] = -y;
      e[bottom + 1] = x;
    }

  try {
    TransitionMatrix t(2 * n, std::move(e));
    if (det(t) != 1)
      throw EmbeddingViolation("realified element has det -1");
    return t;
  } catch (const std::invalid_argument &err) {
    throw EmbeddingViolation(std::string("realified element is not a transition matrix: ") +
                             err.what());
  }
}

} // namespace rigidspace
