#include "rigidspace/arrow_perm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

namespace rigidspace
{

namespace
{

int sign_of(int x)
{
  return x < 0 ? -1 : 1;
}

/// Sign of a permutation given as a sequence of distinct integers.
int sequence_sign(std::span<const int> seq)
{
  // Cycle-walk on the rank vector: O(n) apart from the sort.
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });

  std::vector<bool> seen(seq.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < order.size(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(order[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0)
      sign = -sign;
  }
  return sign;
}

void require_degree(int n)
{
  if (n < 1)
    throw std::invalid_argument("degree must be at least 1");
}

std::vector<int> identity_targets(int n)
{
  std::vector<int> t(static_cast<std::size_t>(n));
  std::iota(t.begin(), t.end(), 1);
  return t;
}

} // namespace

ArrowPermutation::ArrowPermutation(std::vector<int> targets) : targets_(std::move(targets))
{
  int const n = degree();
  require_degree(n);
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int t : targets_) {
    int const m = std::abs(t);
    if (t == 0 || m > n)
      throw std::invalid_argument("arrow permutation target " + std::to_string(t) +
                                  " outside +-1..+-" + std::to_string(n));
    if (hit[static_cast<std::size_t>(m)])
      throw std::invalid_argument("arrow permutation magnitudes are not a bijection");
    hit[static_cast<std::size_t>(m)] = true;
  }
}

ArrowPermutation::ArrowPermutation(std::initializer_list<int> targets)
    : ArrowPermutation(std::vector<int>(targets))
{}

ArrowPermutation ArrowPermutation::identity(int n)
{
  require_degree(n);
  return ArrowPermutation(identity_targets(n));
}

bool ArrowPermutation::is_identity() const
{
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i)
      return false;
  return true;
}

std::size_t ArrowPermutationHash::operator()(const ArrowPermutation &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (int t : p.targets()) {
    h ^= static_cast<std::size_t>(t + 64);
    h *= 0x100000001b3ull;
  }
  return h;
}

TransitionMatrix::TransitionMatrix(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries))
{
  require_degree(n);
  if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("transition matrix needs n*n entries");

  std::vector<int> row_count(static_cast<std::size_t>(n), 0);
  std::vector<int> col_count(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int const v = entries_[static_cast<std::size_t>(r * n + c)];
      if (v == 0)
        continue;
      if (v != 1 && v != -1)
        throw std::invalid_argument("transition matrix entries must be 0 or +-1");
      ++row_count[static_cast<std::size_t>(r)];
      ++col_count[static_cast<std::size_t>(c)];
    }
  }
  auto const one = [](int c) { return c == 1; };
  if (!std::all_of(row_count.begin(), row_count.end(), one) ||
      !std::all_of(col_count.begin(), col_count.end(), one))
    throw std::invalid_argument("transition matrix needs exactly one nonzero per row and column");
}

TransitionMatrix TransitionMatrix::identity(int n)
{
  require_degree(n);
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    e[static_cast<std::size_t>(i * n + i)] = 1;
  return TransitionMatrix(n, std::move(e));
}

TransitionMatrix operator*(const TransitionMatrix &a, const TransitionMatrix &b)
{
  if (a.n_ != b.n_)
    throw std::invalid_argument("transition matrix size mismatch");
  int const n = a.n_;
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      int s = 0;
      for (int k = 1; k <= n; ++k)
        s += a(r, k) * b(k, c);
      e[static_cast<std::size_t>((r - 1) * n + (c - 1))] = s;
    }
  return TransitionMatrix(n, std::move(e));
}

IntervalPartition::IntervalPartition(std::vector<int> sizes) : sizes_(std::move(sizes))
{
  if (sizes_.empty())
    throw std::invalid_argument("partition needs at least one block");
  for (int s : sizes_) {
    if (s < 1)
      throw std::invalid_argument("partition block sizes must be positive");
    degree_ += s;
  }
}

IntervalPartition::Block IntervalPartition::block(int j) const
{
  if (j < 0 || j >= block_count())
    throw std::out_of_range("partition block index");
  int first = 1;
  for (int b = 0; b < j; ++b)
    first += sizes_[static_cast<std::size_t>(b)];
  return {first, first + sizes_[static_cast<std::size_t>(j)] - 1};
}

int IntervalPartition::block_of(int i) const
{
  if (i < 1 || i > degree_)
    throw std::out_of_range("index outside partition");
  int last = 0;
  for (int j = 0; j < block_count(); ++j) {
    last += sizes_[static_cast<std::size_t>(j)];
    if (i <= last)
      return j;
  }
  return block_count() - 1;
}

std::vector<int> IntervalPartition::rows(int j) const
{
  Block const b = block(j);
  std::vector<int> r(static_cast<std::size_t>(b.last - b.first + 1));
  std::iota(r.begin(), r.end(), b.first);
  return r;
}

ClosureOverflow::ClosureOverflow(std::size_t cap)
    : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) + " elements"),
      cap_(cap)
{}

bool GroupClosure::contains(const ArrowPermutation &p) const
{
  return std::binary_search(elements.begin(), elements.end(), p);
}

ArrowPermutation compose(const ArrowPermutation &p2, const ArrowPermutation &p1)
{
  if (p2.degree() != p1.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> r(static_cast<std::size_t>(p1.degree()));
  for (int i = 1; i <= p1.degree(); ++i) {
    int const a = p1(i);
    r[static_cast<std::size_t>(i - 1)] = sign_of(a) * p2(std::abs(a));
  }
  return ArrowPermutation(std::move(r));
}

ArrowPermutation inverse(const ArrowPermutation &p)
{
  // p(i) = s * j  =>  p^-1(j) = s * i.
  std::vector<int> r(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    int const a = p(i);
    r[static_cast<std::size_t>(std::abs(a) - 1)] = sign_of(a) * i;
  }
  return ArrowPermutation(std::move(r));
}

TransitionMatrix to_matrix(const ArrowPermutation &p)
{
  int const n = p.degree();
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    int const a = p(i);
    e[static_cast<std::size_t>((std::abs(a) - 1) * n + (i - 1))] = sign_of(a);
  }
  return TransitionMatrix(n, std::move(e));
}

ArrowPermutation from_matrix(const TransitionMatrix &m)
{
  int const n = m.size();
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c)
    for (int r = 1; r <= n; ++r)
      if (m(r, c) != 0)
        t[static_cast<std::size_t>(c - 1)] = m(r, c) * r;
  return ArrowPermutation(std::move(t));
}

int det(const TransitionMatrix &m)
{
  int const n = m.size();
  std::vector<int> cols(static_cast<std::size_t>(n));
  int product = 1;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (m(r, c) != 0) {
        cols[static_cast<std::size_t>(r - 1)] = c;
        product *= m(r, c);
      }
  return sequence_sign(cols) * product;
}

int negative_parity(const ArrowPermutation &p)
{
  auto const t = p.targets();
  auto const neg = std::count_if(t.begin(), t.end(), [](int x) { return x < 0; });
  return neg % 2 == 0 ? 1 : -1;
}

int subset_det(const TransitionMatrix &m, std::span<const int> rows)
{
  if (rows.empty())
    throw std::invalid_argument("subset_det: empty row set");

  std::vector<int> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1 ||
      sorted.back() > m.size())
    throw std::invalid_argument("subset_det: rows must be distinct indices in 1..n");

  // Occupied column of each row, listed in row rank order; its sign as a
  // sequence is the sign of the rank-order bijection rows -> columns.
  std::vector<int> cols;
  cols.reserve(sorted.size());
  int product = 1;
  for (int r : sorted)
    for (int c = 1; c <= m.size(); ++c)
      if (m(r, c) != 0) {
        cols.push_back(c);
        product *= m(r, c);
      }
  return sequence_sign(cols) * product;
}

int composite_parity(const ArrowPermutation &p, const IntervalPartition &part)
{
  if (part.degree() != p.degree())
    throw std::invalid_argument("composite_parity: partition degree mismatch");
  TransitionMatrix const m = to_matrix(p);
  int result = 1;
  for (int j = 0; j < part.block_count(); ++j) {
    auto const rows = part.rows(j);
    result *= subset_det(m, rows);
  }
  return result;
}

ParityFlags classify(const ArrowPermutation &p, const IntervalPartition &part)
{
  return {det(to_matrix(p)) == 1, negative_parity(p) == 1, composite_parity(p, part) == 1};
}

ArrowPermutation plane_l(int n, int k)
{
  if (k < 1 || k >= n)
    throw std::invalid_argument("plane generator position out of range");
  // Block [[0,1],[-1,0]] at (k, k+1): column k holds -1 at row k+1.
  std::vector<int> r = identity_targets(n);
  r[static_cast<std::size_t>(k - 1)] = -(k + 1);
  r[static_cast<std::size_t>(k)] = k;
  return ArrowPermutation(std::move(r));
}

ArrowPermutation plane_t(int n, int k, bool negated)
{
  if (k < 1 || k >= n)
    throw std::invalid_argument("plane generator position out of range");
  int const s = negated ? -1 : 1;
  std::vector<int> r = identity_targets(n);
  r[static_cast<std::size_t>(k - 1)] = s * (k + 1);
  r[static_cast<std::size_t>(k)] = s * k;
  return ArrowPermutation(std::move(r));
}

ArrowPermutation inversion(int n, int i)
{
  if (i < 1 || i > n)
    throw std::invalid_argument("inversion index out of range");
  std::vector<int> r = identity_targets(n);
  r[static_cast<std::size_t>(i - 1)] = -i;
  return ArrowPermutation(std::move(r));
}

std::vector<ArrowPermutation> standard_generators(GeneratorKind kind, int n,
                                                  const std::optional<IntervalPartition> &part)
{
  require_degree(n);
  std::vector<ArrowPermutation> gens;
  switch (kind) {
  case GeneratorKind::even:
    for (int k = 1; k < n; ++k)
      gens.push_back(plane_l(n, k));
    break;
  case GeneratorKind::even_inverse:
    for (int k = 1; k < n; ++k) {
      gens.push_back(plane_t(n, k));
      gens.push_back(plane_t(n, k, true));
    }
    break;
  case GeneratorKind::composite: {
    if (!part)
      throw std::invalid_argument("composite generators need a partition");
    if (part->degree() != n)
      throw std::invalid_argument("partition degree does not match n");
    for (int j = 0; j < part->block_count(); ++j) {
      auto const b = part->block(j);
      for (int k = b.first; k < b.last; ++k)
        gens.push_back(plane_l(n, k));
      if (j + 1 < part->block_count()) {
        gens.push_back(plane_t(n, b.last));
        gens.push_back(plane_t(n, b.last, true));
      }
    }
    break;
  }
  case GeneratorKind::full:
    for (int i = 1; i <= n; ++i)
      gens.push_back(inversion(n, i));
    for (int k = 1; k < n; ++k)
      gens.push_back(plane_t(n, k));
    break;
  }
  return gens;
}

GroupClosure closure(std::span<const ArrowPermutation> generators, std::size_t cap, int degree)
{
  if (generators.empty() && degree < 1)
    throw std::invalid_argument("closure: empty generator list needs an explicit degree");
  int const n = generators.empty() ? degree : generators.front().degree();
  for (auto const &g : generators)
    if (g.degree() != n)
      throw std::invalid_argument("closure: generators of mixed degree");
  if (cap == 0)
    throw ClosureOverflow(cap);

  // In a finite group the right-multiplication orbit of the identity under the
  // generators is already closed under inverses.
  std::unordered_set<ArrowPermutation, ArrowPermutationHash> seen;
  std::vector<ArrowPermutation> frontier{ArrowPermutation::identity(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ArrowPermutation> next;
    for (auto const &x : frontier)
      for (auto const &g : generators) {
        ArrowPermutation y = compose(g, x);
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw ClosureOverflow(cap);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }

  GroupClosure out;
  out.generators.assign(generators.begin(), generators.end());
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<ArrowPermutation> all_arrow_permutations(int n)
{
  require_degree(n);
  if (n > kMaxExhaustiveDegree)
    throw std::invalid_argument("exhaustive enumeration limited to degree " +
                                std::to_string(kMaxExhaustiveDegree));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<ArrowPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> t(perm);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
          t[static_cast<std::size_t>(i)] = -t[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(t));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArrowPermutation> filter(std::span<const ArrowPermutation> elements,
                                     const std::function<bool(const ArrowPermutation &)> &keep)
{
  std::vector<ArrowPermutation> out;
  std::copy_if(elements.begin(), elements.end(), std::back_inserter(out), keep);
  return out;
}

std::string to_string(const ArrowPermutation &p)
{
  std::string s = "[";
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1)
      s += ',';
    s += p(i) > 0 ? "+" : "-";
    s += std::to_string(std::abs(p(i)));
  }
  s += ']';
  return s;
}

namespace
{

int parse_int(std::string_view text, std::string_view what)
{
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  int value = 0;
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("cannot parse " + std::string(what) + " from '" +
                                std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

} // namespace

ArrowPermutation parse_arrow_permutation(std::string_view text)
{
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("arrow permutation literal must look like [+2,-1]");
  text = text.substr(1, text.size() - 2);

  std::vector<int> targets;
  while (true) {
    auto const comma = text.find(',');
    targets.push_back(parse_int(trim(text.substr(0, comma)), "signed index"));
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return ArrowPermutation(std::move(targets));
}

std::string to_string(const IntervalPartition &part)
{
  std::string s;
  for (int j = 0; j < part.block_count(); ++j) {
    if (j > 0)
      s += '+';
    s += std::to_string(part.sizes()[static_cast<std::size_t>(j)]);
  }
  return s;
}

IntervalPartition parse_partition(std::string_view text)
{
  text = trim(text);
  std::vector<int> sizes;
  while (true) {
    auto const plus = text.find('+');
    sizes.push_back(parse_int(text.substr(0, plus), "block size"));
    if (plus == std::string_view::npos)
      break;
    text.remove_prefix(plus + 1);
  }
  return IntervalPartition(std::move(sizes));
}

} // namespace rigidspace
