#include "rigidspace/quotient.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace rigidspace
{

namespace
{

void require_dimension(int n)
{
  if (n < 1)
    throw std::invalid_argument("subgroup dimension must be at least 1");
}

void require_match(int n, std::size_t size)
{
  if (static_cast<std::size_t>(n) != size)
    throw std::invalid_argument("dimension mismatch: subgroup of D^" + std::to_string(n) +
                                " vs vector of length " + std::to_string(size));
}

/// Per-block parity of a 0/1 sequence.
Syndrome parity_syndrome(std::span<const int> bits, const EvenSubgroup &h)
{
  Syndrome s;
  switch (h.variant()) {
  case EvenSubgroup::Variant::trivial:
    for (int b : bits)
      s.parities.emplace_back(b);
    break;
  case EvenSubgroup::Variant::plus: {
    int p = 0;
    for (int b : bits)
      p ^= b;
    s.parities.emplace_back(p);
    break;
  }
  case EvenSubgroup::Variant::blockwise: {
    auto const &part = *h.partition();
    for (int j = 0; j < part.block_count(); ++j) {
      auto const blk = part.block(j);
      int p = 0;
      for (int i = blk.first; i <= blk.last; ++i)
        p ^= bits[static_cast<std::size_t>(i - 1)];
      s.parities.emplace_back(p);
    }
    break;
  }
  case EvenSubgroup::Variant::full:
    break;
  }
  return s;
}

} // namespace

EvenSubgroup::EvenSubgroup(int n, Variant v, std::optional<IntervalPartition> part)
    : n_(n), variant_(v), part_(std::move(part))
{}

EvenSubgroup EvenSubgroup::trivial(int n)
{
  require_dimension(n);
  return EvenSubgroup(n, Variant::trivial, std::nullopt);
}

EvenSubgroup EvenSubgroup::plus(int n)
{
  require_dimension(n);
  return EvenSubgroup(n, Variant::plus, std::nullopt);
}

EvenSubgroup EvenSubgroup::blockwise(IntervalPartition part)
{
  if (part.block_count() == 1)
    return plus(part.degree());
  int const n = part.degree();
  return EvenSubgroup(n, Variant::blockwise, std::move(part));
}

EvenSubgroup EvenSubgroup::full(int n)
{
  require_dimension(n);
  return EvenSubgroup(n, Variant::full, std::nullopt);
}

int EvenSubgroup::syndrome_length() const
{
  switch (variant_) {
  case Variant::trivial: return n_;
  case Variant::plus: return 1;
  case Variant::blockwise: return part_->block_count();
  case Variant::full: return 0;
  }
  return 0;
}

Syndrome syndrome(const BitVector &v, const EvenSubgroup &h)
{
  require_match(h.dimension(), v.size());
  std::vector<int> bits;
  bits.reserve(v.size());
  for (Bit b : v.bits())
    bits.push_back(b.value());
  return parity_syndrome(bits, h);
}

Syndrome syndrome_add(const Syndrome &a, const Syndrome &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("syndrome length mismatch");
  Syndrome s;
  for (std::size_t i = 0; i < a.size(); ++i)
    s.parities.push_back(d_add(a.parities[i], b.parities[i]));
  return s;
}

bool contains(const EvenSubgroup &h, const BitVector &v)
{
  Syndrome const s = syndrome(v, h);
  return std::all_of(s.parities.begin(), s.parities.end(), [](Bit b) { return b.value() == 0; });
}

std::vector<BitVector> all_bit_vectors(int n)
{
  require_dimension(n);
  if (n > kMaxEnumerateDimension)
    throw std::invalid_argument("enumeration limited to dimension " +
                                std::to_string(kMaxEnumerateDimension));
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    BitVector v(static_cast<std::size_t>(n));
    // Most significant coordinate first gives lexicographic order.
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << (n - 1 - i)))
        v.set(static_cast<std::size_t>(i), Bit(1));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BitVector> enumerate(const EvenSubgroup &h)
{
  auto all = all_bit_vectors(h.dimension());
  std::vector<BitVector> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](const BitVector &v) { return contains(h, v); });
  return out;
}

Syndrome z_syndrome(std::span<const std::int64_t> z, const EvenSubgroup &h)
{
  require_match(h.dimension(), z.size());
  std::vector<int> bits;
  bits.reserve(z.size());
  for (std::int64_t x : z)
    bits.push_back(mod2_unsigned(x).value());
  return parity_syndrome(bits, h);
}

std::vector<Node> graph_nodes(GraphKind kind, int n)
{
  require_dimension(n);
  std::vector<Node> nodes{0};
  for (int i = 1; i <= n; ++i) {
    nodes.push_back(i);
    if (kind == GraphKind::double_)
      nodes.push_back(-i);
  }
  return nodes;
}

std::vector<std::int64_t> node_vector(Node node, int n)
{
  if (node < -n || node > n)
    throw std::invalid_argument("node outside graph");
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  if (node != 0)
    v[static_cast<std::size_t>(std::abs(node) - 1)] = node > 0 ? 1 : -1;
  return v;
}

InducedFactorization induced_factorization(const EvenSubgroup &h, GraphKind kind)
{
  int const n = h.dimension();
  InducedFactorization f{kind, n, {}, 0};

  std::map<Syndrome, std::size_t> class_of;
  for (Node node : graph_nodes(kind, n)) {
    auto const z = node_vector(node, n);
    Syndrome const s = z_syndrome(z, h);
    auto [it, inserted] = class_of.try_emplace(s, f.classes.size());
    if (inserted)
      f.classes.emplace_back();
    f.classes[it->second].push_back(node);
    if (node == 0)
      f.basepoint_class = it->second;
  }
  return f;
}

EvenSubgroup parse_subgroup(std::string_view text)
{
  auto const colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("subgroup spec must look like H+:3, Hpm:2+2, H-:3 or full:3");
  std::string_view const head = text.substr(0, colon);
  std::string_view const tail = text.substr(colon + 1);

  if (head == "Hpm")
    return EvenSubgroup::blockwise(parse_partition(tail));

  int n = 0;
  auto const [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc{} || ptr != tail.data() + tail.size())
    throw std::invalid_argument("cannot parse dimension from '" + std::string(tail) + "'");
  if (head == "H+")
    return EvenSubgroup::plus(n);
  if (head == "H-")
    return EvenSubgroup::trivial(n);
  if (head == "full")
    return EvenSubgroup::full(n);
  throw std::invalid_argument("unknown subgroup kind '" + std::string(head) + "'");
}

std::string to_string(const EvenSubgroup &h)
{
  std::string const n = std::to_string(h.dimension());
  switch (h.variant()) {
  case EvenSubgroup::Variant::trivial: return "H-:" + n;
  case EvenSubgroup::Variant::plus: return "H+:" + n;
  case EvenSubgroup::Variant::blockwise: return "Hpm:" + to_string(*h.partition());
  case EvenSubgroup::Variant::full: return "full:" + n;
  }
  return {};
}

std::string to_string(const Syndrome &s)
{
  std::string out;
  for (Bit b : s.parities)
    out.push_back(b.value() ? '1' : '0');
  return out;
}

std::string to_string(GraphKind kind)
{
  return kind == GraphKind::simple ? "d" : "b";
}

std::string to_string(const InducedFactorization &f)
{
  std::string out;
  for (std::size_t c = 0; c < f.classes.size(); ++c) {
    if (c > 0)
      out += ' ';
    out += '{';
    for (std::size_t k = 0; k < f.classes[c].size(); ++k) {
      Node const node = f.classes[c][k];
      if (k > 0)
        out += ',';
      if (node == 0)
        out += '0';
      else
        out += (node > 0 ? "+" : "-") + std::to_string(std::abs(node));
    }
    out += '}';
  }
  return out;
}

} // namespace rigidspace
