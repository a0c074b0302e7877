#include "rigidspace/discrete.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rigidspace
{

Bit::Bit(int v)
{
  if (v != 0 && v != 1)
    throw std::invalid_argument("bit value must be 0 or 1, got " + std::to_string(v));
  value_ = static_cast<std::uint8_t>(v);
}

Trit::Trit(int v)
{
  if (v < -1 || v > 1)
    throw std::invalid_argument("trit value must be -1, 0 or 1, got " + std::to_string(v));
  value_ = static_cast<std::int8_t>(v);
}

CircleResidue::CircleResidue(double v)
{
  if (!(v > -2.0 && v <= 2.0))
    throw std::invalid_argument("circle residue must lie in (-2, 2]");
  value_ = v;
}

Bit mod2_unsigned(std::int64_t z)
{
  // z % 2 is -1, 0 or 1; the magnitude is the unsigned residue.
  return Bit(static_cast<int>(z % 2 != 0));
}

Trit mod2_signed(std::int64_t z)
{
  return Trit(static_cast<int>(z % 2));
}

Bit d_add(Bit x, Bit y)
{
  return mod2_unsigned(x.value() + y.value());
}

Trit b_add(Trit x, Trit y)
{
  return mod2_signed(x.value() + y.value());
}

CircleResidue k_reduce(double x)
{
  if (!std::isfinite(x))
    throw std::invalid_argument("k_reduce: non-finite input");

  // (-2, 2] is mapped to itself by the rule below; returning it unchanged keeps
  // the reduction exactly idempotent in floating point.
  if (x > -2.0 && x <= 2.0)
    return CircleResidue(x);

  double r = std::fmod(x, 2.0);
  if (r < 0.0)
    r += 2.0;
  if (r >= 2.0)
    r = 0.0;

  if (r == 0.0)
    return CircleResidue(x > 0.0 ? 2.0 : 0.0);
  if (x >= 0.0)
    return CircleResidue(r);
  return CircleResidue(r - 2.0);
}

CircleResidue k_add(CircleResidue a, CircleResidue b)
{
  return k_reduce(a.value() + b.value());
}

CircleResidue k_mul(CircleResidue a, CircleResidue b)
{
  return k_reduce(a.value() * b.value());
}

bool circle_equal(CircleResidue a, CircleResidue b, double tol)
{
  double const pi = std::numbers::pi;
  double const dc = std::cos(pi * a.value()) - std::cos(pi * b.value());
  double const ds = std::sin(pi * a.value()) - std::sin(pi * b.value());
  return std::hypot(dc, ds) <= tol;
}

Trit to_trit(CircleResidue r)
{
  double const v = r.value();
  if (v == 2.0)
    return Trit(0);
  if (v != std::round(v))
    throw std::domain_error("residue is not an integer point");
  return Trit(static_cast<int>(v));
}

Bit to_bit(CircleResidue r)
{
  Trit const t = to_trit(r);
  if (t.value() < 0)
    throw std::domain_error("residue -1 has no image in D");
  return Bit(t.value());
}

namespace
{

void require_dimension(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("vector dimension must be at least 1");
}

void require_same(std::size_t a, std::size_t b)
{
  if (a != b)
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

} // namespace

BitVector::BitVector(std::size_t n) : bits_(n)
{
  require_dimension(n);
}

BitVector::BitVector(std::vector<Bit> bits) : bits_(std::move(bits))
{
  require_dimension(bits_.size());
}

BitVector::BitVector(std::initializer_list<int> bits)
{
  require_dimension(bits.size());
  bits_.reserve(bits.size());
  for (int b : bits)
    bits_.emplace_back(b);
}

BitVector BitVector::unit(std::size_t n, std::size_t i)
{
  BitVector v(n);
  v.set(i, Bit(1));
  return v;
}

std::size_t BitVector::weight() const
{
  std::size_t w = 0;
  for (Bit b : bits_)
    w += static_cast<std::size_t>(b.value());
  return w;
}

TritVector::TritVector(std::size_t n) : trits_(n)
{
  require_dimension(n);
}

TritVector::TritVector(std::vector<Trit> trits) : trits_(std::move(trits))
{
  require_dimension(trits_.size());
}

TritVector::TritVector(std::initializer_list<int> trits)
{
  require_dimension(trits.size());
  trits_.reserve(trits.size());
  for (int t : trits)
    trits_.emplace_back(t);
}

BitVector vec_add(const BitVector &u, const BitVector &v)
{
  require_same(u.size(), v.size());
  std::vector<Bit> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out.push_back(d_add(u[i], v[i]));
  return BitVector(std::move(out));
}

TritVector vec_add(const TritVector &u, const TritVector &v)
{
  require_same(u.size(), v.size());
  std::vector<Trit> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out.push_back(b_add(u[i], v[i]));
  return TritVector(std::move(out));
}

std::string to_string(const BitVector &v)
{
  std::string s;
  s.reserve(v.size());
  for (Bit b : v.bits())
    s.push_back(b.value() ? '1' : '0');
  return s;
}

std::string to_string(const TritVector &v)
{
  std::string s;
  s.reserve(v.size());
  for (Trit t : v.trits())
    s.push_back(t.value() > 0 ? '+' : (t.value() < 0 ? '-' : '0'));
  return s;
}

BitVector parse_bits(std::string_view text)
{
  std::vector<Bit> bits;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    bits.emplace_back(c - '0');
  }
  return BitVector(std::move(bits));
}

TritVector parse_trits(std::string_view text)
{
  std::vector<Trit> trits;
  for (char c : text) {
    switch (c) {
    case '+': trits.emplace_back(1); break;
    case '0': trits.emplace_back(0); break;
    case '-': trits.emplace_back(-1); break;
    default: throw std::invalid_argument("trit string may contain only '+', '0' and '-'");
    }
  }
  return TritVector(std::move(trits));
}

} // namespace rigidspace
