#ifndef RIGIDSPACE_DISCRETE_HPP
#define RIGIDSPACE_DISCRETE_HPP

// Scalar mod-2 structures and their coordinate spaces:
//   D = ({0,1}, xor)          -- a field, D^n an abelian group
//   B = ({-1,0,1}, signed mod 2 of the sum) -- commutative, not associative
//   K = signed residues of R mod 2 living on the circle e^{i pi phi}

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidspace
{

class Bit
{
public:
  constexpr Bit() = default;
  /// Throws std::invalid_argument unless v is 0 or 1.
  explicit Bit(int v);

  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Bit, Bit) = default;
  friend constexpr auto operator<=>(Bit, Bit) = default;

private:
  std::uint8_t value_ = 0;
};

class Trit
{
public:
  constexpr Trit() = default;
  /// Throws std::invalid_argument unless v is -1, 0 or 1.
  explicit Trit(int v);

  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Trit, Trit) = default;
  friend constexpr auto operator<=>(Trit, Trit) = default;

private:
  std::int8_t value_ = 0;
};

/// A point of the circle R / 2Z written as a signed representative in (-2, 2].
class CircleResidue
{
public:
  constexpr CircleResidue() = default;
  /// Throws std::invalid_argument outside (-2, 2].
  explicit CircleResidue(double v);

  constexpr double value() const { return value_; }

  friend constexpr bool operator==(CircleResidue, CircleResidue) = default;

private:
  double value_ = 0.0;
};

Bit mod2_unsigned(std::int64_t z);
/// |z| mod 2 carrying the sign of z, so -3 -> -1 and 0 -> 0.
Trit mod2_signed(std::int64_t z);

Bit d_add(Bit x, Bit y);
Trit b_add(Trit x, Trit y);

// Reduction R -> (-2, 2]: r = x mod 2 in [0, 2); nonnegative x keeps r (positive
// even x gives the boundary 2), negative x with r != 0 gives r - 2. The result
// preserves e^{i pi x} and the sign of x whenever a nonzero residue exists.
CircleResidue k_reduce(double x);
CircleResidue k_add(CircleResidue a, CircleResidue b);
CircleResidue k_mul(CircleResidue a, CircleResidue b);

/// True when both residues name the same circle point, i.e. e^{i pi a} = e^{i pi b}.
bool circle_equal(CircleResidue a, CircleResidue b, double tol = 1e-12);

// Integer-valued residues projected back to B and D. The boundary 2 is the
// circle point of 0, so it maps to 0. Throw std::domain_error otherwise.
Trit to_trit(CircleResidue r);
Bit to_bit(CircleResidue r);

class BitVector
{
public:
  /// Zero vector of dimension n >= 1.
  explicit BitVector(std::size_t n);
  explicit BitVector(std::vector<Bit> bits);
  BitVector(std::initializer_list<int> bits);

  static BitVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, Bit b) { bits_.at(i) = b; }
  std::span<const Bit> bits() const { return bits_; }
  std::size_t weight() const;

  friend bool operator==(const BitVector &, const BitVector &) = default;
  friend auto operator<=>(const BitVector &, const BitVector &) = default;

private:
  std::vector<Bit> bits_;
};

class TritVector
{
public:
  explicit TritVector(std::size_t n);
  explicit TritVector(std::vector<Trit> trits);
  TritVector(std::initializer_list<int> trits);

  std::size_t size() const { return trits_.size(); }
  Trit operator[](std::size_t i) const { return trits_[i]; }
  std::span<const Trit> trits() const { return trits_; }

  friend bool operator==(const TritVector &, const TritVector &) = default;

private:
  std::vector<Trit> trits_;
};

// Componentwise addition; std::invalid_argument on dimension mismatch.
BitVector vec_add(const BitVector &u, const BitVector &v);
TritVector vec_add(const TritVector &u, const TritVector &v);

// Compact text forms: "101" for bits, "+0-" for trits.
std::string to_string(const BitVector &v);
std::string to_string(const TritVector &v);
BitVector parse_bits(std::string_view text);
TritVector parse_trits(std::string_view text);

} // namespace rigidspace

#endif // RIGIDSPACE_DISCRETE_HPP
