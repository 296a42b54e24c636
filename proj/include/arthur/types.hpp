#pragma once

// Value types shared by every module: exact half-integers, cuspidal symbols,
// segments, Speh data and Arthur parameters.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace arthur {

using Rational = boost::rational<std::int64_t>;

/// An element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt{doubled}; }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt{2 * value}; }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  // Only meaningful when is_integer().
  constexpr std::int64_t as_int() const { return doubled_ / 2; }
  Rational as_rational() const { return Rational{doubled_, 2}; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{doubled_ + o.doubled_}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{doubled_ - o.doubled_}; }
  constexpr HalfInt operator-() const { return HalfInt{-doubled_}; }
  constexpr HalfInt& operator+=(HalfInt o) { doubled_ += o.doubled_; return *this; }

  constexpr auto operator<=>(const HalfInt&) const = default;

private:
  constexpr explicit HalfInt(std::int64_t doubled) : doubled_(doubled) {}
  std::int64_t doubled_ = 0;
};

/// Abstract unitary cuspidal representation: an opaque id of some degree n(rho).
/// Distinct ids live on distinct cuspidal lines.
struct CuspidalSymbol {
  std::string id;
  int degree = 1;

  CuspidalSymbol() = default;
  CuspidalSymbol(std::string id_, int degree_ = 1) : id(std::move(id_)), degree(degree_) {
    if (degree < 1) throw std::invalid_argument("cuspidal degree must be positive");
    if (id.empty()) throw std::invalid_argument("cuspidal id must be non-empty");
  }

  auto operator<=>(const CuspidalSymbol&) const = default;
  bool operator==(const CuspidalSymbol&) const = default;
};

/// The trivial character of GL_1, the line carrying triv(n) and st(n).
inline const std::string kTrivialLine = "one";

struct TwistedCuspidal {
  CuspidalSymbol symbol;
  HalfInt exponent;  // nu^exponent * symbol

  auto operator<=>(const TwistedCuspidal&) const = default;
  bool operator==(const TwistedCuspidal&) const = default;
};

/// u_rho(a,b), the Arthur term phi_rho (x) V_a (x) V_b.
struct SpehDatum {
  CuspidalSymbol rho;
  int deligne = 1;  // a
  int arthur = 1;   // b

  SpehDatum() = default;
  SpehDatum(CuspidalSymbol rho_, int deligne_, int arthur_)
      : rho(std::move(rho_)), deligne(deligne_), arthur(arthur_) {
    if (deligne < 1 || arthur < 1)
      throw std::invalid_argument("Speh datum dimensions must be positive");
  }

  std::int64_t degree() const {
    return static_cast<std::int64_t>(rho.degree) * deligne * arthur;
  }
  bool is_segment_type() const { return deligne == 1 || arthur == 1; }
  int weight() const { return deligne + arthur; }

  auto operator<=>(const SpehDatum&) const = default;
  bool operator==(const SpehDatum&) const = default;
};

/// Multiset of Speh data kept in canonical (sorted) order.
class ArthurParameter {
public:
  ArthurParameter() = default;
  explicit ArthurParameter(std::vector<SpehDatum> terms);
  ArthurParameter(std::initializer_list<SpehDatum> terms)
      : ArthurParameter(std::vector<SpehDatum>(terms)) {}

  std::span<const SpehDatum> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t dim() const;
  bool is_segment_type() const;

  ArthurParameter operator+(const ArthurParameter& other) const;

  bool operator==(const ArthurParameter&) const = default;
  auto operator<=>(const ArthurParameter&) const = default;

private:
  std::vector<SpehDatum> terms_;
};

/// [a,b]_rho = {nu^a rho, ..., nu^b rho}; b - a is a non-negative integer.
struct Segment {
  CuspidalSymbol rho;
  HalfInt a;
  HalfInt b;

  Segment() = default;
  Segment(CuspidalSymbol rho_, HalfInt a_, HalfInt b_);

  std::int64_t length() const { return (b - a).as_int() + 1; }
  std::int64_t degree() const { return rho.degree * length(); }
  bool is_centered() const { return (a + b).doubled() == 0; }

  auto operator<=>(const Segment&) const = default;
  bool operator==(const Segment&) const = default;
};

enum class SegmentKind { Z, Q };

/// Z(Delta) or Q(Delta).
struct SegmentRep {
  SegmentKind kind = SegmentKind::Q;
  Segment segment;

  std::int64_t degree() const { return segment.degree(); }
  bool is_unitary() const { return segment.is_centered(); }

  auto operator<=>(const SegmentRep&) const = default;
  bool operator==(const SegmentRep&) const = default;
};

/// Raised when a top-level decision API is called outside its hypotheses
/// (dimension pairing, segment type).
class HypothesisError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace arthur
