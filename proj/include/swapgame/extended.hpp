#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace swapgame {

/// Integer extended with -inf and +inf.
///
/// Used for distances (unreachable = +inf), player costs on disconnected
/// graphs, and worst/best-case swap improvements. Addition saturates;
/// adding opposite infinities is a domain error.
class Extended {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr Extended() = default;
  constexpr Extended(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT implicit

  static constexpr Extended pos_inf() { return Extended(Kind::PosInf); }
  static constexpr Extended neg_inf() { return Extended(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  std::int64_t value() const {
    if (!is_finite()) throw std::domain_error("Extended::value on infinite value");
    return value_;
  }

  constexpr std::strong_ordering operator<=>(const Extended& o) const {
    if (kind_ != o.kind_) return rank() <=> o.rank();
    if (kind_ == Kind::Finite) return value_ <=> o.value_;
    return std::strong_ordering::equal;
  }
  constexpr bool operator==(const Extended& o) const { return (*this <=> o) == 0; }

  constexpr Extended operator-() const {
    switch (kind_) {
      case Kind::NegInf: return pos_inf();
      case Kind::PosInf: return neg_inf();
      default: return Extended(-value_);
    }
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.is_finite() && b.is_finite()) return Extended(a.value_ + b.value_);
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
      throw std::domain_error("Extended: inf + -inf is undefined");
    return a.is_finite() ? b : a;
  }
  friend Extended operator-(const Extended& a, const Extended& b) { return a + (-b); }
  Extended& operator+=(const Extended& o) { return *this = *this + o; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      default: return std::to_string(value_);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.to_string(); }

 private:
  constexpr explicit Extended(Kind k) : kind_(k) {}
  constexpr int rank() const { return static_cast<int>(kind_); }

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

}  // namespace swapgame
