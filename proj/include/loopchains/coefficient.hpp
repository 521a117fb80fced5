#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace loopchains {

using Int = boost::multiprecision::cpp_int;

/// Coefficient ring selector: Z, Q, or Z/m.
struct Ring {
  enum class Kind { Z, Q, Mod };

  Kind kind = Kind::Z;
  long modulus = 0;

  static Ring z() { return Ring{Kind::Z, 0}; }
  static Ring q() { return Ring{Kind::Q, 0}; }
  static Ring mod(long m) {
    if (m < 2) throw std::invalid_argument("Ring::mod: modulus must be >= 2");
    return Ring{Kind::Mod, m};
  }

  bool operator==(const Ring& o) const { return kind == o.kind && modulus == o.modulus; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string str() const {
    switch (kind) {
      case Kind::Z: return "Z";
      case Kind::Q: return "Q";
      default: return "Z/" + std::to_string(modulus);
    }
  }
};

/// Exact scalar in a selectable commutative ring. Rationals are kept in
/// lowest terms with positive denominator; residues are kept canonical in
/// [0, m). Arithmetic on mismatched rings throws.
class Coefficient {
 public:
  Coefficient() : ring_(Ring::z()), num_(0), den_(1) {}

  Coefficient(Ring ring, Int num, Int den = 1) : ring_(ring), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static Coefficient integer(long v) { return Coefficient(Ring::z(), Int(v)); }
  static Coefficient zero(Ring r) { return Coefficient(r, Int(0)); }
  static Coefficient one(Ring r) { return Coefficient(r, Int(1)); }

  const Ring& ring() const { return ring_; }
  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Coefficient operator-() const {
    Coefficient c = *this;
    c.num_ = -c.num_;
    c.normalize();
    return c;
  }

  Coefficient operator+(const Coefficient& o) const {
    require_same_ring(o);
    return Coefficient(ring_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  Coefficient operator-(const Coefficient& o) const { return *this + (-o); }

  Coefficient operator*(const Coefficient& o) const {
    require_same_ring(o);
    return Coefficient(ring_, num_ * o.num_, den_ * o.den_);
  }

  bool operator==(const Coefficient& o) const {
    return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  /// Signed textual form: "+1", "-3", "+1/2".
  std::string str() const {
    std::ostringstream os;
    if (num_ >= 0) os << '+';
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
  }

 private:
  void require_same_ring(const Coefficient& o) const {
    if (ring_ != o.ring_)
      throw std::invalid_argument("Coefficient: ring mismatch (" + ring_.str() + " vs " + o.ring_.str() + ")");
  }

  void normalize() {
    if (den_ == 0) throw std::invalid_argument("Coefficient: zero denominator");
    switch (ring_.kind) {
      case Ring::Kind::Z:
        if (den_ != 1) {
          if (num_ % den_ != 0) throw std::invalid_argument("Coefficient: non-integer value over Z");
          num_ /= den_;
          den_ = 1;
        }
        break;
      case Ring::Kind::Q: {
        if (den_ < 0) {
          num_ = -num_;
          den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
          num_ /= g;
          den_ /= g;
        }
        if (num_ == 0) den_ = 1;
        break;
      }
      case Ring::Kind::Mod: {
        Int m(ring_.modulus);
        if (den_ != 1) {
          Int d = ((den_ % m) + m) % m;
          num_ = num_ * mod_inverse(d, m);
          den_ = 1;
        }
        num_ = ((num_ % m) + m) % m;
        break;
      }
    }
  }

  static Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
    }
    if (old_r != 1 && old_r != -1)
      throw std::invalid_argument("Coefficient: denominator not invertible mod m");
    if (old_r == -1) old_s = -old_s;
    return ((old_s % m) + m) % m;
  }

  Ring ring_;
  Int num_;
  Int den_;
};

}  // namespace loopchains
