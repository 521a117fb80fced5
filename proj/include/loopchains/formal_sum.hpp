#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopchains/coefficient.hpp"

namespace loopchains {

/// Finite formal linear combination of basis elements of type B with
/// Coefficient scalars. B must be strict-weak-ordered by operator< in a way
/// that agrees with its canonical serialization (each basis type here orders
/// by its key() string), so iteration order is the canonical term order.
/// Zero terms are pruned eagerly; mixing coefficient rings throws.
template <typename B>
class FormalSum {
 public:
  using Terms = std::map<B, Coefficient>;

  FormalSum() = default;

  void add_term(const B& b, const Coefficient& c) {
    if (c.is_zero()) return;
    if (ring_ && *ring_ != c.ring())
      throw std::invalid_argument("FormalSum: ring mismatch (" + ring_->str() + " vs " + c.ring().str() + ")");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      Coefficient s = it->second + c;
      if (s.is_zero())
        terms_.erase(it);
      else
        it->second = s;
    }
    if (!ring_) ring_ = c.ring();
  }

  void add_int(const B& b, long n) { add_term(b, Coefficient::integer(n)); }

  void add(const FormalSum& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
  }

  FormalSum operator+(const FormalSum& o) const {
    FormalSum r = *this;
    r.add(o);
    return r;
  }

  FormalSum operator-(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
    return r;
  }

  FormalSum operator-() const {
    FormalSum r;
    for (const auto& [b, c] : terms_) r.add_term(b, -c);
    return r;
  }

  FormalSum scaled(const Coefficient& k) const {
    FormalSum r;
    if (k.is_zero()) return r;
    for (const auto& [b, c] : terms_) r.add_term(b, c * k);
    return r;
  }

  FormalSum scaled(long k) const {
    FormalSum r;
    if (k == 0) return r;
    for (const auto& [b, c] : terms_) r.add_term(b, c * Coefficient::integer(k));
    return r;
  }

  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }  // safe range-for over temporaries

  Coefficient coeff_of(const B& b) const {
    auto it = terms_.find(b);
    if (it == terms_.end()) return Coefficient();  // zero over Z; callers compare via is_zero
    return it->second;
  }

  /// Canonical serialization: terms in basis order, "<sign><coeff>·<key>".
  std::string str(const std::string& sep = " ") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      if (!first) os << sep;
      first = false;
      os << c.str() << "·" << b.key();
    }
    return os.str();
  }

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& [b, c] : terms_) out.push_back(c.str() + "·" + b.key());
    return out;
  }

 private:
  Terms terms_;
  std::optional<Ring> ring_;
};

/// Apply a basis-element map f : B -> FormalSum<B2> linearly.
template <typename B2, typename B, typename F>
FormalSum<B2> apply_linear(const FormalSum<B>& x, F&& f) {
  FormalSum<B2> out;
  for (const auto& [b, c] : x.terms()) {
    FormalSum<B2> img = f(b);
    for (const auto& [b2, c2] : img.terms()) out.add_term(b2, c * c2);
  }
  return out;
}

}  // namespace loopchains
