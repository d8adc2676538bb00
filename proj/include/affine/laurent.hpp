#pragma once

#include <map>
#include <string>

namespace affine {

// Integer Laurent polynomial in one variable v.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exp, long long c = 1);
  static LaurentPoly constant(long long c) { return monomial(0, c); }

  long long coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, long long>& coeffs() const { return c_; }

  void add(int exp, long long c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly bar() const;  // v -> v^{-1}
  // True when every exponent is negative.
  bool strictly_negative() const { return c_.empty() || c_.rbegin()->first < 0; }
  std::string str() const;

 private:
  std::map<int, long long> c_;  // exponent -> coefficient, zeros absent
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);

}  // namespace affine
