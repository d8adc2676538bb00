#include "affine/laurent.hpp"

#include <sstream>

namespace affine {

LaurentPoly LaurentPoly::monomial(int exp, long long c) {
  LaurentPoly p;
  p.add(exp, c);
  return p;
}

void LaurentPoly::add(int exp, long long c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) p.add(e1 + e2, c1 * c2);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.add(e, -c);
  return p;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [e, c] : c_) p.add(-e, c);
  return p;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c > 0 ? c : -c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

}  // namespace affine
