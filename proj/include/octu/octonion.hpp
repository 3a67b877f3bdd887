#pragma once
// The split quaternion algebra H = 2x2 matrices over GF(q) and the split
// octonion algebra O = H + Hw obtained by doubling, with exact arithmetic.
//
// Octonion coordinates are 8-vectors over GF(q) in the fixed basis order
//   (E11, E12, E21, E22, E11*w, E12*w, E21*w, E22*w),
// and an element is encoded as the integer sum c_i q^i (little-endian).
// At q = 2 the code is a single byte and prints as two hex digits.
//
// Products use the doubling rule
//   (a + xw)(b + yw) = ab + conj(y)x + (ya + x conj(b))w,
// the norm is N(a + xw) = det(a) - det(x), and conj(a + xw) = conj(a) - xw.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octu/field.hpp"

namespace octu {

struct Quat {
  const Field* field;
  std::array<uint8_t, 4> m;  // row-major: m[0]=a00 m[1]=a01 m[2]=a10 m[3]=a11

  Quat(const Field& f, std::array<uint8_t, 4> entries) : field(&f), m(entries) {
    for (uint8_t e : m)
      if (e >= f.q()) bad_arg("Quat: entry out of range");
  }

  static Quat zero(const Field& f) { return {f, {0, 0, 0, 0}}; }
  static Quat one(const Field& f) { return {f, {1, 0, 0, 1}}; }

  friend Quat operator+(const Quat& a, const Quat& b) {
    const Field& f = a.same(b);
    return {f, {f.add(a.m[0], b.m[0]), f.add(a.m[1], b.m[1]),
                f.add(a.m[2], b.m[2]), f.add(a.m[3], b.m[3])}};
  }
  friend Quat operator-(const Quat& a, const Quat& b) { return a + (-b); }
  friend Quat operator-(const Quat& a) {
    const Field& f = *a.field;
    return {f, {f.neg(a.m[0]), f.neg(a.m[1]), f.neg(a.m[2]), f.neg(a.m[3])}};
  }
  friend Quat operator*(const Quat& a, const Quat& b) {
    const Field& f = a.same(b);
    auto dot = [&](uint8_t x1, uint8_t y1, uint8_t x2, uint8_t y2) {
      return f.add(f.mul(x1, y1), f.mul(x2, y2));
    };
    return {f, {dot(a.m[0], b.m[0], a.m[1], b.m[2]), dot(a.m[0], b.m[1], a.m[1], b.m[3]),
                dot(a.m[2], b.m[0], a.m[3], b.m[2]), dot(a.m[2], b.m[1], a.m[3], b.m[3])}};
  }
  friend bool operator==(const Quat& a, const Quat& b) {
    return a.field == b.field && a.m == b.m;
  }

  // standard involution: swap the diagonal, negate the off-diagonal
  Quat conj() const {
    const Field& f = *field;
    return {f, {m[3], f.neg(m[1]), f.neg(m[2]), m[0]}};
  }
  uint8_t norm() const {  // determinant
    const Field& f = *field;
    return f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
  }
  uint8_t trace() const { return field->add(m[0], m[3]); }

  Quat scaled(uint8_t c) const {
    const Field& f = *field;
    return {f, {f.mul(c, m[0]), f.mul(c, m[1]), f.mul(c, m[2]), f.mul(c, m[3])}};
  }
  Quat inv() const {
    uint8_t n = norm();
    if (n == 0) bad_arg("Quat: inverse of a singular matrix");
    return conj().scaled(field->inv(n));
  }

  const Field& same(const Quat& b) const {
    if (field != b.field) bad_arg("Quat: operands from different fields");
    return *field;
  }
};

class OctAlgebra;

struct Oct {
  const OctAlgebra* alg;
  std::array<uint8_t, 8> c;

  bool is_zero() const { return c == std::array<uint8_t, 8>{}; }
  friend bool operator==(const Oct& a, const Oct& b) { return a.alg == b.alg && a.c == b.c; }
  friend bool operator!=(const Oct& a, const Oct& b) { return !(a == b); }

  // defined below, through the algebra context
  friend Oct operator+(const Oct& a, const Oct& b);
  friend Oct operator-(const Oct& a, const Oct& b);
  friend Oct operator-(const Oct& a);
  friend Oct operator*(const Oct& a, const Oct& b);
};

class OctAlgebra {
public:
  explicit OctAlgebra(const Field& f) : F_(f), delta_(find_delta(f).v) {
    pow_q_[0] = 1;
    for (int i = 1; i <= 8; ++i) pow_q_[i] = pow_q_[i - 1] * F_.q();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        sc_[i][j] = mul(basis(i), basis(j)).c;
        polar_[i][j] = polar(basis(i), basis(j));
      }
    if (F_.q() == 2) {
      fast_mul_.resize(256 * 256);
      for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b)
          fast_mul_[(a << 8) | b] = static_cast<uint8_t>(code(mul(element(a), element(b))));
    }
  }

  const Field& field() const { return F_; }
  unsigned q() const { return F_.q(); }
  uint8_t delta() const { return delta_; }
  size_t size() const { return pow_q_[8]; }

  Oct make(std::array<uint8_t, 8> coords) const {
    for (uint8_t e : coords)
      if (e >= F_.q()) bad_arg("Oct: coordinate out of range");
    return {this, coords};
  }
  Oct zero() const { return {this, {}}; }
  Oct one() const { return basis(0) + basis(3); }
  Oct w() const { return basis(4) + basis(7); }
  Oct basis(int i) const {
    Oct o{this, {}};
    o.c[i] = 1;
    return o;
  }
  Oct scalar(uint8_t s) const {
    Oct o = zero();
    o.c[0] = o.c[3] = s;
    return o;
  }
  Oct from_quats(const Quat& a, const Quat& x) const {
    if (a.field != &F_ || x.field != &F_) bad_arg("OctAlgebra: quaternion from wrong field");
    return {this, {a.m[0], a.m[1], a.m[2], a.m[3], x.m[0], x.m[1], x.m[2], x.m[3]}};
  }
  Quat a_part(const Oct& o) const { return {F_, {o.c[0], o.c[1], o.c[2], o.c[3]}}; }
  Quat x_part(const Oct& o) const { return {F_, {o.c[4], o.c[5], o.c[6], o.c[7]}}; }

  // distinguished matrices: p0 = E11, n0 = E12, m0 = E21, and the fixed root
  // u = [[0,1],[delta,1]] of x^2 - x - delta
  Quat p0() const { return {F_, {1, 0, 0, 0}}; }
  Quat n0() const { return {F_, {0, 1, 0, 0}}; }
  Quat m0() const { return {F_, {0, 0, 1, 0}}; }
  Quat u_quat() const { return {F_, {0, 1, delta_, 1}}; }
  Oct u() const { return from_quats(u_quat(), Quat::zero(F_)); }

  Oct mul(const Oct& o1, const Oct& o2) const {
    check(o1, o2);
    Quat a = a_part(o1), x = x_part(o1), b = a_part(o2), y = x_part(o2);
    return from_quats(a * b + y.conj() * x, y * a + x * b.conj());
  }

  // same product through the precomputed 8x8 structure-constant table
  Oct mul_sc(const Oct& o1, const Oct& o2) const {
    check(o1, o2);
    Oct r = zero();
    for (int i = 0; i < 8; ++i) {
      if (o1.c[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (o2.c[j] == 0) continue;
        uint8_t s = F_.mul(o1.c[i], o2.c[j]);
        for (int k = 0; k < 8; ++k)
          r.c[k] = F_.add(r.c[k], F_.mul(s, sc_[i][j][k]));
      }
    }
    return r;
  }

  Oct add(const Oct& o1, const Oct& o2) const {
    check(o1, o2);
    Oct r{this, {}};
    for (int i = 0; i < 8; ++i) r.c[i] = F_.add(o1.c[i], o2.c[i]);
    return r;
  }
  Oct neg(const Oct& o) const {
    Oct r{this, {}};
    for (int i = 0; i < 8; ++i) r.c[i] = F_.neg(o.c[i]);
    return r;
  }
  Oct smul(uint8_t s, const Oct& o) const {
    Oct r{this, {}};
    for (int i = 0; i < 8; ++i) r.c[i] = F_.mul(s, o.c[i]);
    return r;
  }
  Oct conj(const Oct& o) const {
    return from_quats(a_part(o).conj(), -x_part(o));
  }
  uint8_t norm(const Oct& o) const {
    return F_.sub(a_part(o).norm(), x_part(o).norm());
  }
  uint8_t trace(const Oct& o) const { return a_part(o).trace(); }

  uint8_t polar(const Oct& o1, const Oct& o2) const {
    check(o1, o2);
    return F_.sub(F_.sub(norm(add(o1, o2)), norm(o1)), norm(o2));
  }
  uint8_t polar_basis(int i, int j) const { return polar_[i][j]; }

  // element <-> code (mixed-radix base q, little-endian)
  uint32_t code(const Oct& o) const {
    uint32_t v = 0;
    for (int i = 7; i >= 0; --i) v = v * F_.q() + o.c[i];
    return v;
  }
  Oct element(uint32_t code) const {
    Oct o{this, {}};
    for (int i = 0; i < 8; ++i) {
      o.c[i] = static_cast<uint8_t>(code % F_.q());
      code /= F_.q();
    }
    return o;
  }

  uint32_t mul_code(uint32_t c1, uint32_t c2) const {
    if (!fast_mul_.empty()) return fast_mul_[(c1 << 8) | c2];
    return code(mul(element(c1), element(c2)));
  }

  // canonical element encoding: two hex digits at q = 2, decimal otherwise
  std::string print_code(uint32_t c) const {
    if (F_.q() == 2) {
      static const char* hex = "0123456789abcdef";
      return {hex[(c >> 4) & 0xf], hex[c & 0xf]};
    }
    return std::to_string(c);
  }

private:
  void check(const Oct& o1, const Oct& o2) const {
    if (o1.alg != this || o2.alg != this)
      bad_arg("OctAlgebra: operands from different algebras");
  }

  const Field& F_;
  uint8_t delta_;
  std::array<uint32_t, 9> pow_q_;
  std::array<std::array<std::array<uint8_t, 8>, 8>, 8> sc_;
  std::array<std::array<uint8_t, 8>, 8> polar_;
  std::vector<uint8_t> fast_mul_;
};

inline Oct operator+(const Oct& a, const Oct& b) { return a.alg->add(a, b); }
inline Oct operator-(const Oct& a, const Oct& b) { return a.alg->add(a, a.alg->neg(b)); }
inline Oct operator-(const Oct& a) { return a.alg->neg(a); }
inline Oct operator*(const Oct& a, const Oct& b) { return a.alg->mul(a, b); }

inline const OctAlgebra& octonions(unsigned q) {
  switch (q) {
    case 2: { static const OctAlgebra a(gf(2)); return a; }
    case 3: { static const OctAlgebra a(gf(3)); return a; }
    case 4: { static const OctAlgebra a(gf(4)); return a; }
    case 8: { static const OctAlgebra a(gf(8)); return a; }
    case 9: { static const OctAlgebra a(gf(9)); return a; }
    default: bad_arg("octonions: unsupported field order " + std::to_string(q));
  }
}

}  // namespace octu
