#pragma once
// Exact arithmetic for small finite fields GF(q), q in {2,3,4,8,9,16}, and
// their quadratic extension towers GF(q^2)|GF(q).
//
// An element sum c_i t^i of GF(p^k) is identified with the index
// sum c_i p^i (coefficients little-endian over the prime field), so index 0
// is zero and index 1 is the identity. The defining polynomials are fixed:
//
//   GF(4)  = GF(2)[t]/(t^2+t+1)
//   GF(8)  = GF(2)[t]/(t^3+t+1)
//   GF(9)  = GF(3)[t]/(t^2+1)
//   GF(16) = GF(2)[t]/(t^4+t+1)
//
// All arithmetic goes through lookup tables built once per field; the
// element encoding is stable across runs.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octu {

// Precondition violations (bad arguments, unsupported parameters).
[[noreturn]] inline void bad_arg(const std::string& msg) {
  throw std::invalid_argument(msg);
}

// Internal consistency failures that indicate a construction bug.
[[noreturn]] inline void internal_error(const std::string& msg) {
  throw std::logic_error(msg);
}

class Field {
public:
  Field(unsigned p, unsigned deg, std::vector<uint8_t> modulus)
      : p_(p), deg_(deg), mod_(std::move(modulus)) {
    q_ = 1;
    for (unsigned i = 0; i < deg_; ++i) q_ *= p_;
    if (q_ < 2 || q_ > 16 || mod_.size() != deg_ + 1 || mod_.back() != 1)
      bad_arg("Field: unsupported parameters");
    build_tables();
  }

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned deg() const { return deg_; }
  const std::vector<uint8_t>& modulus() const { return mod_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[at(a, b)]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
  uint8_t neg(uint8_t a) const { check(a); return neg_[a]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[at(a, b)]; }

  uint8_t inv(uint8_t a) const {
    check(a);
    if (a == 0) bad_arg("GF(" + std::to_string(q_) + "): inverse of zero");
    return inv_[a];
  }

  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

  uint8_t pow(uint8_t a, long e) const {
    check(a);
    if (a == 0) {
      if (e < 0) bad_arg("GF: negative power of zero");
      return e == 0 ? 1 : 0;
    }
    long m = static_cast<long>(q_) - 1;
    long k = ((e % m) + m) % m;
    return exp_[(log_[a] + k) % m];
  }

  // Frobenius x -> x^p; an automorphism of the field.
  uint8_t frob(uint8_t a) const { return pow(a, static_cast<long>(p_)); }

  // Exponent/logarithm tables relative to the fixed primitive element,
  // which is the least element of multiplicative order q-1.
  uint8_t primitive() const { return exp_[1]; }
  uint8_t exp(unsigned k) const { return exp_[k % (q_ - 1)]; }
  unsigned log(uint8_t a) const {
    check(a);
    if (a == 0) bad_arg("GF: log of zero");
    return log_[a];
  }

  bool operator==(const Field& o) const { return this == &o; }

private:
  void check(uint8_t a) const {
    if (a >= q_) bad_arg("GF(" + std::to_string(q_) + "): element index out of range");
  }
  size_t at(uint8_t a, uint8_t b) const {
    check(a);
    check(b);
    return static_cast<size_t>(a) * q_ + b;
  }

  std::vector<uint8_t> digits(unsigned x) const {
    std::vector<uint8_t> d(deg_, 0);
    for (unsigned i = 0; i < deg_; ++i) { d[i] = x % p_; x /= p_; }
    return d;
  }
  unsigned undigits(const std::vector<uint8_t>& d) const {
    unsigned x = 0;
    for (unsigned i = deg_; i-- > 0;) x = x * p_ + d[i];
    return x;
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<uint8_t> dn(deg_);
      for (unsigned i = 0; i < deg_; ++i) dn[i] = static_cast<uint8_t>((p_ - da[i]) % p_);
      neg_[a] = static_cast<uint8_t>(undigits(dn));
      for (unsigned b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<uint8_t> ds(deg_);
        for (unsigned i = 0; i < deg_; ++i) ds[i] = static_cast<uint8_t>((da[i] + db[i]) % p_);
        add_[a * q_ + b] = static_cast<uint8_t>(undigits(ds));
        mul_[a * q_ + b] = static_cast<uint8_t>(poly_mul(a, b));
      }
    }
    for (unsigned a = 1; a < q_; ++a) {
      for (unsigned b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) { inv_[a] = static_cast<uint8_t>(b); break; }
      if (inv_[a] == 0) internal_error("Field: reducible modulus");
    }
    // least primitive element
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (unsigned g = 1; g < q_; ++g) {
      unsigned x = 1, ord = 0;
      do { x = mul_[x * q_ + g]; ++ord; } while (x != 1);
      if (ord == q_ - 1) {
        x = 1;
        for (unsigned k = 0; k < q_ - 1; ++k) {
          exp_[k] = static_cast<uint8_t>(x);
          log_[x] = k;
          x = mul_[x * q_ + g];
        }
        return;
      }
    }
    internal_error("Field: no primitive element");
  }

  // product of elements a*b as polynomials over GF(p) reduced mod modulus
  unsigned poly_mul(unsigned a, unsigned b) const {
    auto da = digits(a), db = digits(b);
    std::vector<uint8_t> prod(2 * deg_, 0);
    for (unsigned i = 0; i < deg_; ++i)
      for (unsigned j = 0; j < deg_; ++j)
        prod[i + j] = static_cast<uint8_t>((prod[i + j] + da[i] * db[j]) % p_);
    for (unsigned k = 2 * deg_; k-- > deg_;) {
      uint8_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      // t^k = t^(k-deg) * (t^deg), and t^deg = -(lower part of modulus)
      for (unsigned i = 0; i < deg_; ++i) {
        unsigned sub = (c * mod_[i]) % p_;
        prod[k - deg_ + i] = static_cast<uint8_t>((prod[k - deg_ + i] + p_ - sub) % p_);
      }
    }
    prod.resize(deg_);
    return undigits(prod);
  }

  unsigned p_, deg_, q_;
  std::vector<uint8_t> mod_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, exp_;
  std::vector<unsigned> log_;
};

// Shared immutable field instances for the supported orders.
inline const Field& gf(unsigned q) {
  static const Field f2(2, 1, {0, 1});
  static const Field f3(3, 1, {0, 1});
  static const Field f4(2, 2, {1, 1, 1});
  static const Field f8(2, 3, {1, 1, 0, 1});
  static const Field f9(3, 2, {1, 0, 1});
  static const Field f16(2, 4, {1, 1, 0, 0, 1});
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 8: return f8;
    case 9: return f9;
    case 16: return f16;
    default: bad_arg("gf: unsupported field order " + std::to_string(q));
  }
}

struct FieldElem {
  const Field* field;
  uint8_t v;

  FieldElem(const Field& f, uint8_t value) : field(&f), v(value) {
    if (v >= f.q()) bad_arg("FieldElem: index out of range");
  }

  bool is_zero() const { return v == 0; }
  FieldElem inv() const { return {*field, field->inv(v)}; }
  FieldElem pow(long e) const { return {*field, field->pow(v, e)}; }
  FieldElem frob() const { return {*field, field->frob(v)}; }

  friend FieldElem operator+(FieldElem a, FieldElem b) { return {a.same(b), a.field->add(a.v, b.v)}; }
  friend FieldElem operator-(FieldElem a, FieldElem b) { return {a.same(b), a.field->sub(a.v, b.v)}; }
  friend FieldElem operator*(FieldElem a, FieldElem b) { return {a.same(b), a.field->mul(a.v, b.v)}; }
  friend FieldElem operator/(FieldElem a, FieldElem b) { return {a.same(b), a.field->div(a.v, b.v)}; }
  friend FieldElem operator-(FieldElem a) { return {*a.field, a.field->neg(a.v)}; }
  friend bool operator==(FieldElem a, FieldElem b) { return a.field == b.field && a.v == b.v; }
  friend bool operator!=(FieldElem a, FieldElem b) { return !(a == b); }

  const Field& same(FieldElem b) const {
    if (field != b.field) bad_arg("FieldElem: operands from different fields");
    return *field;
  }
};

// Quadratic extension GF(q^2)|GF(q) with the subfield embedding fixed by
// mapping the base generator to the least root of the base modulus.
class QuadExt {
public:
  QuadExt(const Field& base, const Field& ext) : base_(base), ext_(ext) {
    if (base.p() != ext.p() || ext.q() != base.q() * base.q())
      bad_arg("QuadExt: not a quadratic extension");
    build_embedding();
  }

  const Field& base() const { return base_; }
  const Field& ext() const { return ext_; }

  // Galois conjugation x -> x^q, the generator of Gal(E|F).
  uint8_t conj(uint8_t x) const { return ext_.pow(x, static_cast<long>(base_.q())); }

  uint8_t embed(uint8_t b) const {
    if (b >= base_.q()) bad_arg("QuadExt: base element out of range");
    return embed_[b];
  }

  bool in_base(uint8_t x) const { return restrict_[x] != 0xff; }

  // norm x*conj(x) and trace x+conj(x), both landing in the base field
  uint8_t norm(uint8_t x) const { return to_base(ext_.mul(x, conj(x))); }
  uint8_t trace(uint8_t x) const { return to_base(ext_.add(x, conj(x))); }

private:
  uint8_t to_base(uint8_t x) const {
    if (restrict_[x] == 0xff) internal_error("QuadExt: value not in base field");
    return restrict_[x];
  }

  void build_embedding() {
    const unsigned bq = base_.q();
    // least root of the base modulus inside the extension
    unsigned root = ext_.q();
    for (unsigned r = 0; r < ext_.q(); ++r) {
      uint8_t acc = 0, rp = 1;
      for (uint8_t c : base_.modulus()) {
        uint8_t term = ext_.mul(static_cast<uint8_t>(c % ext_.p()), rp);
        acc = ext_.add(acc, term);
        rp = ext_.mul(rp, static_cast<uint8_t>(r));
      }
      if (acc == 0) { root = r; break; }
    }
    if (root == ext_.q()) internal_error("QuadExt: base modulus has no root in extension");
    embed_.assign(bq, 0);
    restrict_.assign(ext_.q(), 0xff);
    for (unsigned b = 0; b < bq; ++b) {
      // b = sum c_i s^i in the base; image = sum c_i root^i in the extension
      unsigned x = b;
      uint8_t img = 0, rp = 1;
      for (unsigned i = 0; i < base_.deg(); ++i) {
        uint8_t c = static_cast<uint8_t>(x % base_.p());
        x /= base_.p();
        img = ext_.add(img, ext_.mul(c, rp));
        rp = ext_.mul(rp, static_cast<uint8_t>(root));
      }
      embed_[b] = img;
      restrict_[img] = static_cast<uint8_t>(b);
    }
    // the embedding must be a field homomorphism onto the fixed field of conj
    for (unsigned a = 0; a < bq; ++a)
      for (unsigned b = 0; b < bq; ++b) {
        if (embed_[base_.add(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] !=
            ext_.add(embed_[a], embed_[b]))
          internal_error("QuadExt: embedding not additive");
        if (embed_[base_.mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b))] !=
            ext_.mul(embed_[a], embed_[b]))
          internal_error("QuadExt: embedding not multiplicative");
      }
    for (unsigned x = 0; x < ext_.q(); ++x)
      if ((conj(static_cast<uint8_t>(x)) == x) != in_base(static_cast<uint8_t>(x)))
        internal_error("QuadExt: fixed field mismatch");
  }

  const Field& base_;
  const Field& ext_;
  std::vector<uint8_t> embed_;
  std::vector<uint8_t> restrict_;
};

inline const QuadExt& gf_ext(unsigned base_q) {
  static const QuadExt e2(gf(2), gf(4));
  static const QuadExt e3(gf(3), gf(9));
  static const QuadExt e4(gf(4), gf(16));
  switch (base_q) {
    case 2: return e2;
    case 3: return e3;
    case 4: return e4;
    default: bad_arg("gf_ext: no registered quadratic extension over GF(" + std::to_string(base_q) + ")");
  }
}

// norm and trace of an element of a registered quadratic extension,
// returned as elements of the base field
inline std::pair<FieldElem, FieldElem> ext_norm_trace(FieldElem x) {
  for (unsigned bq : {2u, 3u, 4u}) {
    const QuadExt& e = gf_ext(bq);
    if (&e.ext() == x.field)
      return {FieldElem(e.base(), e.norm(x.v)), FieldElem(e.base(), e.trace(x.v))};
  }
  bad_arg("ext_norm_trace: element is not in a registered quadratic extension");
}

// Least delta such that x^2 - x - delta has no root in GF(q).
inline FieldElem find_delta(const Field& f) {
  for (unsigned d = 0; d < f.q(); ++d) {
    bool has_root = false;
    for (unsigned r = 0; r < f.q(); ++r) {
      uint8_t rr = static_cast<uint8_t>(r);
      uint8_t val = f.sub(f.sub(f.mul(rr, rr), rr), static_cast<uint8_t>(d));
      if (val == 0) { has_root = true; break; }
    }
    if (!has_root) return {f, static_cast<uint8_t>(d)};
  }
  internal_error("find_delta: every quadratic splits");
}

inline FieldElem find_delta(unsigned q) { return find_delta(gf(q)); }

}  // namespace octu
