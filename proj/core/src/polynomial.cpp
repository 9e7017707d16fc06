#include "amzeta/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "amzeta/errors.hpp"

namespace amzeta {

namespace {

using Vec = std::vector<FieldElem>;
using Span = std::span<const FieldElem>;

constexpr std::size_t kKaratsubaThreshold = 64;

// out[i + j] += a[i]·b[j], skipping zero coefficients on both sides.
void schoolbook_into(Span a, Span b, Vec& out, std::size_t offset) {
  std::vector<std::size_t> b_nz;
  b_nz.reserve(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b[j].is_zero()) b_nz.push_back(j);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j : b_nz) out[offset + i + j] += a[i] * b[j];
  }
}

Vec add_spans(Span a, Span b, const FieldElem& zero) {
  Vec out(std::max(a.size(), b.size()), zero);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec karatsuba(Span a, Span b, const FieldElem& zero) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  Vec out(a.size() + b.size() - 1, zero);
  if (b.size() <= kKaratsubaThreshold) {
    schoolbook_into(a, b, out, 0);
    return out;
  }
  if (2 * b.size() <= a.size()) {
    for (std::size_t off = 0; off < a.size(); off += b.size()) {
      const std::size_t len = std::min(b.size(), a.size() - off);
      Vec part = karatsuba(a.subspan(off, len), b, zero);
      for (std::size_t i = 0; i < part.size(); ++i) out[off + i] += part[i];
    }
    return out;
  }
  const std::size_t h = (a.size() + 1) / 2;
  Span a0 = a.first(h), a1 = a.subspan(h);
  Span b0 = b.first(std::min(h, b.size())), b1 = b.subspan(std::min(h, b.size()));
  Vec z0 = karatsuba(a0, b0, zero);
  Vec z2 = karatsuba(a1, b1, zero);
  Vec sa = add_spans(a0, a1, zero), sb = add_spans(b0, b1, zero);
  Vec z1 = karatsuba(sa, sb, zero);
  for (std::size_t i = 0; i < z0.size(); ++i) {
    z1[i] -= z0[i];
    out[i] += z0[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    z1[i] -= z2[i];
    out[i + 2 * h] += z2[i];
  }
  for (std::size_t i = 0; i < z1.size() && i + h < out.size(); ++i) out[i + h] += z1[i];
  return out;
}

// Inverse Frobenius on coefficients of h where g(x) = h(x^p).
Poly pth_root(const Poly& g) {
  const FieldDesc& f = g.field();
  const std::size_t p = f.characteristic();
  Vec out;
  out.reserve(static_cast<std::size_t>(g.degree()) / p + 1);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(g.degree()); i += p) {
    out.push_back(g.coeffs()[i].frobenius(-1));
  }
  return Poly(f, std::move(out));
}

Poly radical(const Poly& g_in) {
  Poly g = g_in.monic();
  if (g.degree() <= 0) return Poly::constant(g.field().one());
  Poly d = g.derivative();
  if (d.is_zero()) return radical(pth_root(g));
  Poly c = gcd(g, d);
  Poly w = divrem(g, c).quotient.monic();
  if (c.degree() == 0) return w;
  Poly rc = radical(c);
  Poly shared = gcd(w, rc);
  return (w * divrem(rc, shared).quotient).monic();
}

}  // namespace

Poly::Poly(const FieldDesc& field, std::vector<FieldElem> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (&c.field() != field_) throw InvalidArgument("coefficient from a different field");
  }
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (field_ != o.field_) throw InvalidArgument("polynomials over different fields");
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElem& c, std::size_t e) {
  Vec v(e + 1, c.field().zero());
  v[e] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(const FieldDesc& field) { return monomial(field.one(), 1); }

FieldElem Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : field_->zero();
}

const FieldElem& Poly::leading() const {
  if (c_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return c_.back();
}

std::size_t Poly::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const FieldElem& c) { return !c.is_zero(); }));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(*field_);
  Vec d(c_.size() - 1, field_->zero());
  const std::uint32_t p = field_->characteristic();
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i].is_zero() || i % p == 0) continue;
    d[i - 1] = c_[i] * field_->from_int(static_cast<std::int64_t>(i % p));
  }
  return Poly(*field_, std::move(d));
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inv();
}

FieldElem Poly::operator()(const FieldElem& x) const {
  if (&x.field() != field_) throw InvalidArgument("evaluation point from a different field");
  FieldElem acc = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(o);
  return Poly(*field_, add_spans(c_, o.c_, field_->zero()));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_field(o);
  Vec out(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const FieldElem& c) const {
  if (&c.field() != field_) throw InvalidArgument("scalar from a different field");
  Vec out = c_;
  for (auto& x : out) x *= c;
  return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(o);
  if (is_zero() || o.is_zero()) return Poly(*field_);
  const bool dense = 2 * nonzero_terms() > c_.size() && 2 * o.nonzero_terms() > o.c_.size();
  if (dense && std::min(c_.size(), o.c_.size()) > kKaratsubaThreshold) {
    return Poly(*field_, karatsuba(c_, o.c_, field_->zero()));
  }
  Vec out(c_.size() + o.c_.size() - 1, field_->zero());
  schoolbook_into(c_, o.c_, out, 0);
  return Poly(*field_, std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (i == 0 || !unit) os << c_[i].to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (&a.field() != &b.field()) throw InvalidArgument("polynomials over different fields");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldDesc& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  const auto bc = b.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<std::size_t> b_nz;
  for (std::size_t j = 0; j < db; ++j)
    if (!bc[j].is_zero()) b_nz.push_back(j);
  const FieldElem lead_inv = b.leading().inv();

  Vec r(a.coeffs().begin(), a.coeffs().end());
  Vec q(r.size() - db, f.zero());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const FieldElem c = r[i] * lead_inv;
    q[i - db] = c;
    r[i] = f.zero();
    for (std::size_t j : b_nz) r[i - db + j] -= c * bc[j];
  }
  r.resize(db, f.zero());
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a_in, const Poly& b_in) {
  Poly a = a_in, b = b_in;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly compose(const Poly& f, const Poly& g) {
  if (&f.field() != &g.field()) throw InvalidArgument("polynomials over different fields");
  if (f.is_zero()) return f;
  const auto fc = f.coeffs();
  Poly result = Poly::constant(fc.back());
  for (std::size_t i = fc.size() - 1; i-- > 0;) {
    result = result * g;
    if (!fc[i].is_zero()) result += Poly::constant(fc[i]);
  }
  return result;
}

Poly iterate(const Poly& f, std::uint64_t n, std::size_t degree_cap) {
  if (f.degree() < 1) throw InvalidArgument("iterate: need deg f >= 1");
  if (n < 1) throw InvalidArgument("iterate: need n >= 1");
  mpz_class required;
  mpz_ui_pow_ui(required.get_mpz_t(), static_cast<unsigned long>(f.degree()), n);
  if (required > degree_cap) {
    throw ResourceLimit("iterate: degree " + required.get_str() + " exceeds cap " +
                            std::to_string(degree_cap),
                        required.get_str());
  }
  Poly result = f;
  for (std::uint64_t i = 1; i < n; ++i) result = compose(f, result);
  return result;
}

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p with ni < p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      num = num * ((ni - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    // den is a unit mod p
    mpz_class inv = mpz_class(static_cast<unsigned long>(den));
    mpz_class pm = mpz_class(static_cast<unsigned long>(p));
    mpz_invert(inv.get_mpz_t(), inv.get_mpz_t(), pm.get_mpz_t());
    result = result * num % p * inv.get_ui() % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly AdditiveForm::to_poly(std::size_t degree_cap) const {
  std::size_t top = taps.size();
  while (top > 0 && taps[top - 1].is_zero()) --top;
  if (top == 0) return Poly(*field);
  mpz_class required;
  mpz_ui_pow_ui(required.get_mpz_t(), p(), static_cast<unsigned long>((top - 1) * m()));
  if (required > degree_cap) {
    throw ResourceLimit("additive form degree " + required.get_str() + " exceeds cap " +
                            std::to_string(degree_cap),
                        required.get_str());
  }
  Vec c(required.get_ui() + 1, field->zero());
  std::size_t e = 1;
  const std::size_t q = static_cast<std::size_t>(field->order().get_ui());
  for (std::size_t k = 0; k < top; ++k, e *= q) c[e] = taps[k];
  return Poly(*field, std::move(c));
}

AdditiveForm additive_iterate(const FieldElem& a, std::uint64_t n) {
  if (a.is_zero()) throw InvalidArgument("additive_iterate: a must be nonzero");
  if (n < 1) throw InvalidArgument("additive_iterate: need n >= 1");
  const FieldDesc& f = a.field();
  AdditiveForm form{&f, {}};
  form.taps.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    const std::uint32_t binom = binomial_mod_p(n, k, f.characteristic());
    form.taps.push_back(binom == 0 ? f.zero() : f.from_int(binom) * a.pow(n - k));
  }
  return form;
}

Poly squarefree_part(const Poly& g) {
  if (g.is_zero()) throw InvalidArgument("squarefree_part of the zero polynomial");
  return radical(g);
}

std::uint64_t distinct_root_count(const Poly& g) {
  if (g.is_zero()) throw InvalidArgument("distinct_root_count of the zero polynomial");
  return static_cast<std::uint64_t>(squarefree_part(g).degree());
}

}  // namespace amzeta
