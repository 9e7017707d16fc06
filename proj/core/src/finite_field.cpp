#include "amzeta/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "amzeta/errors.hpp"
#include "amzeta/numtheory.hpp"

namespace amzeta {

namespace {

using Coeffs = std::vector<std::uint32_t>;  // F_p[t], low degree first

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Coeffs rem(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * f[j]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return rem(std::move(prod), f, p);
}

Coeffs powmod_poly(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint32_t p) {
  Coeffs result{1};
  base = rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Coeffs gcd_poly(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> f_span, std::uint32_t p) {
  Coeffs f(f_span.begin(), f_span.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const Coeffs t{0, 1};
  Coeffs h = t;
  for (std::size_t k = 1; k <= m; ++k) {
    h = powmod_poly(h, p, f, p);  // t^{p^k} mod f
    if (k <= m / 2) {
      Coeffs diff = h;
      diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
      diff[1] = (diff[1] + p - 1) % p;
      trim(diff);
      Coeffs g = gcd_poly(f, diff, p);
      if (g.size() != 1) return false;
    }
  }
  Coeffs tr = t;
  return rem(h, f, p) == rem(tr, f, p);
}

class FieldRegistry {
 public:
  static const FieldDesc& get(std::uint32_t p, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FieldDesc>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[{p, m}];
    if (!slot) slot.reset(new FieldDesc(p, m, smallest_irreducible(p, m)));
    return *slot;
  }

 private:
  // Coefficients compared low-to-high: c0 is the most significant key.
  static Coeffs smallest_irreducible(std::uint32_t p, unsigned m) {
    if (m == 1) return {0, 1};
    Coeffs f(m + 1, 0);
    f[m] = 1;
    std::vector<std::uint32_t> digits(m, 0);
    for (;;) {
      for (unsigned i = 0; i < m; ++i) f[i] = digits[i];
      if (f[0] != 0 && is_irreducible_mod_p(f, p)) return f;
      // increment with digits[m-1] least significant
      int pos = static_cast<int>(m) - 1;
      while (pos >= 0 && ++digits[pos] == p) digits[pos--] = 0;
      if (pos < 0) throw InvalidArgument("no irreducible polynomial found");
    }
  }
};

FieldDesc::FieldDesc(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  mpz_ui_pow_ui(order_.get_mpz_t(), p, m);
}

const FieldDesc& FieldDesc::get(std::uint32_t p, unsigned m) {
  if (m < 1 || m > kMaxExtensionDegree) {
    throw InvalidArgument("extension degree must be in [1, " +
                          std::to_string(kMaxExtensionDegree) + "], got " +
                          std::to_string(m));
  }
  if (p >= (1u << 31) || !nt::is_prime(mpz_class(static_cast<unsigned long>(p)))) {
    throw InvalidArgument("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
  }
  return FieldRegistry::get(p, m);
}

std::uint64_t FieldDesc::size() const {
  if (!order_.fits_ulong_p()) {
    throw ResourceLimit("field too large to enumerate", order_.get_str());
  }
  return order_.get_ui();
}

FieldElem FieldDesc::zero() const { return FieldElem(this, {}); }

FieldElem FieldDesc::one() const { return from_int(1); }

FieldElem FieldDesc::from_int(std::int64_t c) const {
  FieldElem::Residues r{};
  std::int64_t v = c % static_cast<std::int64_t>(p_);
  if (v < 0) v += p_;
  r[0] = static_cast<std::uint32_t>(v);
  return FieldElem(this, r);
}

FieldElem FieldDesc::from_coeffs(std::span<const std::uint32_t> residues) const {
  if (residues.size() > m_) {
    throw InvalidArgument("element has " + std::to_string(residues.size()) +
                          " coefficients, field degree is " + std::to_string(m_));
  }
  FieldElem::Residues r{};
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] >= p_) {
      throw InvalidArgument("residue " + std::to_string(residues[i]) +
                            " out of range for p = " + std::to_string(p_));
    }
    r[i] = residues[i];
  }
  return FieldElem(this, r);
}

FieldElem FieldDesc::generator() const {
  if (m_ == 1) return zero();  // t ≡ 0 modulo t
  FieldElem::Residues r{};
  r[1] = 1;
  return FieldElem(this, r);
}

FieldElem FieldDesc::element(std::uint64_t index) const {
  FieldElem::Residues r{};
  for (unsigned i = 0; i < m_; ++i) {
    r[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  if (index != 0) throw InvalidArgument("element index out of range");
  return FieldElem(this, r);
}

std::vector<FieldElem> FieldDesc::elements() const {
  const std::uint64_t n = size();
  if (n > 10'000'000) throw ResourceLimit("field too large to enumerate", order_.get_str());
  std::vector<FieldElem> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::string FieldDesc::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || modulus_[i] != 1) os << modulus_[i];
    if (i > 0) {
      if (modulus_[i] != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void FieldElem::require_same_field(const FieldElem& o) const {
  if (field_ != o.field_) {
    throw InvalidArgument("field elements from different fields");
  }
}

bool FieldElem::is_zero() const noexcept {
  for (unsigned i = 0; i < field_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElem::is_one() const noexcept {
  if (c_[0] != 1) return false;
  for (unsigned i = 1; i < field_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_field(o);
  const std::uint32_t p = field_->characteristic();
  Residues r{};
  for (unsigned i = 0; i < field_->degree(); ++i) {
    const std::uint32_t s = c_[i] + o.c_[i];
    r[i] = s >= p ? s - p : s;
  }
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same_field(o);
  const std::uint32_t p = field_->characteristic();
  Residues r{};
  for (unsigned i = 0; i < field_->degree(); ++i) {
    r[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  }
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator-() const { return field_->zero() - *this; }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(o);
  const std::uint64_t p = field_->characteristic();
  const unsigned m = field_->degree();
  Residues r{};
  if (m == 1) {
    r[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % p);
    return FieldElem(field_, r);
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> prod{};
  for (unsigned i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p;
    }
  }
  const auto& f = field_->modulus();
  for (unsigned i = 2 * m - 2; i >= m; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[i - m + j] = (prod[i - m + j] + (p - c) * f[j]) % p;
    }
  }
  for (unsigned i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return FieldElem(field_, r);
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (field_->degree() == 1) {
    Residues r{};
    r[0] = inv_mod_p(c_[0], field_->characteristic());
    return FieldElem(field_, r);
  }
  // x^{p^m - 2}
  return pow(mpz_class(field_->order() - 2));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same_field(o);
  return *this * o.inv();
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = field_->one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElem FieldElem::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(mpz_class(-e));
  if (e.fits_ulong_p()) return pow(static_cast<std::uint64_t>(e.get_ui()));
  // Reduce by the unit group order; 0^e = 0 for e > 0.
  if (is_zero()) return *this;
  const mpz_class reduced = nt::mod(e, field_->order() - 1);
  return pow(static_cast<std::uint64_t>(reduced.get_ui()));
}

FieldElem FieldElem::frobenius(std::int64_t k) const {
  const std::int64_t m = field_->degree();
  std::int64_t steps = k % m;
  if (steps < 0) steps += m;
  FieldElem x = *this;
  for (std::int64_t i = 0; i < steps; ++i) x = x.pow(std::uint64_t{field_->characteristic()});
  return x;
}

std::uint64_t FieldElem::index() const {
  std::uint64_t idx = 0;
  for (unsigned i = field_->degree(); i-- > 0;) idx = idx * field_->characteristic() + c_[i];
  return idx;
}

std::string FieldElem::to_string() const {
  if (field_->degree() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (unsigned i = 0; i < field_->degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

}  // namespace amzeta
