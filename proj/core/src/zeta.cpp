#include "amzeta/zeta.hpp"

#include <sstream>

#include "amzeta/errors.hpp"

namespace amzeta {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

std::pair<QPoly, QPoly> divrem(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RationalFn normalized(QPoly num, QPoly den) {
  trim(num);
  trim(den);
  const QPoly g = gcd(num, den);
  if (g.size() > 1) {
    num = divrem(num, g).first;
    den = divrem(den, g).first;
  }
  const mpq_class c0 = den.at(0);
  for (auto& c : num) c /= c0;
  for (auto& c : den) c /= c0;
  return {num, den};
}

QPoly qpoly_pow(const QPoly& base, unsigned long e) {
  QPoly out{1};
  for (unsigned long i = 0; i < e; ++i) out = mul(out, base);
  return out;
}

}  // namespace

ZetaSeries zeta_from_counts(std::span<const mpz_class> counts, std::size_t order) {
  if (counts.size() < order) {
    throw InvalidArgument("zeta_from_counts: need a_1..a_" + std::to_string(order) + ", have " +
                          std::to_string(counts.size()));
  }
  ZetaSeries z;
  z.counts.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(order));
  z.coeffs.assign(order + 1, 0);
  z.coeffs[0] = 1;
  // k·c_k = Σ_{j=1..k} a_j·c_{k-j}
  for (std::size_t k = 1; k <= order; ++k) {
    mpq_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += mpq_class(z.counts[j - 1]) * z.coeffs[k - j];
    acc /= static_cast<unsigned long>(k);
    z.coeffs[k] = acc;
  }
  return z;
}

ZetaSeries zeta_from_counts(const FixSeq& seq, std::size_t order) {
  std::vector<mpz_class> counts;
  counts.reserve(order);
  for (std::uint64_t n = 1; n <= order; ++n) {
    const FixEntry* e = seq.find(n);
    if (!e) throw InvalidArgument("zeta_from_counts: a_" + std::to_string(n) + " missing");
    counts.push_back(e->value);
  }
  return zeta_from_counts(counts, order);
}

std::vector<mpq_class> log_derivative(const ZetaSeries& z) {
  const auto& c = z.coeffs;
  const std::size_t K = z.order();
  // z' = z·s  =>  (k+1)·c_{k+1} = Σ_{j=0..k} s_j·c_{k-j}
  std::vector<mpq_class> s(K, 0);
  for (std::size_t k = 0; k < K; ++k) {
    mpq_class acc = c[k + 1] * static_cast<unsigned long>(k + 1);
    for (std::size_t j = 0; j < k; ++j) acc -= s[j] * c[k - j];
    s[k] = acc / c[0];
  }
  return s;
}

std::string LinearRecurrence::to_string() const {
  if (coeffs.empty()) return "s(n) = 0";
  std::ostringstream os;
  os << "s(n) = ";
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpq_class& c = coeffs[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const mpq_class mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << "s(n-" << (i + 1) << ")";
  }
  if (first) os << "0";
  return os.str();
}

std::optional<LinearRecurrence> detect_linear_recurrence(std::span<const mpq_class> s,
                                                         std::size_t max_order) {
  if (s.size() < 2 * max_order) {
    throw InvalidArgument("detect_linear_recurrence: window of " + std::to_string(s.size()) +
                          " terms is shorter than 2*L = " + std::to_string(2 * max_order));
  }
  // Berlekamp-Massey: connection polynomial C with s_n + Σ C_i s_{n-i} = 0.
  QPoly C{1}, B{1};
  std::size_t L = 0, shift = 1;
  mpq_class b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    mpq_class d = s[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) d += C[i] * s[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const mpq_class coef = d / b;
    QPoly T = C;
    if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
    for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] -= coef * B[i];
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(T);
      b = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (L > max_order) return std::nullopt;
  LinearRecurrence rec;
  rec.coeffs.assign(L, 0);
  for (std::size_t i = 1; i <= L && i < C.size(); ++i) rec.coeffs[i - 1] = -C[i];
  return rec;
}

std::optional<LinearRecurrence> detect_linear_recurrence(std::span<const mpz_class> seq,
                                                         std::size_t max_order) {
  std::vector<mpq_class> q(seq.begin(), seq.end());
  return detect_linear_recurrence(std::span<const mpq_class>(q), max_order);
}

std::string qpoly_to_string(const QPoly& p, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpq_class& c = p[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const mpq_class mag = abs(c);
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::vector<mpq_class> RationalFn::expand(std::size_t terms) const {
  std::vector<mpq_class> out(terms, 0);
  for (std::size_t k = 0; k < terms; ++k) {
    mpq_class acc = k < numerator.size() ? numerator[k] : mpq_class(0);
    for (std::size_t j = 1; j <= k && j < denominator.size(); ++j) acc -= denominator[j] * out[k - j];
    out[k] = acc / denominator[0];
  }
  return out;
}

std::string RationalFn::to_string() const {
  auto wrap = [](const QPoly& p) {
    std::size_t terms = 0;
    for (const auto& c : p) terms += c != 0;
    const std::string s = qpoly_to_string(p);
    return terms > 1 ? "(" + s + ")" : s;
  };
  if (denominator.size() == 1 && denominator[0] == 1) {
    return qpoly_to_string(numerator);
  }
  return wrap(numerator) + " / " + wrap(denominator);
}

RationalForms recurrence_to_rational(const LinearRecurrence& rec,
                                     std::span<const mpq_class> initial) {
  const std::size_t r = rec.order();
  if (initial.size() < r) {
    throw InvalidArgument("recurrence_to_rational: need at least " + std::to_string(r) +
                          " initial terms");
  }
  for (std::size_t n = r; n < initial.size(); ++n) {
    mpq_class predicted = 0;
    for (std::size_t i = 1; i <= r; ++i) predicted += rec.coeffs[i - 1] * initial[n - i];
    if (predicted != initial[n]) {
      throw InvalidArgument("recurrence_to_rational: term " + std::to_string(n + 1) +
                            " violates the recurrence");
    }
  }
  // Q(t) = 1 - Σ c_i t^i, P = Q·S mod t^r
  QPoly Q(r + 1, 0);
  Q[0] = 1;
  for (std::size_t i = 1; i <= r; ++i) Q[i] = -rec.coeffs[i - 1];
  QPoly P(r, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i <= j; ++i) P[j] += Q[i] * initial[j - i];
  trim(P);
  trim(Q);

  RationalForms forms{normalized(P, Q), std::nullopt};
  const QPoly& num = forms.generating.numerator;
  const QPoly& den = forms.generating.denominator;
  if (num.empty()) {
    forms.zeta = RationalFn{{1}, {1}};
    return forms;
  }
  // P = -e·Q'  <=>  ζ = Q^{-e}
  const QPoly dQ = derivative(den);
  if (dQ.empty() || dQ.size() != num.size()) return forms;
  const mpq_class e = -num.back() / dQ.back();
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] != -e * dQ[i]) return forms;
  if (e.get_den() != 1 || !e.get_num().fits_slong_p()) return forms;
  const long ei = e.get_num().get_si();
  const QPoly power = qpoly_pow(den, static_cast<unsigned long>(ei < 0 ? -ei : ei));
  forms.zeta = ei > 0 ? RationalFn{{1}, power} : RationalFn{power, {1}};
  return forms;
}

}  // namespace amzeta
