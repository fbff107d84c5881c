#include "quadlie/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadlie {

Polynomial::Polynomial(Vec coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(Vec{c}); }

Polynomial Polynomial::power(std::size_t k) {
  Vec c(k + 1, Rational(0));
  c[k] = 1;
  return Polynomial(std::move(c));
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading();
  Vec c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  Vec c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = Rational(k) * coeffs_[k];
  return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vec c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vec c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  Vec c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Vec rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  Vec quot(a.degree() - db + 1, Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[k + db] / b.coeffs_[db];
    if (q == 0) continue;
    quot[k] = q;
    for (int i = 0; i <= db; ++i) rem[k + i] -= q * b.coeffs_[i];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational ab = abs(c);
    if (k == 0 || ab != 1) os << quadlie::to_string(ab);
    if (k > 0) {
      if (ab != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = Polynomial::divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  auto [q, r] = Polynomial::divmod(a * b, gcd(a, b));
  return q.monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree test on zero polynomial");
  if (p.degree() == 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Minimal monic p with p(m) v = 0, plus the dependency found in the Krylov
// chain v, m v, m^2 v, ...
Polynomial krylov_minimal_polynomial(const Matrix& m, const Vec& v) {
  const std::size_t n = v.size();
  std::vector<Vec> chain;  // rows: v, m v, ...
  Vec cur = v;
  while (true) {
    // Solve chain^T x = cur over the vectors collected so far.
    if (!chain.empty()) {
      Matrix cols(n, chain.size());
      for (std::size_t j = 0; j < chain.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) cols(i, j) = chain[j][i];
      if (auto x = solve(cols, cur)) {
        Vec coeffs(chain.size() + 1, Rational(0));
        for (std::size_t j = 0; j < chain.size(); ++j) coeffs[j] = -(*x)[j];
        coeffs[chain.size()] = 1;
        return Polynomial(std::move(coeffs));
      }
    } else if (is_zero(cur)) {
      return Polynomial::power(0);  // the zero vector: minimal polynomial 1
    }
    chain.push_back(cur);
    cur = m * cur;
    if (chain.size() > n) throw std::logic_error("Krylov chain exceeded dimension");
  }
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::power(0);
  Polynomial p = Polynomial::power(0);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rational(0));
    e[i] = 1;
    p = lcm(p, krylov_minimal_polynomial(m, e));
    if (p.degree() == static_cast<int>(n)) break;
  }
  return p.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_1 = m, a_{n-k} = -tr(M_k)/k, M_{k+1} = m (M_k + a_{n-k} I).
  Vec coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational a = -mk.trace() / Rational(k);
    coeffs[n - k] = a;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += a;
    mk = m * mk;
  }
  return Polynomial(std::move(coeffs));
}

namespace {

std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> divs;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  RationalRoots out;
  Polynomial q = p.monic();
  // Factor out t^k.
  while (q.degree() > 0 && q.coeff(0) == 0) {
    out.roots.push_back(0);
    q = Polynomial::divmod(q, Polynomial::power(1)).first;
  }
  while (q.degree() > 0) {
    // Clear denominators and scan p/s candidates (rational root theorem).
    Integer den = 1;
    for (const auto& c : q.coeffs()) den = lcm(den, denominator(c));
    std::vector<Integer> ic;
    for (const auto& c : q.coeffs()) ic.push_back(Integer(numerator(c) * (den / denominator(c))));
    std::optional<Rational> found;
    for (const auto& pn : positive_divisors(ic.front())) {
      for (const auto& ps : positive_divisors(ic.back())) {
        for (int sign : {1, -1}) {
          const Rational cand = Rational(sign * pn, ps);
          if (q(cand) == 0) { found = cand; break; }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    // Divide out (t - root) as often as it goes.
    const Polynomial lin(Vec{-*found, 1});
    while (true) {
      auto [quot, rem] = Polynomial::divmod(q, lin);
      if (!rem.is_zero()) break;
      out.roots.push_back(*found);
      q = quot;
      if (q.degree() == 0) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remaining = q.monic();
  return out;
}

}  // namespace quadlie
