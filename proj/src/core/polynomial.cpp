#include "jc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace jc {

namespace {

bool descending(const Term& a, const Term& b) { return grlex_compare(a.monomial, b.monomial) > 0; }

// Sorts and merges equal monomials, dropping zero sums.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), descending);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].monomial == acc.monomial) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists; sign = -1 subtracts b.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = grlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Coefficient s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].monomial, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

std::string positional_name(std::size_t index) { return "x" + std::to_string(index + 1); }

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw std::invalid_argument("term has wrong variable count");
  }
  canonicalize(terms);
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Coefficient& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back(Term{Monomial::variable(nvars, index), Coefficient(1)});
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Coefficient& c) {
  Polynomial p(m.nvars());
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

long Polynomial::degree() const {
  // Graded order puts a maximal-degree term first.
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().monomial.degree());
}

long Polynomial::order() const {
  return terms_.empty() ? -1 : static_cast<long>(terms_.back().monomial.degree());
}

bool Polynomial::is_homogeneous(long d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return static_cast<long>(t.monomial.degree()) == d; });
}

Domain Polynomial::domain() const {
  for (const auto& t : terms_) {
    if (!t.coeff.is_real()) return Domain::gaussian;
  }
  return Domain::rational;
}

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Coefficient(0);
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Coefficient(0);
}

Polynomial Polynomial::homogeneous_part(long d) const {
  Polynomial p(nvars_);
  for (const auto& t : terms_) {
    if (static_cast<long>(t.monomial.degree()) == d) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::truncated(long d) const {
  Polynomial p(nvars_);
  for (const auto& t : terms_) {
    if (static_cast<long>(t.monomial.degree()) <= d) p.terms_.push_back(t);
  }
  return p;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (nvars_ != o.nvars_) {
    throw std::invalid_argument("polynomials live in rings with different variable counts (" +
                                std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, long max_degree) {
  a.check_ring(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    const long ds = static_cast<long>(s.monomial.degree());
    for (const auto& t : b.terms_) {
      if (max_degree >= 0 && ds + static_cast<long>(t.monomial.degree()) > max_degree) continue;
      products.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
    }
  }
  canonicalize(products);
  Polynomial p(a.nvars_);
  p.terms_ = std::move(products);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial::multiply_truncated(a, b, -1);
}

Polynomial operator*(const Coefficient& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.nvars_);
  Polynomial r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, Coefficient(1));
  Polynomial base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Coefficient Polynomial::evaluate(std::span<const Coefficient> point) const {
  if (point.size() != nvars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, ring has " + std::to_string(nvars_));
  }
  Coefficient sum(0);
  for (const auto& t : terms_) {
    Coefficient v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] != 0) v *= point[i].pow(t.monomial[i]);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[var] = e - 1;
    out.push_back(Term{std::move(m), t.coeff * Coefficient(static_cast<long>(e))});
  }
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, std::optional<long> max_degree) const {
  if (images.size() != nvars_) {
    throw std::invalid_argument("substitution needs " + std::to_string(nvars_) + " images, got " +
                                std::to_string(images.size()));
  }
  if (images.empty()) return *this;
  const std::size_t target = images[0].nvars();
  for (const auto& img : images) {
    if (img.nvars() != target) throw std::invalid_argument("substitution images live in different rings");
  }
  const long cap = max_degree.value_or(-1);
  auto mul = [cap](const Polynomial& a, const Polynomial& b) { return multiply_truncated(a, b, cap); };

  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, std::size_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Coefficient(1)));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[i]));
    return cache[e];
  };

  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i) {
      if (t.monomial[i] != 0) prod = mul(prod, power(i, t.monomial[i]));
    }
    for (auto& term : prod.terms_) acc.push_back(std::move(term));
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::real_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back(Term{t.monomial, t.coeff.real_part()});
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::imag_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back(Term{t.monomial, t.coeff.imag_part()});
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = divisor.leading_term();
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& lt = remainder.leading_term();
    if (!lead.monomial.divides(lt.monomial)) throw std::domain_error("polynomial division is not exact");
    Term q{lt.monomial / lead.monomial, lt.coeff / lead.coeff};
    remainder -= term(q.monomial, q.coeff) * divisor;
    quotient.push_back(std::move(q));
  }
  return from_terms(nvars_, std::move(quotient));
}

std::string Polynomial::to_string(const VariableNamer& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    // Split into a sign and a magnitude so output reads "a - b" rather than "a + -b".
    bool negative = false;
    std::string magnitude;
    bool unit = false;
    const auto& c = t.coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class a = abs(c.re());
      unit = a == 1;
      magnitude = a.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class a = abs(c.im());
      magnitude = a == 1 ? "i" : a.get_str() + "*i";
    } else {
      magnitude = c.to_string();
    }

    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }

    std::string body;
    if (mono.empty()) {
      body = magnitude;
    } else if (unit) {
      body = mono;
    } else {
      body = magnitude + "*" + mono;
    }

    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

}  // namespace jc
