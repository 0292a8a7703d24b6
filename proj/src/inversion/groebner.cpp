#include "jc/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace jc::inv {

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last) {
  for (std::size_t i = first; i < last; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grlex_range(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last) {
  if (auto c = a.degree(first, last) <=> b.degree(first, last); c != 0) return c;
  return lex_range(a, b, first, last);
}

}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::lex:
      return lex_range(a, b, 0, n);
    case Kind::grlex:
      return grlex_range(a, b, 0, n);
    case Kind::block: {
      const std::size_t k = std::min(first_block_, n);
      if (auto c = grlex_range(a, b, 0, k); c != 0) return c;
      return grlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

namespace {

// Terms sorted strictly descending under the working order.
struct OrderedPoly {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().monomial; }
  const Coefficient& lc() const { return terms.front().coeff; }
};

OrderedPoly to_ordered(const Polynomial& p, const TermOrder& order) {
  OrderedPoly out;
  out.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(out.terms.begin(), out.terms.end(),
            [&order](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return out;
}

Polynomial to_polynomial(std::size_t nvars, const OrderedPoly& p) {
  return Polynomial::from_terms(nvars, p.terms);
}

void make_monic(OrderedPoly& p) {
  if (p.empty() || p.lc().is_one()) return;
  const Coefficient inv = Coefficient(1) / p.lc();
  for (auto& t : p.terms) t.coeff *= inv;
}

// h[from..] - c * m * g, where the leading product cancels h[from] exactly
// when cancel_lead is set.
std::vector<Term> subtract_multiple(const std::vector<Term>& h, std::size_t from, const Coefficient& c,
                                    const Monomial& m, const OrderedPoly& g, bool cancel_lead,
                                    const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(h.size() - from + g.terms.size());
  std::size_t i = from;
  std::size_t j = 0;
  if (cancel_lead) {
    ++i;
    ++j;
  }
  while (i < h.size() && j < g.terms.size()) {
    Monomial gm = m * g.terms[j].monomial;
    auto cmp = order.compare(h[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -(c * g.terms[j].coeff)});
      ++j;
    } else {
      Coefficient s = h[i].coeff - c * g.terms[j].coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  for (; j < g.terms.size(); ++j) out.push_back(Term{m * g.terms[j].monomial, -(c * g.terms[j].coeff)});
  return out;
}

OrderedPoly reduce(OrderedPoly h, const std::vector<OrderedPoly>& basis, const TermOrder& order,
                   std::size_t skip = static_cast<std::size_t>(-1)) {
  OrderedPoly remainder;
  std::size_t pos = 0;
  while (pos < h.terms.size()) {
    const Term& lt = h.terms[pos];
    const OrderedPoly* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].lm().divides(lt.monomial)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.terms.push_back(lt);
      ++pos;
      continue;
    }
    const Coefficient c = lt.coeff / divisor->lc();
    const Monomial m = lt.monomial / divisor->lm();
    h.terms = subtract_multiple(h.terms, pos, c, m, *divisor, true, order);
    pos = 0;
  }
  return remainder;
}

OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const TermOrder& order) {
  const Monomial l = lcm(f.lm(), g.lm());
  const Monomial mf = l / f.lm();
  const Monomial mg = l / g.lm();
  // f, g are monic: S = mf*f - mg*g with the leading terms cancelling.
  OrderedPoly scaled;
  scaled.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) scaled.terms.push_back(Term{mf * t.monomial, t.coeff});
  OrderedPoly s;
  s.terms = subtract_multiple(scaled.terms, 0, Coefficient(1), mg, g, true, order);
  return s;
}

struct PairKey {
  std::uint64_t lcm_degree;
  Monomial lcm;
  std::size_t j;
  std::size_t i;
};

}  // namespace

Monomial leading_monomial(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const Monomial* best = &p.terms()[0].monomial;
  for (const auto& t : p.terms()) {
    if (order.compare(t.monomial, *best) > 0) best = &t.monomial;
  }
  return *best;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& order) {
  std::vector<OrderedPoly> ordered;
  ordered.reserve(basis.size());
  for (const auto& b : basis) {
    if (!b.is_zero()) ordered.push_back(to_ordered(b, order));
  }
  return to_polynomial(p.nvars(), reduce(to_ordered(p, order), ordered, order));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                                   std::stop_token stop) {
  if (generators.empty()) return {};
  const std::size_t nvars = generators[0].nvars();
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("generators live in different rings");
  }

  auto pair_less = [&order](const PairKey& a, const PairKey& b) {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<PairKey, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<OrderedPoly> basis;

  auto add = [&](OrderedPoly p) {
    make_monic(p);
    const std::size_t j = basis.size();
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(basis[i].lm(), p.lm());
      queue.insert(PairKey{l.degree(), std::move(l), j, i});
      pending.emplace(i, j);
    }
    basis.push_back(std::move(p));
  };

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    OrderedPoly r = reduce(to_ordered(g, order), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  while (!queue.empty()) {
    if (stop.stop_requested()) throw Cancelled();
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({key.i, key.j});
    const OrderedPoly& f = basis[key.i];
    const OrderedPoly& g = basis[key.j];
    if (f.lm().coprime(g.lm())) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == key.i || k == key.j) continue;
      if (!basis[k].lm().divides(key.lcm)) continue;
      auto ik = std::minmax(key.i, k);
      auto jk = std::minmax(key.j, k);
      chain = !pending.contains({ik.first, ik.second}) && !pending.contains({jk.first, jk.second});
    }
    if (chain) continue;

    OrderedPoly r = reduce(s_polynomial(f, g, order), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  // Minimalize, then tail-reduce each element by the others.
  std::vector<OrderedPoly> sorted = std::move(basis);
  std::sort(sorted.begin(), sorted.end(),
            [&order](const OrderedPoly& a, const OrderedPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  std::vector<OrderedPoly> minimal;
  for (auto& p : sorted) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&p](const OrderedPoly& q) { return q.lm().divides(p.lm()); });
    if (!redundant) minimal.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    if (stop.stop_requested()) throw Cancelled();
    OrderedPoly tail;
    tail.terms.assign(minimal[k].terms.begin() + 1, minimal[k].terms.end());
    OrderedPoly reduced = reduce(std::move(tail), minimal, order, k);
    reduced.terms.insert(reduced.terms.begin(), minimal[k].terms.front());
    minimal[k] = std::move(reduced);
  }

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const auto& p : minimal) out.push_back(to_polynomial(nvars, p));
  return out;
}

}  // namespace jc::inv
