#include "jc/poly_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace jc {

PolyMap::PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  const std::size_t n = components_.size();
  for (const auto& p : components_) {
    if (p.nvars() != n) {
      throw std::invalid_argument("map of arity " + std::to_string(n) + " has a component in " +
                                  std::to_string(p.nvars()) + " variables");
    }
  }
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
  return PolyMap(std::move(comps));
}

long PolyMap::degree() const {
  long d = -1;
  for (const auto& p : components_) d = std::max(d, p.degree());
  return d;
}

Domain PolyMap::domain() const {
  for (const auto& p : components_) {
    if (p.domain() == Domain::gaussian) return Domain::gaussian;
  }
  return Domain::rational;
}

std::vector<Coefficient> PolyMap::evaluate(std::span<const Coefficient> point) const {
  std::vector<Coefficient> out;
  out.reserve(components_.size());
  for (const auto& p : components_) out.push_back(p.evaluate(point));
  return out;
}

std::string PolyMap::to_string(const VariableNamer& name) const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i != 0) out += ", ";
    out += components_[i].to_string(name);
  }
  return out + ")";
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (f.arity() != g.arity()) {
    throw std::invalid_argument("cannot compose maps of arity " + std::to_string(f.arity()) + " and " +
                                std::to_string(g.arity()));
  }
  std::vector<Polynomial> comps;
  comps.reserve(f.arity());
  for (const auto& p : f.components()) comps.push_back(p.substitute(g.components()));
  return PolyMap(std::move(comps));
}

PolyMatrix jacobian(std::span<const Polynomial> components) {
  const std::size_t nvars = components.empty() ? 0 : components[0].nvars();
  PolyMatrix j(components.size(), nvars, nvars);
  for (std::size_t r = 0; r < components.size(); ++r) {
    for (std::size_t c = 0; c < nvars; ++c) j.set(r, c, components[r].derivative(c));
  }
  return j;
}

PolyMatrix jacobian(const PolyMap& f) {
  if (f.arity() == 0) return PolyMatrix(0, 0, 0);
  return jacobian(f.components());
}

}  // namespace jc
