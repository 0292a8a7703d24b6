#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jc/forms.hpp"
#include "jc/generators.hpp"
#include "jc/inversion.hpp"
#include "jc/parse.hpp"
#include "support/corpus.hpp"

#include <algorithm>
#include <stop_token>

using namespace jc;
using namespace jc::inv;

namespace {

Polynomial P(const char* text, std::size_t n) { return io::parse_polynomial(text, n); }
PolyMap M(const char* text) { return io::parse_map(text).map; }

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto key = [](const Polynomial& p) { return p.to_string(); };
  auto cmp = [&](const Polynomial& x, const Polynomial& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

}  // namespace

TEST_CASE("term orders") {
  const Monomial x1 = Monomial::variable(4, 0);
  const Monomial x2sq = Monomial::variable(4, 1, 2);
  const Monomial y1cube = Monomial::variable(4, 2, 3);
  CHECK(TermOrder::lex().compare(x1, x2sq) > 0);
  CHECK(TermOrder::grlex().compare(x1, x2sq) < 0);
  CHECK(TermOrder::block(2).compare(x1, y1cube) > 0);
  CHECK(TermOrder::block(2).compare(x1, x2sq) < 0);
  // Multiplicative on a sample.
  const Monomial w = Monomial::variable(4, 3, 2);
  for (const auto& order : {TermOrder::lex(), TermOrder::grlex(), TermOrder::block(2)}) {
    CHECK((order.compare(x1, y1cube) > 0) == (order.compare(x1 * w, y1cube * w) > 0));
  }
}

TEST_CASE("buchberger examples") {
  auto gb = buchberger({P("x1 - 1", 1), P("x1 - 1", 1)}, TermOrder::lex());
  CHECK(gb == std::vector<Polynomial>{P("x1 - 1", 1)});
  // Variables (x1, x2, y1, y2) are x1..x4.
  gb = buchberger({P("x1^2 - x3", 4), P("x2 - x4", 4)}, TermOrder::lex());
  CHECK(same_set(gb, {P("x1^2 - x3", 4), P("x2 - x4", 4)}));
  gb = buchberger({P("x3 - x1 - x2^2", 4), P("x4 - x2", 4)}, TermOrder::lex());
  CHECK(same_set(gb, {P("x1 - x3 + x4^2", 4), P("x2 - x4", 4)}));
}

TEST_CASE("buchberger output is a reduced basis") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<Polynomial> gens;
    for (int k = count(rng); k > 0; --k) gens.push_back(jc::testing::random_polynomial(rng, n, 2, -2, 2, 0.5));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }),
               gens.end());
    if (gens.empty()) continue;
    const TermOrder order = trial % 2 ? TermOrder::grlex() : TermOrder::lex();
    const auto gb = buchberger(gens, order);
    for (const auto& g : gens) CHECK(normal_form(g, gb, order).is_zero());
    CHECK(buchberger(gb, order) == gb);
    for (std::size_t i = 0; i < gb.size(); ++i) {
      const Monomial li = leading_monomial(gb[i], order);
      CHECK(gb[i].coefficient(li).is_one());
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb[j].terms()) CHECK_FALSE(li.divides(t.monomial));
      }
    }
  }
}

TEST_CASE("buchberger honours cancellation") {
  std::stop_source source;
  source.request_stop();
  CHECK_THROWS_AS(buchberger({P("x1^2 - x2", 2), P("x1*x2 - 1", 2)}, TermOrder::lex(), source.get_token()),
                  Cancelled);
}

TEST_CASE("series inverse examples") {
  auto cert = series_inverse(M("n=2; P1 = x1 + x2^3; P2 = x2"));
  CHECK(cert.status == InverseStatus::inverse_found);
  REQUIRE(cert.inverse.has_value());
  CHECK(*cert.inverse == M("n=2; P1 = x1 - x2^3; P2 = x2"));
  CHECK(cert.degree_bound_used == 3);
  CHECK(cert.verified);

  cert = series_inverse(M("n=2; P1 = x1 + x2^2; P2 = x2 + (x1 + x2^2)^3"));
  REQUIRE(cert.inverse.has_value());
  CHECK(*cert.inverse == M("n=2; P1 = x1 - (x2 - x1^3)^2; P2 = x2 - x1^3"));

  cert = series_inverse(M("n=2; P1 = x1 + x1^2; P2 = x2"));
  CHECK(cert.status == InverseStatus::not_polynomial_within_bound);
  CHECK_FALSE(cert.inverse.has_value());
  CHECK(cert.witness.has_value());

  CHECK(series_inverse(M("n=2; P1 = x1^2; P2 = x2")).status == InverseStatus::singular_linear_part);
  CHECK_THROWS_AS(series_inverse(PolyMap::identity(2), 0), std::invalid_argument);
}

TEST_CASE("series inverse of x + x^2 follows the Catalan numbers") {
  // The compositional inverse of x + x^2 is s(y) = sum_k (-1)^k C_k y^{k+1}.
  // Truncating s at degree D leaves G(f(x)) - x = -(-1)^D C_D x^{D+1} + ...
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (long d = 2; d <= 9; ++d) {
    const auto cert = series_inverse(M("n=1; P1 = x1 + x1^2"), d);
    CHECK(cert.status == InverseStatus::not_polynomial_within_bound);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->order() == d + 1);
    const long sign = d % 2 == 0 ? -1 : 1;
    CHECK(cert.witness->coefficient(Monomial::variable(1, 0, static_cast<Monomial::Exponent>(d + 1))) ==
          Coefficient(sign * catalan[d]));
  }
}

TEST_CASE("translation and linear parts") {
  const PolyMap f = M("n=2; P1 = 2*x2 + 3 + x1^2; P2 = x1 - 1");
  const auto cert = series_inverse(f);
  REQUIRE(cert.status == InverseStatus::inverse_found);
  CHECK(verify_inverse(f, *cert.inverse));
  const auto gb = groebner_inverse(f);
  REQUIRE(gb.status == InverseStatus::inverse_found);
  CHECK(*gb.inverse == *cert.inverse);
}

TEST_CASE("groebner inverse examples") {
  auto cert = groebner_inverse(M("n=2; P1 = x1 + x2^2; P2 = x2"));
  CHECK(cert.status == InverseStatus::inverse_found);
  REQUIRE(cert.inverse.has_value());
  CHECK(*cert.inverse == M("n=2; P1 = x1 - x2^2; P2 = x2"));

  cert = groebner_inverse(M("n=2; P1 = x1^2; P2 = x2"));
  CHECK(cert.status == InverseStatus::not_invertible_groebner);
  REQUIRE(cert.witness.has_value());
  CHECK(*cert.witness == P("x1^2 - x3", 4));
  CHECK(cert.witness_variables == std::vector<std::string>{"x1", "x2", "y1", "y2"});

  cert = groebner_inverse(PolyMap::identity(3));
  REQUIRE(cert.inverse.has_value());
  CHECK(*cert.inverse == PolyMap::identity(3));
}

TEST_CASE("verify inverse examples") {
  const PolyMap f = M("n=2; P1 = x1 + x2^3; P2 = x2");
  CHECK(verify_inverse(f, M("n=2; P1 = x1 - x2^3; P2 = x2")));
  CHECK(verify_inverse(PolyMap::identity(2), PolyMap::identity(2)));
  CHECK_FALSE(verify_inverse(f, M("n=2; P1 = x1 + x2^3; P2 = x2")));
  CHECK_THROWS_AS(verify_inverse(f, PolyMap::identity(3)), std::invalid_argument);
}

TEST_CASE("engines agree on tame automorphisms") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto pair = jc::testing::random_tame(rng, n);
    const auto series = series_inverse(pair.map);
    const auto groebner = groebner_inverse(pair.map);
    REQUIRE(series.status == InverseStatus::inverse_found);
    REQUIRE(groebner.status == InverseStatus::inverse_found);
    CHECK(*series.inverse == pair.inverse);
    CHECK(*groebner.inverse == pair.inverse);
    CHECK(series.inverse->degree() <= inverse_degree_bound(pair.map));
    CHECK(forms::check_keller(pair.map).is_keller);
  }
}

TEST_CASE("gaussian coefficients") {
  const PolyMap f = M("n=2; P1 = x1 - i*x2^3; P2 = x2 + (1+i)");
  const auto series = series_inverse(f);
  const auto groebner = groebner_inverse(f);
  REQUIRE(series.inverse.has_value());
  REQUIRE(groebner.inverse.has_value());
  CHECK(*series.inverse == *groebner.inverse);
  CHECK(verify_inverse(f, *series.inverse));
}

TEST_CASE("D-maps are invertible in small dimension") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const auto spec = forms::random_dmap_spec(2, rng);
    const PolyMap f = forms::cubic_linear_map(spec);
    const auto series = series_inverse(f);
    REQUIRE(series.inverse.has_value());
    CHECK(verify_inverse(f, *series.inverse));
  }
}

TEST_CASE("degree bound") {
  CHECK(inverse_degree_bound(M("n=1; P1 = x1 + x1^5")) == 1);
  CHECK(inverse_degree_bound(M("n=3; P1 = x1 + x2^3; P2 = x2; P3 = x3")) == 9);
  CHECK(inverse_degree_bound(PolyMap::identity(4)) == 1);
}
