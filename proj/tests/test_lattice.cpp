#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "ktypes/lattice.hpp"
#include "ktypes/rootsys.hpp"

using namespace ktypes;

namespace {

Weight w(std::vector<long> coords) {
  std::vector<Rat> c;
  for (long v : coords) c.emplace_back(v);
  return Weight(std::move(c));
}

// Independent oracle: the dominant orbit element by exhaustive reflection
// closure (no greedy descent involved).
Weight orbit_scan_dominant(const Weight& lambda, const SimpleBasis& basis) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight cur = queue.back();
    queue.pop_back();
    for (const Weight& alpha : basis.simples) {
      Weight img = reflect(cur, alpha);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  Weight dominant = lambda;
  int found = 0;
  for (const Weight& v : seen)
    if (is_dominant(v, basis)) {
      dominant = v;
      ++found;
    }
  REQUIRE(found == 1);
  return dominant;
}

std::mt19937 rng(20240811);

Rat random_rat() {
  std::uniform_int_distribution<int> num(-6, 6);
  const int dens[] = {1, 2, 3, 6};
  std::uniform_int_distribution<int> den_ix(0, 3);
  Rat q(num(rng), dens[den_ix(rng)]);
  q.canonicalize();
  return q;
}

Weight random_weight(std::size_t dim) {
  std::vector<Rat> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(random_rat());
  return Weight(std::move(c));
}

Int cartan_det(const SimpleBasis& basis) {
  const std::size_t n = basis.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = pair(basis[j], basis[i]);
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    REQUIRE(piv < n);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  REQUIRE(rat_is_integer(det));
  Int d = det.get_num();
  return d < 0 ? Int(-d) : d;
}

Int den_lcm(const Weight& v) {
  Int l(1);
  for (const Rat& q : v.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

} // namespace

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(rat_str(rat_parse("3/2")) == "3/2");
  CHECK(rat_str(rat_parse("-7")) == "-7");
  CHECK(rat_parse("4/6") == Rat(2, 3));
  CHECK_THROWS_AS(rat_parse("1/0"), parse_error);
  CHECK_THROWS_AS(rat_parse("a"), parse_error);
  CHECK_THROWS_AS(rat_parse("1.5"), parse_error);
  CHECK(Weight::parse("1,-1/2, 0").str() == "1,-1/2,0");
}

TEST_CASE("coroot pairing basics") {
  SimpleBasis b3 = reference_simples(Type::B, 3);
  // direct dot-product evaluation in the B3 realization
  CHECK(pair(w({1, -1, 0}), w({0, 1, -1})) == Rat(-1));
  CHECK(pair(Weight::zero(3), w({0, 1, -1})) == 0);
  CHECK_THROWS_AS(pair(w({1, 0, 0}), Weight::zero(3)), degenerate_root_error);
  CHECK_THROWS_AS(pair(w({1, 0}), w({1, 0, 0})), dimension_error);

  // fundamental weights pair to δ_ij against their own simples
  for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
    int rank = t == Type::D ? 4 : 3;
    SimpleBasis basis = reference_simples(t, rank);
    auto fw = fundamental_weights_for(basis);
    for (std::size_t i = 0; i < fw.size(); ++i)
      for (std::size_t j = 0; j < basis.rank(); ++j)
        CHECK(pair(fw[i], basis[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("dominance tests") {
  SimpleBasis a2 = reference_simples(Type::A, 2);
  CHECK(is_dominant(w({1, 0, -1}), a2));  // pairings (1,1)
  auto fw = fundamental_weights_for(a2);
  CHECK_FALSE(is_dominant(-fw[0], a2));
  // rho pairs to 1 with every simple root
  Weight rho = half_sum(reference_positive_roots(Type::A, 2), 3);
  CHECK(is_dominant(rho, a2));
  for (const Weight& alpha : a2.simples) CHECK(pair(rho, alpha) == 1);
}

TEST_CASE("dominant representative agrees with the orbit scan") {
  SimpleBasis a2 = reference_simples(Type::A, 2);
  CHECK(dominant_representative(w({1, 0, -1}), a2) == w({1, 0, -1}));  // already dominant
  CHECK(dominant_representative(w({-1, 0, 1}), a2) == w({1, 0, -1}));  // longest element

  SimpleBasis b2 = reference_simples(Type::B, 2);
  Weight v = w({-1, -2});
  Weight greedy = dominant_representative(v, b2);
  CHECK(greedy == w({2, 1}));                      // frozen from the 8-element orbit scan
  CHECK(greedy == orbit_scan_dominant(v, b2));

  for (int iter = 0; iter < 40; ++iter) {
    for (Type t : {Type::A, Type::B, Type::C}) {
      SimpleBasis basis = reference_simples(t, 3);
      Weight x = random_weight(t == Type::A ? 4 : 3);
      CHECK(dominant_representative(x, basis) == orbit_scan_dominant(x, basis));
    }
  }
}

TEST_CASE("dominant representative is idempotent and orbit-invariant") {
  SimpleBasis c3 = reference_simples(Type::C, 3);
  for (int iter = 0; iter < 60; ++iter) {
    Weight x = random_weight(3);
    Weight dom = dominant_representative(x, c3);
    CHECK(dominant_representative(dom, c3) == dom);
    Weight moved = x;
    std::uniform_int_distribution<int> pick(0, 2);
    for (int k = 0; k < 4; ++k) moved = reflect(moved, c3[pick(rng)]);
    CHECK(dominant_representative(moved, c3) == dom);
  }
}

TEST_CASE("reflection antisymmetry of the pairing") {
  for (int iter = 0; iter < 60; ++iter) {
    SimpleBasis b3 = reference_simples(Type::B, 3);
    Weight x = random_weight(3);
    for (const Weight& alpha : b3.simples)
      CHECK(pair(reflect(x, alpha), alpha) == -pair(x, alpha));
  }
}

TEST_CASE("positive root cone membership") {
  SimpleBasis a2 = reference_simples(Type::A, 2);
  Weight a1 = a2[0], al2 = a2[1];
  CHECK(in_positive_root_cone(a1 + al2 * Rat(2), a2));
  CHECK_FALSE(in_positive_root_cone(-a1, a2));

  auto coords = positive_root_cone_coords(w({1, 0, -1}), a2);
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == 1);
  CHECK((*coords)[1] == 1);

  // outside the span
  SimpleBasis b3 = reference_simples(Type::B, 3);
  SimpleBasis sub{{b3[0], b3[1]}};
  CHECK_FALSE(in_positive_root_cone(w({0, 0, 1}), sub));

  // cone closure under addition
  auto rat = [](int num, int den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
  };
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> c(0, 5);
    Weight v1 = b3[0] * Rat(c(rng)) + b3[1] * Rat(c(rng)) + b3[2] * rat(c(rng), 2);
    Weight v2 = b3[0] * rat(c(rng), 3) + b3[1] * Rat(c(rng)) + b3[2] * Rat(c(rng));
    REQUIRE(in_positive_root_cone(v1, b3));
    REQUIRE(in_positive_root_cone(v2, b3));
    CHECK(in_positive_root_cone(v1 + v2, b3));
  }
}

TEST_CASE("denominator growth stays within lcm of inputs times the Cartan determinant") {
  for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
    int rank = t == Type::D ? 4 : 3;
    SimpleBasis basis = reference_simples(t, rank);
    Int detc = cartan_det(basis);
    std::size_t dim = t == Type::A ? rank + 1 : rank;
    for (int iter = 0; iter < 30; ++iter) {
      Weight x = random_weight(dim);
      Int budget = den_lcm(x) * detc;
      for (const Weight& alpha : basis.simples) {
        Rat p = pair(x, alpha);
        CHECK(budget % p.get_den() == 0);
        CHECK(budget % den_lcm(reflect(x, alpha)) == 0);
      }
      CHECK(budget % den_lcm(dominant_representative(x, basis)) == 0);
      auto fw = fundamental_weights_for(basis);
      for (const Weight& xi : fw) CHECK(detc % den_lcm(xi) == 0);
    }
  }
}

TEST_CASE("trace-zero projection strips exactly the central component") {
  Weight x = w({3, 1, -1});
  CHECK(central_component(x) == 1);
  Weight proj = project_trace_zero(x);
  CHECK(central_component(proj) == 0);
  CHECK(proj == w({2, 0, -2}));
  // pairings against roots ignore the central direction
  SimpleBasis a2 = reference_simples(Type::A, 2);
  for (const Weight& alpha : a2.simples) CHECK(pair(x, alpha) == pair(proj, alpha));
}

TEST_CASE("simple basis validation") {
  CHECK_THROWS_AS(SimpleBasis::checked({w({1, 0}), w({2, 0})}), ktypes::error);
  CHECK_THROWS_AS(SimpleBasis::checked({w({1, 0}), w({1, 1})}), ktypes::error);
  CHECK_NOTHROW(SimpleBasis::checked({w({1, -1}), w({0, 1})}));
}
