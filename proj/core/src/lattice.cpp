#include "ktypes/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ktypes {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw parse_error("bad rational literal: '" + s + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw parse_error("bad rational literal: '" + s + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw parse_error("bad rational literal: '" + s + "'");
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw parse_error("zero denominator: '" + s + "'");
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

std::int64_t rat_floor_i64(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw error("rational out of machine range");
  return f.get_si();
}

std::int64_t rat_ceil_i64(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw error("rational out of machine range");
  return c.get_si();
}

std::int64_t rat_to_i64(const Rat& q) {
  if (!rat_is_integer(q)) throw error("not an integer: " + rat_str(q));
  if (!q.get_num().fits_slong_p()) throw error("rational out of machine range");
  return q.get_num().get_si();
}

Weight Weight::zero(std::size_t ambient) {
  return Weight(std::vector<Rat>(ambient, Rat(0)));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rat& q) { return q == 0; });
}

static void require_same_dim(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim())
    throw dimension_error("ambient dimension mismatch: " +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

Weight Weight::operator+(const Weight& o) const {
  require_same_dim(*this, o);
  std::vector<Rat> r(coords_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
  return Weight(std::move(r));
}

Weight Weight::operator-(const Weight& o) const {
  require_same_dim(*this, o);
  std::vector<Rat> r(coords_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
  return Weight(std::move(r));
}

Weight Weight::operator-() const {
  std::vector<Rat> r(coords_);
  for (auto& q : r) q = -q;
  return Weight(std::move(r));
}

Weight Weight::operator*(const Rat& s) const {
  std::vector<Rat> r(coords_);
  for (auto& q : r) q *= s;
  return Weight(std::move(r));
}

bool Weight::operator<(const Weight& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t i = 0; i < dim(); ++i) {
    int c = cmp(coords_[i], o.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += rat_str(coords_[i]);
  }
  return s;
}

Weight Weight::parse(const std::string& s) {
  std::vector<Rat> coords;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    // allow surrounding spaces
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw parse_error("empty coordinate in '" + s + "'");
    coords.push_back(rat_parse(tok.substr(b, e - b + 1)));
  }
  if (coords.empty()) throw parse_error("no coordinates in '" + s + "'");
  return Weight(std::move(coords));
}

Rat dot(const Weight& a, const Weight& b) {
  require_same_dim(a, b);
  Rat s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rat pair(const Weight& lambda, const Weight& alpha) {
  Rat nn = dot(alpha, alpha);
  if (nn == 0) throw degenerate_root_error("pairing against a zero-norm vector");
  return 2 * dot(lambda, alpha) / nn;
}

Weight reflect(const Weight& lambda, const Weight& alpha) {
  return lambda - alpha * pair(lambda, alpha);
}

SimpleBasis SimpleBasis::checked(std::vector<Weight> simples) {
  SimpleBasis b{std::move(simples)};
  const std::size_t n = b.rank();
  if (n == 0) throw error("empty simple basis");
  // independence: expand_in_basis of each simple against the others fails,
  // equivalently the Gram matrix is nonsingular.
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(b[i], b[j]);
  // determinant by elimination
  Rat det(1);
  {
    auto m = gram;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m[r][col] == 0) continue;
        Rat f = m[r][col] / m[col][col];
        for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      }
    }
  }
  if (det == 0) throw error("simple roots are linearly dependent");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rat cij = pair(b[i], b[j]);
      if (!rat_is_integer(cij) || cij > 0)
        throw error("Cartan pairing (" + std::to_string(i) + "," +
                    std::to_string(j) + ") = " + rat_str(cij) +
                    " is not a nonpositive integer");
    }
  return b;
}

bool is_dominant(const Weight& lambda, const SimpleBasis& basis) {
  for (const Weight& alpha : basis.simples)
    if (pair(lambda, alpha) < 0) return false;
  return true;
}

Weight dominant_representative(const Weight& lambda, const SimpleBasis& basis) {
  Weight w = lambda;
  for (;;) {
    bool moved = false;
    for (const Weight& alpha : basis.simples) {
      if (pair(w, alpha) < 0) {
        w = reflect(w, alpha);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
}

std::optional<std::vector<Rat>> expand_in_basis(const Weight& v,
                                                const std::vector<Weight>& basis) {
  if (basis.empty()) return v.is_zero() ? std::make_optional(std::vector<Rat>{}) : std::nullopt;
  const std::size_t n = basis.size();
  // Solve via the Gram system: if v = Σ c_i b_i then G c = (v·b_j).  The
  // Gram matrix is nonsingular for independent vectors; afterwards verify
  // the reconstruction to reject v outside the span.
  std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
  std::vector<Rat> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = dot(v, basis[i]);
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = dot(basis[i], basis[j]);
  }
  std::vector<Rat> c = solve_linear(std::move(gram), std::move(rhs));
  Weight rec = Weight::zero(v.dim());
  for (std::size_t i = 0; i < n; ++i) rec = rec + basis[i] * c[i];
  if (rec != v) return std::nullopt;
  return c;
}

std::optional<std::vector<Rat>> positive_root_cone_coords(const Weight& v,
                                                          const SimpleBasis& basis) {
  auto c = expand_in_basis(v, basis.simples);
  if (!c) return std::nullopt;
  for (const Rat& q : *c)
    if (q < 0) return std::nullopt;
  return c;
}

bool in_positive_root_cone(const Weight& v, const SimpleBasis& basis) {
  return positive_root_cone_coords(v, basis).has_value();
}

Weight project_trace_zero(const Weight& w) {
  Rat mean = central_component(w);
  std::vector<Rat> r(w.coords());
  for (auto& q : r) q -= mean;
  return Weight(std::move(r));
}

Rat central_component(const Weight& w) {
  Rat s(0);
  for (const Rat& q : w.coords()) s += q;
  return s / Rat(static_cast<long>(w.dim()));
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw error("singular linear system");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

} // namespace ktypes
