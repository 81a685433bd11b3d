#include "field.hpp"

#include <algorithm>

#include "error.hpp"

namespace bookramsey {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) throw ArgumentError(std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw ArgumentError(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), k};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = static_cast<std::uint32_t>(
            (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of t with c_0 most significant.
Poly monic_from_rank(std::uint64_t t, std::uint32_t d, std::uint32_t p) {
  Poly c(d + 1, 0);
  c[d] = 1;
  for (std::uint32_t i = d; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(t % p);
    t /= p;
  }
  return c;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) throw ArgumentError("polynomial must be monic of degree >= 1");
  const std::uint32_t k = static_cast<std::uint32_t>(monic.size() - 1);
  Poly f(monic.begin(), monic.end());
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g = monic_from_rank(t, d, p);
      Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  if (k < 1) throw ArgumentError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ArgumentError("field order exceeds 2^20");
  }
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly c = monic_from_rank(t, k, p);
    if (is_irreducible(p, c)) return FiniteField(p, std::move(c));
  }
  throw ArgumentError("no irreducible polynomial found");  // unreachable for valid p, k
}

FiniteField FiniteField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  for (auto c : modulus)
    if (c >= p) throw ArgumentError("modulus coefficient out of range");
  if (!is_irreducible(p, modulus)) throw ArgumentError("modulus is not irreducible");
  if (ipow(p, static_cast<std::uint32_t>(modulus.size() - 1)) > kMaxOrder) {
    throw ArgumentError("field order exceeds 2^20");
  }
  return FiniteField(p, std::move(modulus));
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(ipow(p_, k_));
  // Find a generator of the multiplicative group by trial and tabulate powers.
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_ || q_ == 2; ++g) {
    exp_.assign(q_ - 1, 0);
    std::uint32_t x = 1;
    bool generator = true;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      if (i > 0 && x == 1) {
        generator = false;
        break;
      }
      exp_[i] = x;
      x = mul_poly(x, g);
    }
    if (generator && x == 1) break;
  }
  for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

std::vector<std::uint32_t> FiniteField::coefficients(std::uint32_t a) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t FiniteField::from_coefficients(std::span<const std::uint32_t> c) const {
  std::uint32_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i] % p_;
  return a;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul_poly(std::uint32_t a, std::uint32_t b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return from_coefficients(r);
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

QuadraticResidues residues(const FiniteField& f) {
  if (f.size() % 2 == 0) throw ArgumentError("quadratic residues need odd q");
  QuadraticResidues out;
  out.chi.assign(f.size(), -1);
  out.chi[0] = 0;
  std::vector<char> square(f.size(), 0);
  for (std::uint32_t x = 1; x < f.size(); ++x) square[f.mul(x, x)] = 1;
  for (std::uint32_t x = 1; x < f.size(); ++x) {
    if (square[x]) {
      out.residues.push_back(x);
      out.chi[x] = 1;
    } else {
      out.nonresidues.push_back(x);
    }
  }
  return out;
}

bool ResidueDifferenceTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.matches(); });
}

ResidueDifferenceTable residue_difference_counts(const FiniteField& f) {
  if (f.size() % 4 != 1) throw ArgumentError("residue difference counts need q = 1 (mod 4)");
  const auto res = residues(f);
  const auto qq = delta_table(f, res.residues, res.residues);
  const auto nn = delta_table(f, res.nonresidues, res.nonresidues);
  const auto qn = delta_table(f, res.residues, res.nonresidues);
  const std::size_t quarter = (f.size() - 1) / 4;
  ResidueDifferenceTable table{f.size(), {}};
  for (std::uint32_t d = 1; d < f.size(); ++d) {
    const bool in_q = res.chi[d] == 1;
    table.rows.push_back({d, in_q, qq[d], nn[d], qn[d], in_q ? quarter - 1 : quarter,
                          in_q ? quarter : quarter - 1, quarter});
  }
  return table;
}

Graph cayley_two_block(const FiniteField& f, const TwoBlockSets& sets) {
  return two_block_graph(f, sets);
}

Graph cayley_two_block(const CyclicGroup& g, const TwoBlockSets& sets) {
  return two_block_graph(g, sets);
}

TwoBlockSets paley_book_sets(const FiniteField& f) {
  if (f.size() % 4 != 1) throw ArgumentError("Paley-type construction needs q = 1 (mod 4)");
  auto res = residues(f);
  return {res.residues, res.residues, res.nonresidues};
}

Graph paley_graph(const FiniteField& f) {
  if (f.size() % 4 != 1) throw ArgumentError("Paley graph needs q = 1 (mod 4)");
  const auto res = residues(f);
  Graph g(f.size());
  for (std::uint32_t u = 0; u < f.size(); ++u)
    for (auto d : res.residues) {
      const std::uint32_t v = f.add(u, d);
      if (u < v) g.add_edge(u, v);
    }
  return g;
}

Graph paley_book_graph(const FiniteField& f) { return two_block_graph(f, paley_book_sets(f)); }

Graph paley_book_graph(std::uint64_t q) {
  auto pk = factor_prime_power(q);
  if (q % 4 != 1) throw ArgumentError("Paley-type construction needs q = 1 (mod 4), got " + std::to_string(q));
  return paley_book_graph(FiniteField::make(pk.p, pk.k));
}

ConditionReport paley_book_conditions(const FiniteField& f) {
  const std::uint32_t n = (f.size() + 1) / 2;
  return evaluate_two_block_conditions(f, paley_book_sets(f), BookParams(n - 1, n));
}

}  // namespace bookramsey
