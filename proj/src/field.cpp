#include "cohom/field.hpp"

#include "cohom/linalg.hpp"

namespace cohom {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational RationalSampler::next() {
  std::uniform_int_distribution<int> num(-height_, height_);
  std::uniform_int_distribution<int> den(1, height_);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational q = next();
    if (sgn(q) != 0) return q;
  }
}

std::vector<Rational> RationalSampler::vector(int n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = next();
  return v;
}

int bareiss_rank(const Dense<Rational>& m) {
  // Clear denominators row by row, then eliminate without fractions.
  int nr = m.r, nc = m.c;
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (int i = 0; i < nr; ++i) {
    Integer l = 1;
    for (int j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < nc; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int p = -1;
    for (int i = row; i < nr; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int i = row + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        a[i][j] = a[i][j] * a[row][col] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

}  // namespace cohom
