// Copyright 2026 The cotsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cotsum/specmat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cotsum {

SquareMatrix::SquareMatrix(int n) : n_(n) {
  require(n >= 1, ErrorCode::BadDimension, "matrix dimension must be >= 1");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GaussianRational SquareMatrix::trace() const {
  GaussianRational acc;
  for (int i = 0; i < n_; ++i) acc += (*this)(i, i);
  return acc;
}

bool SquareMatrix::is_self_adjoint() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      if (!((*this)(j, i) == (*this)(i, j).conj())) return false;
  return true;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require(a.n_ == b.n_, ErrorCode::BadDimension, "matrix dimensions differ");
  SquareMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  require(a.n_ == b.n_, ErrorCode::BadDimension, "matrix dimensions differ");
  SquareMatrix c(a);
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

SquareMatrix build_J(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 1;
  return m;
}

SquareMatrix build_B(int n) { return build_C(n, Rational(0)); }

SquareMatrix build_C(int n, const Rational& a) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = GaussianRational(a, i < j ? Rational(1) : (i > j ? Rational(-1) : Rational(0)));
  return m;
}

namespace {

// Matrix over Z[i]; exact powers of a rational matrix are computed on the
// common-denominator scaling, which avoids gcd work in the inner loops.
class GaussianIntMatrix {
 public:
  explicit GaussianIntMatrix(int n)
      : n_(n), re_(static_cast<std::size_t>(n * n)), im_(static_cast<std::size_t>(n * n)) {}

  // Returns D * m and sets `scale` to D, the lcm of all entry denominators.
  static GaussianIntMatrix scaled(const SquareMatrix& m, Integer& scale) {
    const int n = m.dim();
    scale = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).re().raw().get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).im().raw().get_den_mpz_t());
      }
    GaussianIntMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::size_t k = out.index(i, j);
        out.re_[k] = m(i, j).re().numerator() * (scale / m(i, j).re().denominator());
        out.im_[k] = m(i, j).im().numerator() * (scale / m(i, j).im().denominator());
      }
    return out;
  }

  int dim() const { return n_; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }
  Integer& re(int i, int j) { return re_[index(i, j)]; }
  Integer& im(int i, int j) { return im_[index(i, j)]; }
  const Integer& re(int i, int j) const { return re_[index(i, j)]; }
  const Integer& im(int i, int j) const { return im_[index(i, j)]; }

  GaussianIntMatrix operator*(const GaussianIntMatrix& b) const {
    GaussianIntMatrix c(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Integer& ar = re(i, k);
        const Integer& ai = im(i, k);
        const bool ar_zero = sgn(ar) == 0;
        const bool ai_zero = sgn(ai) == 0;
        if (ar_zero && ai_zero) continue;
        for (int j = 0; j < n_; ++j) {
          mpz_ptr cr = c.re(i, j).get_mpz_t();
          mpz_ptr ci = c.im(i, j).get_mpz_t();
          mpz_srcptr br = b.re(k, j).get_mpz_t();
          mpz_srcptr bi = b.im(k, j).get_mpz_t();
          if (!ar_zero) {
            mpz_addmul(cr, ar.get_mpz_t(), br);
            mpz_addmul(ci, ar.get_mpz_t(), bi);
          }
          if (!ai_zero) {
            mpz_submul(cr, ai.get_mpz_t(), bi);
            mpz_addmul(ci, ai.get_mpz_t(), br);
          }
        }
      }
    return c;
  }

  // Tr(this * b) without forming the product.
  std::pair<Integer, Integer> trace_of_product(const GaussianIntMatrix& b) const {
    Integer tr_re = 0;
    Integer tr_im = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        mpz_addmul(tr_re.get_mpz_t(), re(i, j).get_mpz_t(), b.re(j, i).get_mpz_t());
        mpz_submul(tr_re.get_mpz_t(), im(i, j).get_mpz_t(), b.im(j, i).get_mpz_t());
        mpz_addmul(tr_im.get_mpz_t(), re(i, j).get_mpz_t(), b.im(j, i).get_mpz_t());
        mpz_addmul(tr_im.get_mpz_t(), im(i, j).get_mpz_t(), b.re(j, i).get_mpz_t());
      }
    return {tr_re, tr_im};
  }

  std::pair<Integer, Integer> trace() const {
    Integer tr_re = 0;
    Integer tr_im = 0;
    for (int i = 0; i < n_; ++i) {
      tr_re += re(i, i);
      tr_im += im(i, i);
    }
    return {tr_re, tr_im};
  }

  Integer entry_sum_re() const {
    Integer acc = 0;
    for (const Integer& v : re_) acc += v;
    return acc;
  }

  Integer entry_sum_im() const {
    Integer acc = 0;
    for (const Integer& v : im_) acc += v;
    return acc;
  }

 private:
  int n_;
  std::vector<Integer> re_;
  std::vector<Integer> im_;
};

Rational real_trace(const std::pair<Integer, Integer>& tr, const Integer& denominator, const char* context) {
  if (sgn(tr.second) != 0) raise(ErrorCode::NonRealValue, std::string(context) + ": trace has nonzero imaginary part");
  return Rational(tr.first, denominator);
}

Integer power_of(const Integer& base, int exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

GaussianIntMatrix int_power(const GaussianIntMatrix& base, int exponent) {
  GaussianIntMatrix result = base;
  for (int e = 1; e < exponent; ++e) result = result * base;
  return result;
}

}  // namespace

std::vector<Rational> trace_powers(const SquareMatrix& m, int max_exponent) {
  require(max_exponent >= 0, ErrorCode::InvalidArgument, "trace exponent must be >= 0");
  Integer scale;
  const GaussianIntMatrix base = GaussianIntMatrix::scaled(m, scale);
  const int half = (max_exponent + 1) / 2;
  std::vector<GaussianIntMatrix> powers;  // powers[k] = base^(k+1)
  if (half >= 1) powers.push_back(base);
  for (int k = 2; k <= half; ++k) powers.push_back(powers.back() * base);

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_exponent) + 1);
  out.emplace_back(m.dim());
  for (int e = 1; e <= max_exponent; ++e) {
    const int a = (e + 1) / 2;
    const int b = e / 2;
    const auto tr = b == 0 ? powers[static_cast<std::size_t>(a - 1)].trace()
                           : powers[static_cast<std::size_t>(a - 1)].trace_of_product(powers[static_cast<std::size_t>(b - 1)]);
    out.push_back(real_trace(tr, power_of(scale, e), "trace_power"));
  }
  return out;
}

Rational trace_power(const SquareMatrix& m, int exponent) {
  require(exponent >= 0, ErrorCode::InvalidArgument, "trace exponent must be >= 0");
  if (exponent == 0) return Rational(m.dim());
  Integer scale;
  const GaussianIntMatrix base = GaussianIntMatrix::scaled(m, scale);
  const int a = (exponent + 1) / 2;
  const int b = exponent / 2;
  const GaussianIntMatrix pa = int_power(base, a);
  const auto tr = b == 0 ? pa.trace() : (b == a ? pa.trace_of_product(pa) : pa.trace_of_product(int_power(base, b)));
  return real_trace(tr, power_of(scale, exponent), "trace_power");
}

namespace {

void check_word(int n, const Word& word) {
  require(n >= 1, ErrorCode::BadDimension, "mixed_moment: n must be >= 1");
  require(!word.empty(), ErrorCode::InvalidArgument, "mixed_moment: empty word");
  for (const auto& [letter, exponent] : word)
    require(exponent >= 1, ErrorCode::InvalidArgument, "mixed_moment: exponents must be >= 1");
}

Word merged(Word word) {
  Word out;
  for (const auto& part : word) {
    if (!out.empty() && out.back().first == part.first)
      out.back().second += part.second;
    else
      out.push_back(part);
  }
  return out;
}

}  // namespace

Rational mixed_moment(int n, const Word& word) {
  check_word(n, word);
  Integer unit;
  const GaussianIntMatrix j = GaussianIntMatrix::scaled(build_J(n), unit);
  const GaussianIntMatrix b = GaussianIntMatrix::scaled(build_B(n), unit);
  GaussianIntMatrix product = int_power(word.front().first == Letter::J ? j : b, word.front().second);
  for (std::size_t idx = 1; idx < word.size(); ++idx)
    product = product * int_power(word[idx].first == Letter::J ? j : b, word[idx].second);
  return real_trace(product.trace(), Integer(1), "mixed_moment");
}

Rational state_moment(int n, int l) {
  require(n >= 1, ErrorCode::BadDimension, "state_moment: n must be >= 1");
  require(l >= 0, ErrorCode::InvalidArgument, "state_moment: exponent must be >= 0");
  if (l == 0) return Rational(1);
  Integer unit;
  const GaussianIntMatrix power = int_power(GaussianIntMatrix::scaled(build_B(n), unit), l);
  if (sgn(power.entry_sum_im()) != 0) raise(ErrorCode::NonRealValue, "state_moment: complex entry sum");
  return Rational(power.entry_sum_re(), Integer(n));
}

Rational mixed_moment_factorized(int n, const Word& word) {
  check_word(n, word);
  Word w = merged(word);
  if (w.size() > 1 && w.front().first == w.back().first) {
    w.front().second += w.back().second;
    w.pop_back();
  }
  if (w.size() == 1) {
    if (w.front().first == Letter::J) return Rational(power_of(Integer(n), w.front().second));
    return trace_power(build_B(n), w.front().second);
  }
  if (w.front().first == Letter::B) std::rotate(w.begin(), w.begin() + 1, w.end());
  int j_total = 0;
  Rational product(1);
  for (const auto& [letter, exponent] : w) {
    if (letter == Letter::J)
      j_total += exponent;
    else
      product *= state_moment(n, exponent);
  }
  return Rational(power_of(Integer(n), j_total)) * product;
}

CharPolyMethod parse_charpoly_method(std::string_view name) {
  if (name == "recurrence") return CharPolyMethod::Recurrence;
  if (name == "closed") return CharPolyMethod::Closed;
  if (name == "coeff_formula" || name == "coeff-formula") return CharPolyMethod::CoeffFormula;
  raise(ErrorCode::InvalidArgument, "unknown characteristic polynomial method '" + std::string(name) + "'");
}

RationalPoly CharPoly::real_poly() const {
  return poly.map([](const GaussianRational& c) { return c.real_value("charpoly"); });
}

namespace {

// chi_0 = 1, chi_1 = lambda - a,
// chi_n = (2 lambda - 2a + w + conj w) chi_{n-1} - (lambda - a + w)(lambda - a + conj w) chi_{n-2}
GaussianPoly charpoly_recurrence(int n, const Rational& a) {
  const GaussianRational w(a, 1);
  const GaussianRational ga(a);
  const GaussianPoly lambda = GaussianPoly::x();
  const GaussianPoly first = lambda * GaussianRational(2) + GaussianPoly::constant(w + w.conj() - ga * GaussianRational(2));
  const GaussianPoly second = (lambda + GaussianPoly::constant(w - ga)) * (lambda + GaussianPoly::constant(w.conj() - ga));
  GaussianPoly prev = GaussianPoly::constant(1);
  GaussianPoly cur = lambda - GaussianPoly::constant(ga);
  for (int k = 2; k <= n; ++k) {
    GaussianPoly next = first * cur - second * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ((a + i)(lambda - i)^n - (a - i)(lambda + i)^n) / (2i)
GaussianPoly charpoly_closed(int n, const Rational& a) {
  const GaussianRational i = GaussianRational::i();
  const GaussianPoly lm = GaussianPoly(std::vector<GaussianRational>{-i, 1}).pow(static_cast<unsigned>(n));
  const GaussianPoly lp = GaussianPoly(std::vector<GaussianRational>{i, 1}).pow(static_cast<unsigned>(n));
  GaussianPoly out = lm * GaussianRational(a, 1) - lp * GaussianRational(a, -1);
  out *= GaussianRational(1) / GaussianRational(0, 2);
  return out;
}

// c_{n-k} = binom(n,k) (-1)^(k/2) for even k, a binom(n,k) (-1)^((k+1)/2) for odd k
GaussianPoly charpoly_coefficients(int n, const Rational& a) {
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational c(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    if (k % 2 == 0) {
      if ((k / 2) % 2 == 1) c = -c;
    } else {
      c *= a;
      if (((k + 1) / 2) % 2 == 1) c = -c;
    }
    coeffs[static_cast<std::size_t>(n - k)] = c;
  }
  return GaussianPoly(std::move(coeffs));
}

}  // namespace

CharPoly charpoly(int n, const Rational& a, CharPolyMethod method) {
  require(n >= 1, ErrorCode::BadDimension, "charpoly: n must be >= 1");
  CharPoly out;
  out.n = n;
  out.a = a;
  switch (method) {
    case CharPolyMethod::Recurrence: out.poly = charpoly_recurrence(n, a); break;
    case CharPolyMethod::Closed: out.poly = charpoly_closed(n, a); break;
    case CharPolyMethod::CoeffFormula: out.poly = charpoly_coefficients(n, a); break;
  }
  return out;
}

std::vector<double> eigenvalues_float(int n, double alpha) {
  require(n >= 1, ErrorCode::BadDimension, "eigenvalues_float: n must be >= 1");
  if (std::abs(std::sin(alpha)) < 1e-12) raise(ErrorCode::SingularAlpha, "alpha is a multiple of pi");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = (alpha + k * std::numbers::pi) / n;
    out.push_back(std::cos(theta) / std::sin(theta));
  }
  return out;
}

Rational elementary_symmetric(int n, const Rational& a, int k) {
  require(n >= 1, ErrorCode::BadDimension, "elementary_symmetric: n must be >= 1");
  if (k < 1 || k > n) raise(ErrorCode::BadK, "elementary_symmetric: k must lie in [1, n]");
  Rational closed(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
  if (k % 2 == 0) {
    if ((k / 2) % 2 == 1) closed = -closed;
  } else {
    closed *= a;
    if (((k - 1) / 2) % 2 == 1) closed = -closed;
  }
  Rational from_poly = charpoly(n, a, CharPolyMethod::Recurrence).poly.coefficient(static_cast<std::size_t>(n - k)).real_value("elementary_symmetric");
  if (k % 2 == 1) from_poly = -from_poly;
  if (!(closed == from_poly))
    raise(ErrorCode::Internal, "elementary_symmetric: closed form " + closed.str() + " != charpoly " + from_poly.str());
  return closed;
}

}  // namespace cotsum
