#include "pitop/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace pitop {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

namespace {

std::mutex g_poly_mutex;
std::map<long, std::vector<long>> g_poly_cache;

std::vector<long> compute_cyclotomic(long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& den = cyclotomic_poly(d);
    long dd = static_cast<long>(den.size()) - 1;
    long dn = static_cast<long>(num.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (long k = dn; k >= dd; --k) {
      long t = num[k];  // den is monic
      q[k - dd] = t;
      if (t == 0) continue;
      for (long i = 0; i <= dd; ++i) num[k - dd + i] -= t * den[i];
    }
    num = q;
  }
  return num;
}

// Solve A x = b over Q; A is rows x cols. Returns nullopt if inconsistent.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> a,
                                                      std::vector<mpq_class> b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    mpq_class inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivcol.push_back(static_cast<long>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, 0);
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

long legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(long n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lk(g_poly_mutex);
    auto it = g_poly_cache.find(n);
    if (it != g_poly_cache.end()) return it->second;
  }
  std::vector<long> p;
  if (n == 1)
    p = {-1, 1};
  else
    p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lk(g_poly_mutex);
  return g_poly_cache.emplace(n, std::move(p)).first->second;
}

CycloNum::CycloNum() : n_(1), c_(1, 0) {}
CycloNum::CycloNum(long v) : n_(1), c_(1, mpq_class(v)) {}
CycloNum::CycloNum(const mpq_class& q) : n_(1), c_(1, q) { c_[0].canonicalize(); }

CycloNum::CycloNum(long order, std::vector<mpq_class> coeffs) : n_(order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  for (auto& x : coeffs) x.canonicalize();
  reduce_poly(coeffs);
  c_ = std::move(coeffs);
}

void CycloNum::reduce_poly(std::vector<mpq_class>& p) const {
  const std::vector<long>& phi = cyclotomic_poly(n_);
  long deg = static_cast<long>(phi.size()) - 1;
  for (long k = static_cast<long>(p.size()) - 1; k >= deg; --k) {
    if (p[k] == 0) continue;
    mpq_class t = p[k];
    for (long i = 0; i < deg; ++i)
      if (phi[i] != 0) p[k - deg + i] -= t * phi[i];
    p[k] = 0;
  }
  p.resize(deg, 0);
  for (auto& q : p) q.canonicalize();
}

CycloNum CycloNum::root(long n, long k) {
  if (n < 1) throw DomainError("root_of_unity: N must be >= 1");
  long e = ((k % n) + n) % n;
  std::vector<mpq_class> p(e + 1, 0);
  p[e] = 1;
  return CycloNum(n, std::move(p));
}

CycloNum CycloNum::rational(const mpq_class& q, long order) {
  std::vector<mpq_class> p(1, q);
  return CycloNum(order, std::move(p));
}

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycloNum::is_one() const { return is_rational() && c_[0] == 1; }

CycloNum CycloNum::lifted(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw DomainError("lift target order must be a multiple of the source order");
  long step = m / n_;
  std::vector<mpq_class> p(step * (c_.size() - 1) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return CycloNum(m, std::move(p));
}

std::optional<CycloNum> CycloNum::descend(long m) const {
  if (m % n_ == 0) return lifted(m);
  long big = std::lcm(n_, m);
  CycloNum me = lifted(big);
  long fb = euler_phi(big), fm = euler_phi(m);
  std::vector<std::vector<mpq_class>> a(fb, std::vector<mpq_class>(fm, 0));
  for (long k = 0; k < fm; ++k) {
    CycloNum z = CycloNum::root(m, k).lifted(big);
    for (long r = 0; r < fb; ++r) a[r][k] = z.c_[r];
  }
  auto sol = solve_rational(a, me.c_);
  if (!sol) return std::nullopt;
  return CycloNum(m, *sol);
}

CycloNum CycloNum::compact() const {
  for (long d = 1; d <= n_; ++d) {
    if (n_ % d != 0) continue;
    auto r = descend(d);
    if (r) return *r;
  }
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_) {
    long m = std::lcm(a.n_, b.n_);
    return a.lifted(m) + b.lifted(m);
  }
  CycloNum r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_) {
    if (a.n_ == 1 && a.is_rational()) {
      CycloNum r = b;
      for (auto& q : r.c_) q *= a.c_[0];
      return r;
    }
    if (b.n_ == 1 && b.is_rational()) {
      CycloNum r = a;
      for (auto& q : r.c_) q *= b.c_[0];
      return r;
    }
    long m = std::lcm(a.n_, b.n_);
    return a.lifted(m) * b.lifted(m);
  }
  size_t f = a.c_.size();
  std::vector<mpq_class> p(2 * f - 1, 0);
  for (size_t i = 0; i < f; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < f; ++j) {
      if (b.c_[j] == 0) continue;
      p[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloNum(a.n_, std::move(p));
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw DomainError("inversion of zero in Q(zeta_" + std::to_string(n_) + ")");
  if (is_rational()) return CycloNum::rational(1 / c_[0], n_);
  long nz = 0, pos = 0;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) {
      ++nz;
      pos = static_cast<long>(i);
    }
  if (nz == 1) {
    CycloNum r = CycloNum::root(n_, n_ - pos);
    mpq_class s = 1 / c_[pos];
    for (auto& q : r.c_) q *= s;
    return r;
  }
  long f = static_cast<long>(c_.size());
  std::vector<std::vector<mpq_class>> m(f, std::vector<mpq_class>(f, 0));
  for (long j = 0; j < f; ++j) {
    CycloNum col = *this * CycloNum::root(n_, j);
    for (long i = 0; i < f; ++i) m[i][j] = col.c_[i];
  }
  std::vector<mpq_class> e(f, 0);
  e[0] = 1;
  auto sol = solve_rational(m, e);
  if (!sol) throw DomainError("singular element in cyclotomic inversion");
  return CycloNum(n_, *sol);
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNum result = CycloNum::rational(1, n_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycloNum CycloNum::conj() const {
  CycloNum r = CycloNum::rational(0, n_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    r = r + CycloNum::root(n_, -static_cast<long>(i)) * CycloNum(c_[i]);
  }
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_) {
    long m = std::lcm(a.n_, b.n_);
    return a.lifted(m) == b.lifted(m);
  }
  return a.c_ == b.c_;
}

bool canonical_less(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int s = cmp(a.c_[i], b.c_[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

std::optional<std::pair<long, long>> CycloNum::as_root_of_unity() const {
  long m = std::lcm(n_, 2L);
  CycloNum me = lifted(m);
  for (long k = 0; k < m; ++k)
    if (CycloNum::root(m, k) == me) return std::make_pair(k, m);
  return std::nullopt;
}

std::string CycloNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& q = c_[i];
    if (q == 0) continue;
    mpq_class mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "zeta" << n_ << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> z = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
    z += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.str(); }

namespace {

CycloNum sqrt_prime(long p) {
  if (p == 2) return CycloNum::root(8, 1) + CycloNum::root(8, 7);
  CycloNum g;
  for (long a = 1; a < p; ++a) g += CycloNum::root(p, a) * CycloNum(legendre(a, p));
  if (p % 4 == 1) return g;
  return -CycloNum::root(4, 1) * g;
}

}  // namespace

CycloNum sqrt_in_field(const CycloNum& x, long field_order, bool negate) {
  if (x.is_zero()) return CycloNum::rational(0, field_order);
  long m = std::lcm(std::lcm(x.order(), field_order), 2L);
  CycloNum xm = x.lifted(m);
  std::optional<long> kfound;
  mpq_class r;
  for (long k = 0; k < m && !kfound; ++k) {
    CycloNum t = xm * CycloNum::root(m, -k);
    if (t.is_rational() && t.rational_part() != 0) {
      kfound = k;
      r = t.rational_part();
    }
  }
  if (!kfound)
    throw DomainError("square root supported only for rational multiples of roots of unity, got " +
                      x.str());
  long k = *kfound;
  if (r < 0) {
    r = -r;
    k = (k + m / 2) % m;
  }
  // r = a/b, sqrt(r) = sqrt(a*b)/b = s*sqrt(f)/b with f squarefree.
  mpz_class a = r.get_num(), b = r.get_den();
  mpz_class ab = a * b;
  mpz_class s = 1, f = 1;
  mpz_class rest = ab;
  std::vector<long> primes;
  for (long p = 2; mpz_class(p) * p <= rest; ++p) {
    long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (long i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) primes.push_back(p);
  }
  if (rest > 1) {
    if (!rest.fits_slong_p()) throw DomainError("square root: radicand too large");
    primes.push_back(rest.get_si());
  }
  CycloNum y = CycloNum::root(2 * m, k) * CycloNum(mpq_class(s, b));
  for (long p : primes) y = y * sqrt_prime(p);
  if (y * y != x) throw DomainError("internal error: square root check failed");
  auto down = y.descend(field_order);
  if (!down) {
    CycloNum c = y.compact();
    throw DomainError("square root of " + x.str() + " is not in Q(zeta_" +
                      std::to_string(field_order) + "); enlarge the cyclotomic order to " +
                      std::to_string(std::lcm(field_order, c.order())));
  }
  std::complex<double> z = down->to_complex();
  bool positive = std::abs(z.real()) > 1e-9 ? z.real() > 0 : z.imag() > 0;
  CycloNum res = positive ? *down : -*down;
  return negate ? -res : res;
}

}  // namespace pitop
