#include "sklift/siegel/siegel.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "sklift/errors.hpp"
#include "sklift/exactnum/arith.hpp"
#include "sklift/exactnum/modp.hpp"

namespace sklift {

std::string SiegelTriple::to_string() const {
  return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ")";
}

SiegelTriple reduce_triple(long n, long r, long m) {
  if (n < 0 || m < 0 || r * r > 4 * n * m)
    throw DomainError("(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) +
                      ") is not positive semidefinite");
  for (;;) {
    if (n > m) std::swap(n, m);
    if (n == 0) return {0, 0, m};
    if (std::labs(r) <= n) break;
    // x -> x - t y
    long t = r / (2 * n);
    long rem = r - 2 * n * t;
    if (rem > n) ++t;
    if (rem < -n) --t;
    long r2 = r - 2 * n * t;
    m = n * t * t - r * t + m;
    r = r2;
  }
  return {n, std::labs(r), m};
}

std::vector<SiegelTriple> siegel_classes(std::size_t bound) {
  std::vector<SiegelTriple> out;
  const long B = static_cast<long>(bound);
  const long dmax = 4 * B * B;
  for (long c = 0; c <= B; ++c) out.push_back({0, 0, c});
  for (long n = 1; 3 * n * n <= dmax; ++n)
    for (long r = 0; r <= n; ++r)
      for (long m = n; 4 * n * m - r * r <= dmax; ++m) out.push_back({n, r, m});
  return out;
}

SiegelExpansion SiegelExpansion::zero(int weight, std::size_t bound) {
  SiegelExpansion F(weight, bound);
  for (const auto& t : siegel_classes(bound)) F.c_[t] = 0;
  return F;
}

const BigRational& SiegelExpansion::at(long n, long r, long m) const {
  SiegelTriple t = reduce_triple(n, r, m);
  auto it = c_.find(t);
  if (it == c_.end())
    throw PrecisionError("A" + SiegelTriple{n, r, m}.to_string() + " (class " + t.to_string() +
                         ") not stored at bound " + std::to_string(bound_));
  return it->second;
}

bool SiegelExpansion::has(long n, long r, long m) const { return c_.count(reduce_triple(n, r, m)) != 0; }

void SiegelExpansion::set(long n, long r, long m, const BigRational& v) { c_[reduce_triple(n, r, m)] = v; }

bool SiegelExpansion::is_zero() const {
  for (const auto& [t, v] : c_)
    if (sgn(v) != 0) return false;
  return true;
}

SiegelExpansion operator+(const SiegelExpansion& a, const SiegelExpansion& b) {
  if (a.weight_ != b.weight_) throw DomainError("adding Siegel forms of different weight");
  SiegelExpansion out(a.weight_, std::min(a.bound_, b.bound_));
  for (const auto& [t, v] : a.c_) {
    auto it = b.c_.find(t);
    if (it != b.c_.end()) out.c_[t] = v + it->second;
  }
  return out;
}

SiegelExpansion operator*(const BigRational& s, const SiegelExpansion& a) {
  SiegelExpansion out = a;
  for (auto& [t, v] : out.c_) v *= s;
  return out;
}

bool operator==(const SiegelExpansion& a, const SiegelExpansion& b) {
  return a.weight_ == b.weight_ && a.bound_ == b.bound_ && a.c_ == b.c_;
}

bool maass_relation_holds(const SiegelExpansion& F, long n, long r, long m) {
  const long g = std::gcd(std::gcd(n, std::labs(r)), m);
  BigRational rhs = 0;
  for (unsigned long d : divisors(static_cast<unsigned long>(g))) {
    long dd = static_cast<long>(d);
    rhs += BigRational(ipow(BigInt(dd), F.weight() - 1)) * F.at(n * m / (dd * dd), r / dd, 1);
  }
  return rhs == F.at(n, r, m);
}

std::vector<SiegelTriple> maass_check(const SiegelExpansion& F) {
  std::vector<SiegelTriple> bad;
  for (const auto& [t, v] : F.coeffs()) {
    if (t.n < 1 || t.m < 1) continue;
    if (!maass_relation_holds(F, t.n, t.r, t.m)) bad.push_back(t);
  }
  return bad;
}

QExpansion phi_operator(const SiegelExpansion& F) {
  std::vector<BigRational> c(F.bound() + 1);
  for (std::size_t n = 0; n <= F.bound(); ++n) c[n] = F.at(static_cast<long>(n), 0, 0);
  return QExpansion(F.weight(), std::move(c));
}

namespace {

using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}
Mat2 transpose(const Mat2& a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }
Mat2 adj(const Mat2& a) { return {{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}}; }
long det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Upper triangular basis of the lattice spanned by `rows` in Z^3 (full rank).
std::array<std::array<long, 3>, 3> hermite3(std::vector<std::array<long, 3>> rows) {
  std::array<std::array<long, 3>, 3> h{};
  for (int col = 0; col < 3; ++col) {
    // gcd-combine all rows with a nonzero entry in col into one pivot row
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || std::labs(rows[i][col]) < std::labs(rows[piv][col]))) piv = i;
      if (piv == rows.size()) throw DomainError("coset lattice is not of full rank");
      bool done = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == piv || rows[i][col] == 0) continue;
        long q = rows[i][col] / rows[piv][col];
        for (int j = 0; j < 3; ++j) rows[i][j] -= q * rows[piv][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        auto p = rows[piv];
        if (p[col] < 0)
          for (auto& x : p) x = -x;
        h[col] = p;
        rows.erase(rows.begin() + static_cast<long>(piv));
        break;
      }
    }
  }
  return h;
}

std::array<long, 3> reduce_mod_lattice(std::array<long, 3> v, const std::array<std::array<long, 3>, 3>& h) {
  for (int i = 0; i < 3; ++i) {
    long q = floor_div(v[i], h[i][i]);
    for (int j = 0; j < 3; ++j) v[j] -= q * h[i][j];
  }
  return v;
}

}  // namespace

std::vector<SymplecticCoset> hecke_cosets(unsigned long ell) {
  if (!modp::is_prime_u64(ell)) throw DomainError("hecke_t2 needs a prime l, got " + std::to_string(ell));
  const long l = static_cast<long>(ell);
  std::vector<SymplecticCoset> out;
  for (long d1 : {1L, l})
    for (long d2 : {1L, l})
      for (long b = 0; b < d2; ++b) {
        if ((l * b) % (d1 * d2) != 0) continue;
        Mat2 D{{{d1, b}, {0, d2}}};
        const long dt = det(D);
        Mat2 adjT = transpose(adj(D));  // D^{-T} = adjT / dt
        // B = D^{-T} W with W symmetric; classes modulo W -> W + D^T S D.
        std::vector<std::array<long, 3>> gens;
        Mat2 Dt = transpose(D);
        for (Mat2 S : {Mat2{{{1, 0}, {0, 0}}}, Mat2{{{0, 1}, {1, 0}}}, Mat2{{{0, 0}, {0, 1}}}}) {
          Mat2 w = mul(mul(Dt, S), D);
          gens.push_back({w[0][0], w[0][1], w[1][1]});
        }
        for (int i = 0; i < 3; ++i) {
          std::array<long, 3> e{0, 0, 0};
          e[i] = l * l;
          gens.push_back(e);
        }
        auto h = hermite3(gens);
        std::set<std::array<long, 3>> seen;
        for (long w11 = 0; w11 < l * l; ++w11)
          for (long w12 = 0; w12 < l * l; ++w12)
            for (long w22 = 0; w22 < l * l; ++w22) {
              auto key = reduce_mod_lattice({w11, w12, w22}, h);
              if (seen.count(key)) continue;
              Mat2 W{{{key[0], key[1]}, {key[1], key[2]}}};
              Mat2 num = mul(adjT, W);
              bool integral = true;
              for (auto& row : num)
                for (long x : row)
                  if (x % dt != 0) integral = false;
              if (!integral) continue;
              seen.insert(key);
              SymplecticCoset c{};
              for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                  c.D[i][j] = D[i][j];
                  c.B[i][j] = num[i][j] / dt;
                }
              out.push_back(c);
            }
      }
  return out;
}

SiegelExpansion hecke_t2(const SiegelExpansion& F, unsigned long ell) {
  auto cosets = hecke_cosets(ell);
  const long l = static_cast<long>(ell);
  const int k = F.weight();
  const std::size_t out_bound = F.bound() / ell;
  if (out_bound == 0) throw PrecisionError("hecke_t2: bound " + std::to_string(F.bound()) + " < l");
  // group cosets by D
  std::map<std::array<long, 4>, std::vector<Mat2>> byD;
  for (const auto& c : cosets)
    byD[{c.D[0][0], c.D[0][1], c.D[1][0], c.D[1][1]}].push_back(
        Mat2{{{c.B[0][0], c.B[0][1]}, {c.B[1][0], c.B[1][1]}}});
  SiegelExpansion out(k, out_bound);
  for (const auto& t : siegel_classes(out_bound)) {
    BigRational sum = 0;
    Mat2 M{{{2 * t.n, t.r}, {t.r, 2 * t.m}}};  // 2T
    for (const auto& [dk, Bs] : byD) {
      Mat2 D{{{dk[0], dk[1]}, {dk[2], dk[3]}}};
      Mat2 P = mul(mul(D, M), transpose(D));  // l * 2T'
      bool ok = true;
      for (auto& row : P)
        for (long x : row)
          if (x % l != 0) ok = false;
      if (!ok) continue;
      Mat2 T2{{{P[0][0] / l, P[0][1] / l}, {P[1][0] / l, P[1][1] / l}}};
      if (T2[0][0] % 2 != 0 || T2[1][1] % 2 != 0) continue;
      // sum over B of e(tr(T' B D^{-1})): |B| if the character is trivial, else 0
      const long dt = det(D);
      Mat2 ad = adj(D);
      bool trivial = true;
      for (const auto& B : Bs) {
        Mat2 X = mul(mul(T2, B), ad);
        if ((X[0][0] + X[1][1]) % (2 * dt) != 0) {
          trivial = false;
          break;
        }
      }
      if (!trivial) continue;
      BigRational scale = qpow(BigRational(l), 2 * k - 3) * qpow(BigRational(dt), -k) *
                          BigRational(static_cast<long>(Bs.size()));
      sum += scale * F.at(T2[0][0] / 2, T2[0][1], T2[1][1] / 2);
    }
    out.set(t.n, t.r, t.m, sum);
  }
  return out;
}

EigenvalueReport eigenvalue_extract(const SiegelExpansion& F, const SiegelExpansion& TF) {
  EigenvalueReport rep;
  bool nonzero = false;
  for (const auto& [t, tv] : TF.coeffs()) {
    auto it = F.coeffs().find(t);
    if (it != F.coeffs().end() && sgn(it->second) != 0) nonzero = true;
  }
  if (!nonzero) throw DomainError("eigenvalue_extract: F vanishes on the comparison range");
  bool have = false;
  for (const auto& [t, tv] : TF.coeffs()) {
    auto it = F.coeffs().find(t);
    if (it == F.coeffs().end()) continue;
    const BigRational& fv = it->second;
    rep.checked.push_back({t, fv, tv});
    if (sgn(fv) == 0) {
      if (sgn(tv) != 0) throw CheckFailure("not an eigenform: A" + t.to_string() + " = 0 but TF is nonzero");
      continue;
    }
    BigRational q = tv / fv;
    if (!have) {
      rep.lambda = q;
      have = true;
    } else if (q != rep.lambda) {
      throw CheckFailure("not an eigenform: ratio at " + t.to_string() + " is " + to_string(q) + ", expected " +
                         to_string(rep.lambda));
    }
  }
  return rep;
}

}  // namespace sklift
