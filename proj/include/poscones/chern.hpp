#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "partition.hpp"
#include "ring.hpp"

namespace poscones {

inline Integer binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binom(n-k+i, i) after this step
  }
  return r;
}

// One formal symbol: c_index(bundle) or, with segre set, s_index(bundle).
struct ChernVar {
  std::string bundle;
  int index = 1;
  bool segre = false;
  friend auto operator<=>(const ChernVar&, const ChernVar&) = default;
};

// monomial = product of symbols with positive exponents
using ChernMonomial = std::map<ChernVar, int>;

inline int monomial_weight(const ChernMonomial& m) {
  int w = 0;
  for (const auto& [v, e] : m) w += v.index * e;
  return w;
}

// Weighted-homogeneous polynomial in Chern/Segre symbols of abstract
// bundles. Index-0 symbols are never stored (c_0 = s_0 = 1). The weight is
// carried explicitly so the zero polynomial stays typed.
class FormalChernPoly {
 public:
  explicit FormalChernPoly(int weight) : weight_(weight) {
    if (weight < 0) throw RangeError("negative formal weight");
  }

  static FormalChernPoly one() { return constant(1); }

  static FormalChernPoly constant(Rational v) {
    FormalChernPoly p(0);
    if (v != 0) p.terms_[{}] = std::move(v);
    return p;
  }

  static FormalChernPoly var(const std::string& bundle, int index,
                             bool segre = false) {
    if (index < 0) throw RangeError("negative Chern index");
    if (index == 0) return one();
    FormalChernPoly p(index);
    p.terms_[{{ChernVar{bundle, index, segre}, 1}}] = 1;
    return p;
  }

  int weight() const { return weight_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ChernMonomial, Rational>& terms() const { return terms_; }

  void add_term(ChernMonomial mono, const Rational& coeff) {
    if (coeff == 0) return;
    if (monomial_weight(mono) != weight_)
      throw CodimMismatch("term weight differs from polynomial weight");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(std::move(mono), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalChernPoly& operator+=(const FormalChernPoly& other) {
    if (weight_ != other.weight_)
      throw CodimMismatch("sum of formal polynomials of weights " +
                          std::to_string(weight_) + " and " +
                          std::to_string(other.weight_));
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  friend FormalChernPoly operator+(FormalChernPoly a, const FormalChernPoly& b) {
    return a += b;
  }

  FormalChernPoly operator-() const {
    FormalChernPoly r(*this);
    for (auto& [m, c] : r.terms_) {
      (void)m;
      c = -c;
    }
    return r;
  }
  FormalChernPoly& operator-=(const FormalChernPoly& other) { return *this += -other; }
  friend FormalChernPoly operator-(FormalChernPoly a, const FormalChernPoly& b) {
    return a -= b;
  }

  friend FormalChernPoly operator*(const FormalChernPoly& a,
                                   const FormalChernPoly& b) {
    FormalChernPoly r(a.weight_ + b.weight_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        ChernMonomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        r.add_term(std::move(m), ca * cb);
      }
    }
    return r;
  }

  friend FormalChernPoly operator*(const Rational& s, FormalChernPoly a) {
    if (s == 0) return FormalChernPoly(a.weight_);
    for (auto& [m, c] : a.terms_) {
      (void)m;
      c *= s;
    }
    return a;
  }

  FormalChernPoly pow(int e) const {
    if (e < 0) throw RangeError("negative power of a formal polynomial");
    FormalChernPoly r = one();
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  bool operator==(const FormalChernPoly& other) const {
    return weight_ == other.weight_ && terms_ == other.terms_;
  }

  // Replace each var in `repl` by a polynomial of matching weight;
  // unlisted vars stay formal.
  FormalChernPoly substitute(
      const std::map<ChernVar, FormalChernPoly>& repl) const {
    for (const auto& [v, p] : repl)
      if (p.weight() != v.index)
        throw CodimMismatch("substitution changes the weight of " + var_name(v));
    FormalChernPoly out(weight_);
    for (const auto& [mono, coeff] : terms_) {
      FormalChernPoly term = constant(coeff);
      for (const auto& [v, e] : mono) {
        auto it = repl.find(v);
        term = term * (it != repl.end() ? it->second.pow(e)
                                        : var(v.bundle, v.index, v.segre).pow(e));
      }
      out += term;
    }
    return out;
  }

  static std::string var_name(const ChernVar& v) {
    return std::string(v.segre ? "s" : "c") + std::to_string(v.index) + "(" +
           v.bundle + ")";
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
      const bool neg = coeff < 0;
      const Rational mag = neg ? Rational(-coeff) : coeff;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string factors;
      for (const auto& [v, e] : mono) {
        if (!factors.empty()) factors += "*";
        factors += var_name(v);
        if (e > 1) factors += "^" + std::to_string(e);
      }
      if (factors.empty()) {
        out += poscones::to_string(mag);
      } else {
        if (mag != 1) out += poscones::to_string(mag) + "*";
        out += factors;
      }
    }
    return out;
  }

 private:
  int weight_;
  std::map<ChernMonomial, Rational> terms_;
};

// Schur polynomial of a rank-e bundle: det(c_{lambda_i + j - i}) with
// c_0 = 1 and c_m = 0 outside [0, e]. Expanded over permutations; the
// result is stable under appending zero parts to lambda.
inline FormalChernPoly jacobi_trudi(const Partition& lambda, int e,
                                    const std::string& name = "E") {
  const int ell = lambda.length();
  if (ell == 0) return FormalChernPoly::one();
  FormalChernPoly out(lambda.weight());
  std::vector<int> perm(ell);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ChernMonomial mono;
    bool dead = false;
    for (int i = 0; i < ell && !dead; ++i) {
      const int m = lambda.part(i) + perm[i] - i;
      if (m < 0 || m > e)
        dead = true;
      else if (m > 0)
        ++mono[ChernVar{name, m, false}];
    }
    if (dead) continue;
    int inversions = 0;
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j)
        if (perm[i] > perm[j]) ++inversions;
    out.add_term(std::move(mono), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// s_i(E^dual) for i = 0..up_to as polynomials in c_j(E), from inverting
// the series 1 - c_1 + c_2 - ... ; s_i here satisfies s_i(E^dual) =
// jacobi_trudi((1^i), e).
inline std::vector<FormalChernPoly> dual_segre_series(
    int e, int up_to, const std::string& name = "E") {
  if (up_to < 0) throw RangeError("dual_segre_series: negative truncation");
  std::vector<FormalChernPoly> s;
  s.reserve(up_to + 1);
  s.push_back(FormalChernPoly::one());
  for (int i = 1; i <= up_to; ++i) {
    FormalChernPoly acc(i);
    for (int j = 1; j <= std::min(i, e); ++j) {
      const Rational sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * (FormalChernPoly::var(name, j) * s[i - j]);
    }
    s.push_back(std::move(acc));
  }
  return s;
}

// s_i(E tensor L) for a rank-e bundle, in the Segre symbols s_j(E) and
// t = c_1(L):  sum_j (-1)^(i-j) C(e-1+i, e-1+j) s_j t^(i-j).
inline FormalChernPoly segre_tensor_line(int e, int i,
                                         const std::string& bundle = "E",
                                         const std::string& line = "L") {
  if (e < 1) throw RangeError("segre_tensor_line: rank must be positive");
  if (i < 0) throw RangeError("segre_tensor_line: negative index");
  FormalChernPoly out(i);
  const FormalChernPoly t = FormalChernPoly::var(line, 1);
  for (int j = 0; j <= i; ++j) {
    const Integer b = binomial(e - 1 + i, e - 1 + j);
    if (b == 0) continue;
    const Rational coeff = ((i - j) % 2 == 0) ? Rational(b) : Rational(-b);
    FormalChernPoly term =
        j == 0 ? FormalChernPoly::one() : FormalChernPoly::var(bundle, j, true);
    out += coeff * (term * t.pow(i - j));
  }
  return out;
}

// c_i(E tensor L):  sum_j C(e-j, i-j) c_j(E) t^(i-j); zero for i > e.
inline FormalChernPoly chern_tensor_line(int e, int i,
                                         const std::string& bundle = "E",
                                         const std::string& line = "L") {
  if (e < 1) throw RangeError("chern_tensor_line: rank must be positive");
  if (i < 0) throw RangeError("chern_tensor_line: negative index");
  FormalChernPoly out(i);
  const FormalChernPoly t = FormalChernPoly::var(line, 1);
  for (int j = 0; j <= std::min(i, e); ++j) {
    const Integer b = binomial(e - j, i - j);
    if (b == 0) continue;
    FormalChernPoly term =
        j == 0 ? FormalChernPoly::one() : FormalChernPoly::var(bundle, j);
    out += Rational(b) * (term * t.pow(i - j));
  }
  return out;
}

inline std::string twisted_name(const std::string& bundle, long long m,
                                const std::string& divisor) {
  return bundle + "(" + std::to_string(m) + divisor + ")";
}

// Rewrites c_i(E) in the symbols c_j(E(mH)) and h = c_1(H): since
// E = (E(mH))(-mH), this is the tensor rule with t = -m h.
inline FormalChernPoly twist_expand(int e, long long m, int i,
                                    const std::string& bundle = "E",
                                    const std::string& divisor = "H") {
  if (e < 1) throw RangeError("twist_expand: rank must be positive");
  if (i < 0) throw RangeError("twist_expand: negative index");
  const std::string twisted = twisted_name(bundle, m, divisor);
  FormalChernPoly out(i);
  const FormalChernPoly h = FormalChernPoly::var(divisor, 1);
  for (int j = 0; j <= std::min(i, e); ++j) {
    Integer b = binomial(e - j, i - j);
    if (b == 0) continue;
    for (int p = 0; p < i - j; ++p) b *= -m;
    if (b == 0) continue;
    FormalChernPoly term =
        j == 0 ? FormalChernPoly::one() : FormalChernPoly::var(twisted, j);
    out += Rational(b) * (term * h.pow(i - j));
  }
  return out;
}

// c(G) = c(F)/c(E) for 0 -> E -> F -> G -> 0.
inline MixedClass whitney_quotient(const MixedClass& cF, const MixedClass& cE) {
  return series_quotient(cF, cE);
}

struct VectorBundle {
  std::string name;
  int rank = 0;
  MixedClass total_chern;
  bool globally_generated = false;
  bool nef = false;
  bool ample = false;
};

inline bool valid_bundle_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

// Registration-time checks: c_0 = 1, c_i = 0 above the rank, and the flag
// implications ample => nef and globally generated => nef.
inline VectorBundle make_bundle(std::string name, int rank, MixedClass total_chern,
                                bool globally_generated = false, bool nef = false,
                                bool ample = false) {
  if (!valid_bundle_name(name)) throw ModelError("invalid bundle name: " + name);
  if (rank < 1) throw ModelError("bundle rank must be positive: " + name);
  if (!(total_chern.component(0) == RingClass::one(total_chern.ring())))
    throw ModelError("total Chern class of " + name + " must start with 1");
  for (int i = rank + 1; i <= total_chern.dimension(); ++i)
    if (!total_chern.component(i).is_zero())
      throw ModelError("c_" + std::to_string(i) + "(" + name +
                       ") must vanish above the rank");
  return VectorBundle{std::move(name), rank, std::move(total_chern),
                      globally_generated, nef || globally_generated || ample,
                      ample};
}

inline MixedClass total_segre(const VectorBundle& b) {
  return series_inverse(b.total_chern);
}

using BundleEnv = std::map<std::string, VectorBundle>;

// Substitute stored Chern (or derived Segre) components for the symbols
// and multiply in the ring. The result has codim = weight, which may
// exceed the ring dimension (then it is the zero class there).
inline RingClass evaluate(const FormalChernPoly& p, const RingPtr& ring,
                          const BundleEnv& env) {
  if (!ring) throw RingMismatch("evaluate: null ring");
  RingClass out(ring, p.weight());
  std::map<std::string, MixedClass> segre_cache;
  for (const auto& [mono, coeff] : p.terms()) {
    RingClass term = RingClass::scalar(ring, coeff);
    for (const auto& [v, e] : mono) {
      auto it = env.find(v.bundle);
      if (it == env.end())
        throw UnboundSymbol("unbound bundle symbol: " + v.bundle);
      const VectorBundle& b = it->second;
      if (b.total_chern.ring() != ring)
        throw RingMismatch("bundle " + v.bundle + " lives in a different ring");
      RingClass value(ring, v.index);
      if (v.index <= ring->dimension()) {
        if (v.segre) {
          auto cached = segre_cache.find(v.bundle);
          if (cached == segre_cache.end())
            cached = segre_cache.emplace(v.bundle, total_segre(b)).first;
          value = cached->second.component(v.index);
        } else {
          value = b.total_chern.component(v.index);
        }
      }
      for (int k = 0; k < e; ++k) term = term * value;
    }
    out += term;
  }
  return out;
}

}  // namespace poscones
