#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace poscones {

class NumericalRing;
using RingPtr = std::shared_ptr<const NumericalRing>;

// Sparse class in a fixed codimension: (basis index, coefficient), sorted.
using SparseClass = std::vector<std::pair<int, Rational>>;

// A numerical ring presented by an explicit monomial basis in every
// codimension and a full multiplication table. Instances are immutable
// after construction and shared through RingPtr; class arithmetic only
// ever reads the tables, so rings are safe to use from multiple threads.
class NumericalRing {
 public:
  struct Data {
    int dimension = 0;
    std::string description;
    // basis[k] lists the codim-k monomial names; basis[0] must be {"1"}.
    std::vector<std::vector<std::string>> basis;
    // products[{ci,cj}] for 1 <= ci <= cj with ci+cj <= dimension; the
    // entry for (i, j) sits at i*basis[cj].size()+j and expands the product
    // in basis[ci+cj]. Products with a codim-0 factor are implied by the
    // identity and products of total codim > dimension are zero, so
    // neither is stored.
    std::map<std::pair<int, int>, std::vector<SparseClass>> products;
    int point_index = 0;  // distinguished point class within basis[dimension]
  };

  static RingPtr create(Data d) {
    validate(d);
    return RingPtr(new NumericalRing(std::move(d)));
  }

  int dimension() const { return data_.dimension; }
  const std::string& description() const { return data_.description; }

  int basis_size(int codim) const {
    if (codim < 0 || codim > data_.dimension) return 0;
    return static_cast<int>(data_.basis[codim].size());
  }

  const std::vector<std::string>& basis(int codim) const {
    static const std::vector<std::string> empty;
    if (codim < 0 || codim > data_.dimension) return empty;
    return data_.basis[codim];
  }

  const std::string& monomial_name(int codim, int index) const {
    const auto& b = basis(codim);
    if (index < 0 || index >= static_cast<int>(b.size()))
      throw RangeError("monomial index out of range");
    return b[index];
  }

  // Monomial names are unique across all codimensions.
  std::optional<std::pair<int, int>> find_monomial(std::string_view name) const {
    auto it = name_map_.find(std::string(name));
    if (it == name_map_.end()) return std::nullopt;
    return it->second;
  }

  int point_index() const { return data_.point_index; }

  // Expansion of basis[ci][i] * basis[cj][j]; requires ci, cj >= 1 and
  // ci + cj <= dimension (other cases are handled by class arithmetic).
  const SparseClass& structure(int ci, int i, int cj, int j) const {
    if (ci > cj) {
      std::swap(ci, cj);
      std::swap(i, j);
    }
    auto it = data_.products.find({ci, cj});
    if (it == data_.products.end())
      throw RangeError("structure constants requested outside the table");
    return it->second[static_cast<std::size_t>(i) * data_.basis[cj].size() + j];
  }

 private:
  explicit NumericalRing(Data d) : data_(std::move(d)) {
    for (int k = 0; k <= data_.dimension; ++k)
      for (std::size_t i = 0; i < data_.basis[k].size(); ++i)
        name_map_.emplace(data_.basis[k][i], std::make_pair(k, static_cast<int>(i)));
  }

  static void validate(const Data& d) {
    if (d.dimension < 1) throw ModelError("ring dimension must be at least 1");
    if (static_cast<int>(d.basis.size()) != d.dimension + 1)
      throw ModelError("ring basis must cover codimensions 0..dimension");
    if (d.basis[0] != std::vector<std::string>{"1"})
      throw ModelError("codim-0 basis must be the single monomial \"1\"");
    std::map<std::string, int> seen;
    for (const auto& level : d.basis) {
      if (level.empty()) throw ModelError("empty basis level");
      for (const auto& name : level) {
        if (name.empty()) throw ModelError("empty monomial name");
        if (++seen[name] > 1) throw ModelError("duplicate monomial name: " + name);
      }
    }
    if (d.point_index < 0 ||
        d.point_index >= static_cast<int>(d.basis[d.dimension].size()))
      throw ModelError("point class index out of range");
    for (int ci = 1; ci <= d.dimension; ++ci) {
      for (int cj = ci; ci + cj <= d.dimension; ++cj) {
        auto it = d.products.find({ci, cj});
        if (it == d.products.end())
          throw ModelError("missing product table for codims " +
                           std::to_string(ci) + "," + std::to_string(cj));
        const auto expected =
            d.basis[ci].size() * d.basis[cj].size();
        if (it->second.size() != expected)
          throw ModelError("product table has wrong size");
        for (const auto& entry : it->second) {
          int last = -1;
          for (const auto& [idx, coeff] : entry) {
            if (idx <= last || idx >= static_cast<int>(d.basis[ci + cj].size()))
              throw ModelError("product table entry has bad basis index");
            if (coeff == 0) throw ModelError("product table stores a zero coefficient");
            last = idx;
          }
        }
      }
    }
    for (const auto& [key, value] : d.products) {
      (void)value;
      if (key.first < 1 || key.first > key.second ||
          key.first + key.second > d.dimension)
        throw ModelError("product table keyed outside the valid codim range");
    }
  }

  Data data_;
  std::map<std::string, std::pair<int, int>> name_map_;
};

// A homogeneous class: sparse rational coordinates over the basis of one
// codimension. Codimensions above the ring dimension are allowed and are
// identically zero; they arise transiently in series arithmetic.
class RingClass {
 public:
  RingClass() = default;

  RingClass(RingPtr ring, int codim) : ring_(std::move(ring)), codim_(codim) {
    require_ring();
    if (codim_ < 0) throw CodimMismatch("negative codimension");
  }

  static RingClass monomial(RingPtr ring, int codim, int index,
                            Rational coeff = 1) {
    RingClass c(std::move(ring), codim);
    if (index < 0 || index >= c.ring_->basis_size(codim))
      throw RangeError("monomial index out of range");
    if (coeff != 0) c.coeffs_[index] = std::move(coeff);
    return c;
  }

  static RingClass monomial(const RingPtr& ring, std::string_view name,
                            Rational coeff = 1) {
    auto pos = ring->find_monomial(name);
    if (!pos) throw UnboundSymbol("unknown monomial: " + std::string(name));
    return monomial(ring, pos->first, pos->second, std::move(coeff));
  }

  static RingClass one(RingPtr ring) { return monomial(std::move(ring), 0, 0); }

  static RingClass scalar(RingPtr ring, Rational value) {
    return monomial(std::move(ring), 0, 0, std::move(value));
  }

  const RingPtr& ring() const { return ring_; }
  int codim() const { return codim_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void set_coeff(int index, Rational value) {
    if (index < 0 || (codim_ <= ring_->dimension() &&
                      index >= ring_->basis_size(codim_)))
      throw RangeError("coefficient index out of range");
    if (value == 0)
      coeffs_.erase(index);
    else
      coeffs_[index] = std::move(value);
  }

  RingClass& operator+=(const RingClass& other) {
    require_compatible(other);
    for (const auto& [idx, c] : other.coeffs_) {
      auto it = coeffs_.find(idx);
      if (it == coeffs_.end()) {
        coeffs_.emplace(idx, c);
      } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
      }
    }
    return *this;
  }

  RingClass& operator-=(const RingClass& other) { return *this += -other; }

  RingClass operator-() const {
    RingClass r(*this);
    for (auto& [idx, c] : r.coeffs_) {
      (void)idx;
      c = -c;
    }
    return r;
  }

  friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
  friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }

  friend RingClass operator*(const Rational& s, RingClass a) {
    if (s == 0) return RingClass(a.ring_, a.codim_);
    for (auto& [idx, c] : a.coeffs_) {
      (void)idx;
      c *= s;
    }
    return a;
  }
  friend RingClass operator*(RingClass a, const Rational& s) { return s * std::move(a); }

  friend RingClass operator*(const RingClass& a, const RingClass& b) {
    a.require_ring();
    b.require_ring();
    if (a.ring_ != b.ring_) throw RingMismatch("product of classes from different rings");
    const auto& ring = *a.ring_;
    RingClass r(a.ring_, a.codim_ + b.codim_);
    if (a.is_zero() || b.is_zero() || r.codim_ > ring.dimension()) return r;
    if (a.codim_ == 0) return a.coeff(0) * b;
    if (b.codim_ == 0) return b.coeff(0) * a;
    for (const auto& [i, ca] : a.coeffs_) {
      for (const auto& [j, cb] : b.coeffs_) {
        const Rational prod = ca * cb;
        for (const auto& [m, s] : ring.structure(a.codim_, i, b.codim_, j)) {
          auto it = r.coeffs_.find(m);
          if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(m, prod * s);
          } else {
            it->second += prod * s;
            if (it->second == 0) r.coeffs_.erase(it);
          }
        }
      }
    }
    return r;
  }

  RingClass pow(int e) const {
    if (e < 0) throw RangeError("negative power of a ring class");
    RingClass r = RingClass::one(ring_);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // Degree of a top-codimension class: the coefficient of the point class.
  Rational degree() const {
    require_ring();
    if (codim_ != ring_->dimension())
      throw CodimMismatch("degree needs a class of codimension dim = " +
                          std::to_string(ring_->dimension()) + ", got " +
                          std::to_string(codim_));
    return coeff(ring_->point_index());
  }

  // Dense coordinates over basis(codim); empty above the ring dimension.
  QVec coordinates() const {
    require_ring();
    QVec v(ring_->basis_size(codim_), 0);
    for (const auto& [idx, c] : coeffs_) v[idx] = c;
    return v;
  }

  std::string to_string() const {
    require_ring();
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : coeffs_) {
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const std::string& name =
          codim_ <= ring_->dimension() ? ring_->monomial_name(codim_, idx) : "";
      if (name == "1") {
        out += to_poscones_string(mag);
      } else {
        if (mag != 1) out += to_poscones_string(mag) + "*";
        out += name;
      }
    }
    return out;
  }

  bool operator==(const RingClass& other) const {
    return ring_ == other.ring_ && codim_ == other.codim_ &&
           coeffs_ == other.coeffs_;
  }

 private:
  static std::string to_poscones_string(const Rational& q) { return poscones::to_string(q); }

  void require_ring() const {
    if (!ring_) throw RingMismatch("class has no ring attached");
  }
  void require_compatible(const RingClass& other) const {
    require_ring();
    other.require_ring();
    if (ring_ != other.ring_)
      throw RingMismatch("sum of classes from different rings");
    if (codim_ != other.codim_)
      throw CodimMismatch("sum of classes of codimensions " +
                          std::to_string(codim_) + " and " +
                          std::to_string(other.codim_));
  }

  RingPtr ring_;
  int codim_ = 0;
  std::map<int, Rational> coeffs_;
};

// A formal direct sum over codimensions 0..dimension ("total class").
// This is the shape of total Chern and total Segre classes; it is only a
// convenience wrapper, the graded pieces remain ordinary RingClasses.
class MixedClass {
 public:
  explicit MixedClass(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw RingMismatch("mixed class has no ring attached");
    comps_.reserve(ring_->dimension() + 1);
    for (int k = 0; k <= ring_->dimension(); ++k) comps_.emplace_back(ring_, k);
  }

  static MixedClass one(RingPtr ring) {
    MixedClass m(std::move(ring));
    m.comps_[0] = RingClass::one(m.ring_);
    return m;
  }

  static MixedClass from_class(const RingClass& c) {
    MixedClass m(c.ring());
    if (c.codim() <= c.ring()->dimension()) m.comps_[c.codim()] = c;
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  int dimension() const { return ring_->dimension(); }

  const RingClass& component(int k) const {
    if (k < 0 || k > dimension()) throw RangeError("mixed component out of range");
    return comps_[k];
  }

  void set_component(RingClass c) {
    if (c.ring() != ring_) throw RingMismatch("component from a different ring");
    if (c.codim() > dimension()) {
      if (!c.is_zero()) throw CodimMismatch("component codim above ring dimension");
      return;
    }
    comps_[c.codim()] = std::move(c);
  }

  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }

  MixedClass& operator+=(const MixedClass& other) {
    require_same_ring(other);
    for (int k = 0; k <= dimension(); ++k) comps_[k] += other.comps_[k];
    return *this;
  }
  friend MixedClass operator+(MixedClass a, const MixedClass& b) { return a += b; }

  MixedClass& operator-=(const MixedClass& other) {
    require_same_ring(other);
    for (int k = 0; k <= dimension(); ++k) comps_[k] -= other.comps_[k];
    return *this;
  }
  friend MixedClass operator-(MixedClass a, const MixedClass& b) { return a -= b; }

  friend MixedClass operator*(const MixedClass& a, const MixedClass& b) {
    a.require_same_ring(b);
    MixedClass r(a.ring_);
    for (int i = 0; i <= a.dimension(); ++i) {
      if (a.comps_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.dimension(); ++j) {
        if (b.comps_[j].is_zero()) continue;
        r.comps_[i + j] += a.comps_[i] * b.comps_[j];
      }
    }
    return r;
  }

  friend MixedClass operator*(const Rational& s, MixedClass a) {
    for (auto& c : a.comps_) c = s * c;
    return a;
  }

  bool operator==(const MixedClass& other) const {
    return ring_ == other.ring_ && comps_ == other.comps_;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& c : comps_) {
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c.to_string();
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same_ring(const MixedClass& other) const {
    if (ring_ != other.ring_)
      throw RingMismatch("mixed classes from different rings");
  }

  RingPtr ring_;
  std::vector<RingClass> comps_;
};

// Exact graded series division f/e where e has constant term 1; this is
// the engine behind Whitney quotients and total Segre classes.
inline MixedClass series_quotient(const MixedClass& f, const MixedClass& e) {
  if (f.ring() != e.ring())
    throw RingMismatch("series quotient across different rings");
  if (!(e.component(0) == RingClass::one(e.ring())))
    throw RangeError("series divisor must have constant term 1");
  MixedClass g(f.ring());
  g.set_component(f.component(0));
  for (int k = 1; k <= f.dimension(); ++k) {
    RingClass acc = f.component(k);
    for (int j = 1; j <= k; ++j) acc -= e.component(j) * g.component(k - j);
    g.set_component(std::move(acc));
  }
  return g;
}

inline MixedClass series_inverse(const MixedClass& e) {
  return series_quotient(MixedClass::one(e.ring()), e);
}

// Intersection pairing between codim k and codim dimension-k, as the
// matrix of degrees of pairwise products. Exactness of Poincare duality
// for a model shows up as invertibility of every such matrix.
inline QMatrix pairing_matrix(const RingPtr& ring, int k) {
  if (!ring) throw RingMismatch("pairing_matrix: null ring");
  const int n = ring->dimension();
  if (k < 0 || k > n) throw RangeError("pairing_matrix: codim out of range");
  const int rows_n = ring->basis_size(k);
  const int cols_n = ring->basis_size(n - k);
  QMatrix p(rows_n, QVec(cols_n, 0));
  for (int i = 0; i < rows_n; ++i) {
    const RingClass a = RingClass::monomial(ring, k, i);
    for (int j = 0; j < cols_n; ++j)
      p[i][j] = (a * RingClass::monomial(ring, n - k, j)).degree();
  }
  return p;
}

}  // namespace poscones
