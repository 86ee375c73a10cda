#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace platoon::poly {

// Exponent vector over a fixed set of indeterminates. The ordering used
// everywhere is graded lexicographic: lower total degree first, then
// lexicographically by exponents with the first variable dominant
// (x1^2 before x1*x2 before x2^2).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
  }
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int index, int power = 1) {
    std::vector<int> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  int exponent(int i) const { return exps_.at(i); }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    check_same_nvars(o);
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
  }

  // Extends the ambient space; new variables get exponent zero.
  Monomial extended(int new_nvars) const {
    if (new_nvars < nvars()) throw std::invalid_argument("Monomial: cannot shrink variable count");
    std::vector<int> e(exps_);
    e.resize(new_nvars, 0);
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded lexicographic order (see class comment).
  bool operator<(const Monomial& o) const {
    check_same_nvars(o);
    const int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return exps_ > o.exps_;  // lexicographically larger exponent vector comes first
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int e : exps_) {
      h ^= static_cast<uint64_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string str(const std::string& var_prefix = "x") const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += var_prefix + std::to_string(i + 1);
      if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void check_same_nvars(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
      throw std::invalid_argument("Monomial: variable-count mismatch");
  }

  std::vector<int> exps_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return static_cast<size_t>(m.hash()); }
};

}  // namespace platoon::poly
