#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "platoon/poly/monomial.hpp"

namespace platoon::poly {

// Sparse multivariate polynomial with real coefficients in canonical form:
// terms are kept in graded-lex order and zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, double>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, double c) {
    Polynomial p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
  }
  static Polynomial variable(int nvars, int index) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, index), 1.0);
    return p;
  }
  static Polynomial from_monomial(const Monomial& m, double coeff = 1.0) {
    Polynomial p(m.nvars());
    p.add_term(m, coeff);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  int min_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
  }

  double coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0.0 : it->second;
  }

  void add_term(const Monomial& m, double coeff) {
    if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial: monomial variable-count mismatch");
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0.0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same_nvars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same_nvars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(double s) {
    if (s == 0.0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(*this);
    r *= -1.0;
    return r;
  }
  Polynomial operator*(double s) const {
    Polynomial r(*this);
    r *= s;
    return r;
  }
  friend Polynomial operator*(double s, const Polynomial& p) { return p * s; }

  Polynomial operator*(const Polynomial& o) const {
    check_same_nvars(o);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = Polynomial::constant(nvars_, 1.0);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  Polynomial derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      const int e = m.exponent(var);
      if (e == 0) continue;
      std::vector<int> exps = m.exponents();
      exps[var] -= 1;
      r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
  }

  std::vector<Polynomial> gradient(const std::vector<int>& vars) const {
    std::vector<Polynomial> g;
    g.reserve(vars.size());
    for (int v : vars) g.push_back(derivative(v));
    return g;
  }
  std::vector<Polynomial> gradient() const {
    std::vector<int> all(nvars_);
    for (int i = 0; i < nvars_; ++i) all[i] = i;
    return gradient(all);
  }

  double evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
      double t = c;
      for (int i = 0; i < nvars_; ++i) {
        const int e = m.exponent(i);
        for (int k = 0; k < e; ++k) t *= point[i];
      }
      total += t;
    }
    return total;
  }

  // Fixes one variable to a constant value; the variable stays in the
  // ambient space with exponent zero.
  Polynomial substitute(int var, double value) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      const int e = m.exponent(var);
      double scale = c;
      for (int k = 0; k < e; ++k) scale *= value;
      if (scale == 0.0) continue;
      std::vector<int> exps = m.exponents();
      exps[var] = 0;
      r.add_term(Monomial(std::move(exps)), scale);
    }
    return r;
  }

  Polynomial extended(int new_nvars) const {
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) r.add_term(m.extended(new_nvars), c);
    return r;
  }

  double linf_norm() const {
    double n = 0.0;
    for (const auto& [m, c] : terms_) n = std::max(n, std::abs(c));
    return n;
  }

  bool approx_equal(const Polynomial& o, double tol = 1e-9) const {
    check_same_nvars(o);
    return (*this - o).linf_norm() <= tol;
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
  }

  std::string str(const std::string& var_prefix = "x") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += c >= 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      const double a = std::abs(c);
      if (m.is_constant()) {
        s += std::to_string(a);
      } else {
        if (a != 1.0) s += std::to_string(a) + "*";
        s += m.str(var_prefix);
      }
    }
    return s;
  }

 private:
  void check_same_nvars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable-count mismatch");
  }

  int nvars_ = 0;
  TermMap terms_;
};

}  // namespace platoon::poly
