#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "vnum/errors.hpp"
#include "vnum/varset.hpp"

namespace vnum {

/// Per-variable exponent. Desk-scale computations never exceed this width.
using Exp = std::uint8_t;

/// A monomial as an exponent vector over a fixed VarSet.
/// The constant monomial 1 is the all-zeros vector. Immutable after
/// construction; the total degree is cached.
class Monomial {
  public:
    explicit Monomial(std::vector<Exp> exponents)
        : exps_(std::move(exponents)), degree_(0) {
        for (Exp e : exps_) {
            degree_ += e;
        }
    }

    static Monomial one(int nvars) { return Monomial(std::vector<Exp>(static_cast<size_t>(nvars), 0)); }

    /// The square-free monomial with the given support.
    static Monomial from_support(int nvars, const std::vector<int>& support) {
        std::vector<Exp> e(static_cast<size_t>(nvars), 0);
        for (int i : support) {
            e.at(static_cast<size_t>(i)) = 1;
        }
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    Exp exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<Exp>& exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e <= 1; });
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < nvars(); ++i) {
            if (exps_[static_cast<size_t>(i)] > 0) {
                s.push_back(i);
            }
        }
        return s;
    }

    bool divides(const Monomial& other) const {
        if (degree_ > other.degree_) {
            return false;
        }
        for (size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > other.exps_[i]) {
                return false;
            }
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<Exp> e(a.exps_.size());
        for (size_t i = 0; i < e.size(); ++i) {
            int sum = int(a.exps_[i]) + int(b.exps_[i]);
            if (sum > 255) {
                throw InvalidInput("monomial exponent overflow");
            }
            e[i] = static_cast<Exp>(sum);
        }
        return Monomial(std::move(e));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<Exp> e(a.exps_.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = std::max(a.exps_[i], b.exps_[i]);
        }
        return Monomial(std::move(e));
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        std::vector<Exp> e(a.exps_.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = std::min(a.exps_[i], b.exps_[i]);
        }
        return Monomial(std::move(e));
    }

    /// Exact quotient this / d. Precondition: d divides this.
    Monomial divide_by(const Monomial& d) const {
        std::vector<Exp> e(exps_.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (d.exps_[i] > exps_[i]) {
                throw InvalidInput("divide_by: divisor does not divide");
            }
            e[i] = static_cast<Exp>(exps_[i] - d.exps_[i]);
        }
        return Monomial(std::move(e));
    }

    /// this / gcd(this, f); the generator image under colon by f.
    Monomial colon_by(const Monomial& f) const {
        std::vector<Exp> e(exps_.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = static_cast<Exp>(exps_[i] - std::min(exps_[i], f.exps_[i]));
        }
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    std::string to_string(const VarSet& vars) const {
        if (is_one()) {
            return "1";
        }
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            Exp e = exps_[static_cast<size_t>(i)];
            if (e == 0) {
                continue;
            }
            if (!out.empty()) {
                out += "*";
            }
            out += vars.name(i);
            if (e > 1) {
                out += "^" + std::to_string(int(e));
            }
        }
        return out;
    }

  private:
    std::vector<Exp> exps_;
    int degree_;
};

/// Canonical total order: degree first, then lexicographic on exponent
/// vectors with earlier variables ranked higher, so (x1, x2) and
/// (x1^2, x1*x2, x2^2) list in the familiar order.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    return a.exponents() > b.exponents();
}

}  // namespace vnum
