#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/linalg.hpp"
#include "ratcells/polynomial.hpp"

namespace ratcells {

/// Rational function with polynomial numerator and a multiset of characters
/// as denominator: the ambient algebra of all equivariant multiplicities.
///
/// Canonical form: every denominator character is primitive with positive
/// leading sign, scalars are absorbed into the numerator, linear factors that
/// divide the numerator are cancelled by exact trial division, and a zero
/// numerator clears the denominator. Equality is nevertheless decided by
/// cross-multiplication, never by comparing representations.
class CharFraction {
public:
    CharFraction() = default;

    explicit CharFraction(int rank)
        : rank_(rank), num_(Polynomial(rank)) {}

    CharFraction(Polynomial num, std::map<Character, int> den)
        : rank_(num.rank()), num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static CharFraction constant(int rank, const Rat& c) {
        return CharFraction(Polynomial::constant(rank, c), {});
    }

    /// c / (product of the given characters), repetitions allowed.
    static CharFraction reciprocal_product(int rank, const Rat& c,
                                           const std::vector<Character>& chars) {
        std::map<Character, int> den;
        for (const Character& chi : chars) {
            if (chi.rank() != rank)
                throw dimension_error("denominator character of wrong rank");
            den[chi] += 1;
        }
        return CharFraction(Polynomial::constant(rank, c), std::move(den));
    }

    int rank() const { return rank_; }
    const Polynomial& numerator() const { return num_; }
    const std::map<Character, int>& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    /// degree(numerator) - (number of denominator factors); the homogeneity
    /// degree when the numerator is homogeneous.
    int degree() const {
        int d = num_.total_degree();
        for (const auto& [chi, m] : den_) d -= m;
        return d;
    }

    bool is_homogeneous() const { return num_.is_homogeneous(); }

    Polynomial denominator_polynomial() const {
        Polynomial p = Polynomial::constant(rank_, 1);
        for (const auto& [chi, m] : den_)
            for (int k = 0; k < m; ++k) p = p * Polynomial::linear(chi);
        return p;
    }

    CharFraction operator-() const {
        CharFraction f = *this;
        f.num_ = -f.num_;
        return f;
    }

    friend CharFraction operator+(const CharFraction& a, const CharFraction& b) {
        if (a.rank_ != b.rank_)
            throw dimension_error("fraction arithmetic across different ranks");
        // Common denominator: max multiplicity per character.
        std::map<Character, int> den = a.den_;
        for (const auto& [chi, m] : b.den_) {
            auto it = den.find(chi);
            if (it == den.end()) den[chi] = m;
            else it->second = std::max(it->second, m);
        }
        auto complement = [&](const std::map<Character, int>& own) {
            Polynomial p = Polynomial::constant(a.rank_, 1);
            for (const auto& [chi, m] : den) {
                auto it = own.find(chi);
                int have = it == own.end() ? 0 : it->second;
                for (int k = have; k < m; ++k) p = p * Polynomial::linear(chi);
            }
            return p;
        };
        Polynomial num = a.num_ * complement(a.den_) + b.num_ * complement(b.den_);
        return CharFraction(std::move(num), std::move(den));
    }

    friend CharFraction operator-(const CharFraction& a, const CharFraction& b) {
        return a + (-b);
    }

    CharFraction scaled(const Rat& c) const {
        if (c == 0) return CharFraction(rank_);
        CharFraction f = *this;
        f.num_ = f.num_.scaled(c);
        return f;
    }

    /// Multiply by a polynomial (cancellation happens in normalization).
    CharFraction times(const Polynomial& p) const {
        return CharFraction(num_ * p, den_);
    }

    friend bool operator==(const CharFraction& a, const CharFraction& b) {
        if (a.rank_ != b.rank_) return false;
        return a.num_ * b.denominator_polynomial() ==
               b.num_ * a.denominator_polynomial();
    }
    friend bool operator!=(const CharFraction& a, const CharFraction& b) {
        return !(a == b);
    }

    /// Exact evaluation at a one-parameter subgroup; a vanishing denominator
    /// character raises a pole error naming the character.
    Rat eval(const Vec& lambda) const {
        Rat value = num_.eval(lambda);
        for (const auto& [chi, m] : den_) {
            Int p = dot(lambda, chi.coords);
            if (p == 0) {
                std::ostringstream os;
                os << "pole: denominator character (";
                for (std::size_t i = 0; i < chi.coords.size(); ++i)
                    os << (i ? "," : "") << chi.coords[i].str();
                os << ") pairs to 0";
                throw pole_error(os.str());
            }
            for (int k = 0; k < m; ++k) value /= Rat(p);
        }
        return value;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        std::ostringstream os;
        bool num_simple =
            num_.terms().size() == 1 &&
            boost::multiprecision::denominator(num_.terms().begin()->second) == 1;
        if (num_simple) os << num_.to_string();
        else os << "(" << num_.to_string() << ")";
        os << "/";
        std::size_t factors = 0;
        for (const auto& [chi, m] : den_) factors += m > 0 ? 1 : 0;
        std::ostringstream ds;
        bool first = true;
        for (const auto& [chi, m] : den_) {
            if (!first) ds << "*";
            first = false;
            Polynomial l = Polynomial::linear(chi);
            bool simple = l.terms().size() == 1;
            if (simple && m == 1) ds << l.to_string();
            else if (simple) ds << l.to_string() << "^" << m;
            else if (m == 1) ds << "(" << l.to_string() << ")";
            else ds << "(" << l.to_string() << ")^" << m;
        }
        if (factors > 1) os << "(" << ds.str() << ")";
        else os << ds.str();
        return os.str();
    }

private:
    void normalize() {
        std::map<Character, int> canonical;
        Rat scale = 1;
        for (const auto& [chi, m] : den_) {
            if (m <= 0) throw precondition_error("denominator multiplicity must be positive");
            if (chi.is_zero())
                throw precondition_error("zero character in denominator");
            Int g = gcd_vec(chi.coords);
            Vec v = chi.coords;
            for (Int& x : v) x /= g;
            // Positive leading sign; the flip contributes -1 per factor.
            int lead = 0;
            while (v[lead] == 0) ++lead;
            Int sign = 1;
            if (v[lead] < 0) {
                for (Int& x : v) x = -x;
                sign = -1;
            }
            for (int k = 0; k < m; ++k) scale *= Rat(sign * g);
            canonical[Character(std::move(v))] += m;
        }
        den_ = std::move(canonical);
        if (scale != 1) num_ = num_.scaled(Rat(1) / scale);
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        cancel();
    }

    void cancel() {
        bool progress = true;
        while (progress && !num_.is_zero()) {
            progress = false;
            for (auto it = den_.begin(); it != den_.end();) {
                if (!might_divide(it->first)) { ++it; continue; }
                auto q = num_.divided_by_linear(it->first);
                if (q) {
                    num_ = std::move(*q);
                    if (--it->second == 0) it = den_.erase(it);
                    progress = true;
                } else {
                    ++it;
                }
            }
        }
        if (num_.is_zero()) den_.clear();
    }

    /// Cheap necessary test: a polynomial divisible by the linear form of chi
    /// vanishes at every lattice point of the hyperplane chi = 0.
    bool might_divide(const Character& chi) const {
        IMat row(1, rank_);
        for (int i = 0; i < rank_; ++i) row.at(0, i) = chi.coords[i];
        std::vector<Vec> basis = kernel_basis(row);
        Vec sum(rank_, Int(0));
        for (const Vec& b : basis) {
            if (num_.eval(b) != 0) return false;
            for (int i = 0; i < rank_; ++i) sum[i] += b[i];
        }
        if (!basis.empty() && num_.eval(sum) != 0) return false;
        return true;
    }

    int rank_ = 0;
    Polynomial num_;
    std::map<Character, int> den_;
};

/// Exact sum of fractions in canonical cleared form.
inline CharFraction frac_sum(const std::vector<CharFraction>& terms) {
    if (terms.empty()) throw precondition_error("frac_sum of an empty sequence");
    CharFraction acc(terms[0].rank());
    for (const CharFraction& t : terms) acc = acc + t;
    return acc;
}

/// Evaluation of a fraction at a one-parameter subgroup.
inline Rat frac_eval(const CharFraction& f, const OneParamSubgroup& lambda) {
    if (lambda.rank() != f.rank())
        throw dimension_error("frac_eval at a point of wrong rank");
    return f.eval(lambda.coords);
}

} // namespace ratcells
