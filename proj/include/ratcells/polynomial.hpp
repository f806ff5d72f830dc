#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratcells/lattice.hpp"
#include "ratcells/numeric.hpp"

namespace ratcells {

/// Variable names used for symbolic output: x,y,z,w up to rank 4, x1..xd above.
inline std::string variable_name(int index, int rank) {
    static const char* small[] = {"x", "y", "z", "w"};
    if (rank <= 4) return small[index];
    return "x" + std::to_string(index + 1);
}

/// Multivariate polynomial over Q in a fixed number of variables.
///
/// Terms map an exponent multi-index to a nonzero rational coefficient; zero
/// coefficients are never stored, so equality is map equality. The exponent
/// order is lexicographic, which makes iteration (and hence printing and
/// serialization) deterministic.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int rank) : rank_(rank) {}

    static Polynomial constant(int rank, const Rat& c) {
        Polynomial p(rank);
        if (c != 0) p.terms_[Exponents(rank, 0)] = c;
        return p;
    }

    /// The linear form associated with a character.
    static Polynomial linear(const Character& chi) {
        Polynomial p(chi.rank());
        for (int i = 0; i < chi.rank(); ++i) {
            if (chi.coords[i] == 0) continue;
            Exponents e(chi.rank(), 0);
            e[i] = 1;
            p.terms_[e] = Rat(chi.coords[i]);
        }
        return p;
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponents(rank_, 0));
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.find(Exponents(rank_, 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int total_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            if (d > deg) deg = d;
        }
        return deg;
    }

    bool is_homogeneous() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            if (deg < 0) deg = d;
            else if (d != deg) return false;
        }
        return true;
    }

    Polynomial homogeneous_component(int degree) const {
        Polynomial p(rank_);
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int x : e) d += x;
            if (d == degree) p.terms_[e] = c;
        }
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_rank(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial p(rank_);
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_rank(b);
        Polynomial p(a.rank_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.rank_);
                for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }

    Polynomial scaled(const Rat& c) const {
        Polynomial p(rank_);
        if (c == 0) return p;
        for (const auto& [e, k] : terms_) p.terms_[e] = k * c;
        return p;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    Rat eval(const Vec& point) const {
        if (static_cast<int>(point.size()) != rank_)
            throw dimension_error("polynomial evaluation at a point of wrong rank");
        Rat total = 0;
        for (const auto& [e, c] : terms_) {
            Rat m = c;
            for (int i = 0; i < rank_; ++i)
                for (int k = 0; k < e[i]; ++k) m *= Rat(point[i]);
            total += m;
        }
        return total;
    }

    /// Exact division by a linear form; nullopt when the remainder is nonzero.
    std::optional<Polynomial> divided_by_linear(const Character& chi) const {
        if (chi.rank() != rank_)
            throw dimension_error("linear divisor of wrong rank");
        if (chi.is_zero()) throw precondition_error("division by the zero form");
        if (is_zero()) return Polynomial(rank_);
        int pivot = 0;
        while (chi.coords[pivot] == 0) ++pivot;
        Rat lead(chi.coords[pivot]);

        // Long division treating the pivot variable as the main one.
        Polynomial rem = *this;
        Polynomial quot(rank_);
        while (!rem.is_zero()) {
            // Highest pivot-degree term (the map is lex ordered; scan).
            auto best = rem.terms_.end();
            for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
                if (best == rem.terms_.end() ||
                    it->first[pivot] > best->first[pivot])
                    best = it;
            }
            if (best->first[pivot] == 0) return std::nullopt;
            Exponents qe = best->first;
            qe[pivot] -= 1;
            Rat qc = best->second / lead;
            quot.add_term(qe, qc);
            Polynomial mono(rank_);
            mono.terms_[qe] = qc;
            rem -= mono * linear(chi);
        }
        return quot;
    }

    /// Substitute each variable by the given polynomial (used to push a
    /// quotient-lattice fraction into the ambient character algebra).
    Polynomial substituted(const std::vector<Polynomial>& images, int out_rank) const {
        if (static_cast<int>(images.size()) != rank_)
            throw dimension_error("substitution needs one image per variable");
        Polynomial out(out_rank);
        for (const auto& [e, c] : terms_) {
            Polynomial term = Polynomial::constant(out_rank, c);
            for (int i = 0; i < rank_; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            out += term;
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // Descending lex order prints x before y before z.
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rat ac = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool has_var = false;
            for (int x : e)
                if (x > 0) has_var = true;
            if (ac != 1 || !has_var) os << rat_str(ac);
            bool printed = false;
            for (int i = 0; i < rank_; ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << variable_name(i, rank_);
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    void check_rank(const Polynomial& o) const {
        if (rank_ != o.rank_)
            throw dimension_error("polynomial arithmetic across different ranks");
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int rank_ = 0;
    std::map<Exponents, Rat> terms_;
};

} // namespace ratcells
