#ifndef WITT_FREE_ALGEBRA_HPP
#define WITT_FREE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/matrix.hpp"
#include "witt/poly.hpp"
#include "witt/rings.hpp"

namespace witt {

// A commutative algebra B over a ring A, free of finite rank as an A-module,
// presented by structure constants on a fixed basis e_0..e_{d-1}. Elements
// are coordinate vectors. The monogenic case A[y]/(pi) with pi monic carries
// the power basis 1, y, .., y^{d-1}.
template <Ring R>
class FreeAlgebraRing {
public:
    using Base = R;
    using Coeff = typename R::Elem;
    using Elem = std::vector<Coeff>;

    // General constructor: table[i*d+j] holds the coordinates of e_i * e_j.
    // Identity coordinates are given explicitly. Commutativity, the unit law,
    // and associativity on all basis triples are checked.
    FreeAlgebraRing(R base, std::size_t dim, std::vector<Elem> table, Elem unit,
                    std::string elem_prefix = "e")
        : base_(std::move(base)), dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
        if (dim_ == 0) throw domain_error("free algebra of rank zero");
        if (table_.size() != dim_ * dim_ || unit_.size() != dim_)
            throw domain_error("free algebra table shape mismatch");
        for (const auto& row : table_)
            if (row.size() != dim_) throw domain_error("free algebra table shape mismatch");
        for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back(elem_prefix + std::to_string(i));
        validate();
    }

    // A[y]/(pi) for monic pi of degree >= 1, on the power basis.
    FreeAlgebraRing(R base, const Poly<R>& pi, std::string var)
        : base_(std::move(base)), dim_(pi.empty() ? 0 : pi.size() - 1) {
        if (poly_deg(pi) < 1) throw domain_error("modulus must have degree >= 1");
        if (!base_.eq(pi.back(), base_.one())) throw domain_error("modulus must be monic");
        modulus_ = pi;
        var_ = var;
        // Powers y^k reduced mod pi, for k = 0 .. 2d-2.
        std::vector<Elem> pow(2 * dim_ - 1, Elem(dim_, base_.zero()));
        for (std::size_t k = 0; k < dim_; ++k) pow[k][k] = base_.one();
        for (std::size_t k = dim_; k + 1 < 2 * dim_; ++k) {
            // y^k = y * y^(k-1); reduce the overflow through y^d = -(pi - y^d).
            const Elem& prev = pow[k - 1];
            Elem cur(dim_, base_.zero());
            for (std::size_t i = 0; i + 1 < dim_; ++i) cur[i + 1] = prev[i];
            const Coeff top = prev[dim_ - 1];
            if (!base_.is_zero(top))
                for (std::size_t i = 0; i < dim_; ++i)
                    cur[i] = base_.sub(cur[i], base_.mul(top, pi[i]));
            pow[k] = std::move(cur);
        }
        table_.assign(dim_ * dim_, Elem());
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) table_[i * dim_ + j] = pow[i + j];
        unit_.assign(dim_, base_.zero());
        unit_[0] = base_.one();
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == 0) basis_names_.push_back("1");
            else if (i == 1) basis_names_.push_back(var_);
            else basis_names_.push_back(var_ + "^" + std::to_string(i));
        }
    }

    const R& base() const { return base_; }
    std::size_t rank() const { return dim_; }
    bool is_monogenic() const { return !modulus_.empty(); }
    const Poly<R>& modulus() const { return modulus_; }

    Elem zero() const { return Elem(dim_, base_.zero()); }
    Elem one() const { return unit_; }

    Elem gen() const {
        if (!is_monogenic()) throw domain_error("generator only defined for monogenic algebras");
        Elem g = zero();
        if (dim_ == 1) {
            // y = -pi(0) in A[y]/(y + pi0)
            g[0] = base_.neg(modulus_[0]);
        } else {
            g[1] = base_.one();
        }
        return g;
    }

    Elem basis_elem(std::size_t i) const {
        Elem g = zero();
        g.at(i) = base_.one();
        return g;
    }

    Elem embed(const Coeff& c) const {
        Elem out(dim_, base_.zero());
        for (std::size_t i = 0; i < dim_; ++i) out[i] = base_.mul(c, unit_[i]);
        return out;
    }

    Elem from_poly(const Poly<R>& f) const {
        if (!is_monogenic()) throw domain_error("from_poly only defined for monogenic algebras");
        Elem acc = zero();
        Elem y = gen();
        for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, y), embed(f[i]));
        return acc;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = base_.add(a[i], b[i]);
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = base_.sub(a[i], b[i]);
        return out;
    }
    Elem neg(const Elem& a) const {
        Elem out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = base_.neg(a[i]);
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out(dim_, base_.zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (base_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (base_.is_zero(b[j])) continue;
                const Coeff c = base_.mul(a[i], b[j]);
                const Elem& t = table_[i * dim_ + j];
                for (std::size_t k = 0; k < dim_; ++k)
                    out[k] = base_.add(out[k], base_.mul(c, t[k]));
            }
        }
        return out;
    }

    bool eq(const Elem& a, const Elem& b) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (!base_.eq(a[i], b[i])) return false;
        return true;
    }
    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (!base_.is_zero(c)) return false;
        return true;
    }

    Elem from_integer(const BigInt& n) const { return embed(base_.from_integer(n)); }
    Elem from_rational(const BigRat& q) const { return embed(base_.from_rational(q)); }
    Elem divide_exact_int(const Elem& a, const BigInt& n) const {
        Elem out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) out[i] = base_.divide_exact_int(a[i], n);
        return out;
    }

    // Matrix of multiplication by a on the basis: column j holds a * e_j.
    Matrix<Coeff> mult_matrix(const Elem& a) const {
        Matrix<Coeff> m(dim_, dim_, base_.zero());
        for (std::size_t j = 0; j < dim_; ++j) {
            Elem col = mul(a, basis_elem(j));
            for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    Coeff trace_elem(const Elem& a) const { return mat_trace(base_, mult_matrix(a)); }
    Coeff norm_elem(const Elem& a) const { return det(base_, mult_matrix(a)); }

    Elem inv(const Elem& a) const
        requires RingWithInv<R>
    {
        return solve_linear(base_, mult_matrix(a), unit_);
    }

    BigInt characteristic() const { return base_.characteristic(); }
    bool torsion_free() const { return base_.torsion_free(); }
    bool is_field() const { return false; }

    std::string name() const {
        if (is_monogenic())
            return "FreeAlg(" + base_.name() + "," + var_ + ";" +
                   poly_to_string(base_, modulus_, var_) + ")";
        return "FreeAlg(" + base_.name() + ",rank=" + std::to_string(dim_) + ")";
    }

    std::string to_string(const Elem& a) const {
        std::string out;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (base_.is_zero(a[i])) continue;
            std::string c = base_.to_string(a[i]);
            bool negative = !c.empty() && c[0] == '-';
            std::string mag = negative ? c.substr(1) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (i == 0 && basis_names_[0] == "1")
                out += parenthesize(mag);
            else
                out += (mag == "1") ? basis_names_[i] : parenthesize(mag) + "*" + basis_names_[i];
        }
        return out.empty() ? "0" : out;
    }

private:
    void validate() const {
        // unit law
        for (std::size_t j = 0; j < dim_; ++j) {
            Elem ej(dim_, base_.zero());
            ej[j] = base_.one();
            if (!eq(mul(unit_, ej), ej)) throw domain_error("free algebra unit law fails");
        }
        // commutativity of the table
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (!eq(table_[i * dim_ + j], table_[j * dim_ + i]))
                    throw domain_error("free algebra table is not commutative");
        // associativity on basis triples
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Elem ei(dim_, base_.zero()), ej(dim_, base_.zero()), ek(dim_, base_.zero());
                    ei[i] = base_.one();
                    ej[j] = base_.one();
                    ek[k] = base_.one();
                    if (!eq(mul(mul(ei, ej), ek), mul(ei, mul(ej, ek))))
                        throw domain_error("free algebra table is not associative");
                }
    }

    R base_;
    std::size_t dim_ = 0;
    std::vector<Elem> table_;
    Elem unit_;
    std::vector<std::string> basis_names_;
    Poly<R> modulus_; // nonempty iff monogenic
    std::string var_;
};

} // namespace witt

#endif
