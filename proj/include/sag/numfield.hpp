#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sag/interval.hpp"
#include "sag/linalg.hpp"
#include "sag/poly.hpp"

namespace sag {

class NumberField;
using NfRef = std::shared_ptr<const NumberField>;

/// Totally real number field Q(beta), beta a distinguished real root of a
/// monic irreducible integer polynomial. Embeddings are kept as isolating
/// rational intervals, sorted increasingly, refinable on demand (refinement
/// is pure: the stored state never changes after construction).
class NumberField {
  public:
    /// errors: not_monic, not_irreducible, not_totally_real
    static NfRef make(const QPoly& minpoly,
                      std::optional<size_t> distinguished_root = std::nullopt);
    static NfRef rationals();

    const QPoly& minpoly() const { return minpoly_; }
    int degree() const { return degree_; }
    size_t distinguished() const { return distinguished_; }
    /// isolating interval of the i-th embedding of beta, refined to width <= w
    QInterval root(size_t i, const Q& w) const;
    const std::vector<QInterval>& roots_raw() const { return roots_; }

    bool same_field(const NumberField& o) const { return minpoly_ == o.minpoly_ && distinguished_ == o.distinguished_; }

  private:
    NumberField(QPoly p, std::vector<QInterval> roots, size_t dist);
    QPoly minpoly_;
    int degree_;
    std::vector<QInterval> roots_;
    size_t distinguished_;
};

/// Element of a number field on the power basis 1, beta, ..., beta^{d-1}.
class NfElem {
  public:
    NfElem() = default;
    NfElem(NfRef field, std::vector<Q> coords);
    static NfElem constant(const NfRef& field, const Q& v);
    static NfElem gen(const NfRef& field); // beta

    const NfRef& field() const { return K_; }
    const std::vector<Q>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Q rational_value() const; // requires is_rational

    NfElem operator+(const NfElem&) const;
    NfElem operator-(const NfElem&) const;
    NfElem operator*(const NfElem&) const;
    NfElem operator-() const;
    NfElem operator+(const Q&) const;
    NfElem operator*(const Q&) const;
    NfElem inverse() const; // nonzero
    NfElem operator/(const NfElem& o) const { return *this * o.inverse(); }
    NfElem pow(long e) const;
    bool operator==(const NfElem&) const;

    /// certified enclosure of the image under the i-th real embedding
    QInterval embed(size_t i, const Q& width) const;
    QInterval embed_distinguished(const Q& width) const;
    /// exact sign of the i-th embedding image (-1, 0, +1)
    int sign_at(size_t i) const;
    int sign() const; // at the distinguished embedding
    /// exact comparison of the distinguished image with a rational
    int cmp(const Q& r) const;
    /// exact comparison of distinguished images (same field required)
    int cmp(const NfElem& o) const;

    Q norm() const;
    Q trace() const;
    /// minimal polynomial over Q of the number (monic, irreducible)
    QPoly minimal_poly() const;
    QMat mult_matrix() const;

  private:
    NfRef K_;
    std::vector<Q> c_;
    void check_same(const NfElem& o) const;
};

bool is_algebraic_integer(const NfElem& a);
bool is_totally_positive(const NfElem& a); // a != 0
bool is_totally_real_poly(const QPoly& minpoly);

/// sqrt of a totally positive algebraic integer, as the distinguished-root
/// generator of the (possibly larger) field it generates.
/// errors: not_totally_positive, not_integral
NfElem sqrt_totally_positive(const NfElem& a);

struct PrimeIdealData {
    Z p;
    int residue_degree;    // f
    int ramification;      // e
    Z norm;                // p^f
    QPoly local_generator; // monic integer lift of the irreducible factor mod p
    bool squarefree_case;  // minpoly squarefree mod p (Hensel route available)
    size_t n_primes_above; // number of primes above p
};

/// Prime ideals above p in the monogenic-supported case.
/// errors: bad_prime (p not prime), unsupported_ideal_factorization (index obstruction)
std::vector<PrimeIdealData> prime_ideal_above(const NfRef& K, const Z& p);

/// valuation ord_P(a) for nonzero a
long ord_p(const NfElem& a, const PrimeIdealData& P);

struct Height {
    RInterval value;     // enclosure of H, relative width <= tolerance
    RInterval log_value; // enclosure of log H
};

/// Weil height with the uniform 1/[L:Q] normalization.
/// errors: unsupported_ideal_factorization
Height height_number(const NfElem& a, long tol_bits = 30);
Height height_matrix(const NfElem& a, const NfElem& b, const NfElem& c, const NfElem& d,
                     long tol_bits = 30);
Height height_rational(const Q& x, long tol_bits = 30);

/// All units +-u1^e1...uk^ek with |ei| <= budget whose distinguished embedding
/// lies in [lo, hi], sorted increasingly by that embedding. errors: not_a_unit
std::vector<NfElem> unit_sweep(const NfRef& K, const std::vector<NfElem>& fundamental_units,
                               const Q& lo, const Q& hi, int budget);

} // namespace sag
