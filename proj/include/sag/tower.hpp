#pragma once

#include <array>
#include <memory>

#include "sag/numfield.hpp"

namespace sag {

class TowerCtx;
using TowerRef = std::shared_ptr<const TowerCtx>;

/// Quadratic tower K[s,t]/(s^2 - (u^2+1), t^2 - (u^{-2}+4)) over a totally
/// real field K with a distinguished positive unit u = sinh a. Under the
/// distinguished embedding s and t denote the positive square roots, so
/// s = cosh a and t = 2 cosh b for the trirectangle with angle pi/3.
class TowerCtx : public std::enable_shared_from_this<TowerCtx> {
  public:
    static TowerRef make(const NfElem& u); // errors: non_positive_unit
    const NfRef& base() const { return K_; }
    const NfElem& u() const { return u_; }
    const NfElem& s_sq() const { return v_; }  // u^2 + 1
    const NfElem& t_sq() const { return w_; }  // u^{-2} + 4
    size_t qdim() const { return 4 * K_->degree(); }

  private:
    TowerCtx(NfRef K, NfElem u, NfElem v, NfElem w)
        : K_(std::move(K)), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}
    NfRef K_;
    NfElem u_, v_, w_;
};

/// Element c0 + c1 s + c2 t + c3 st with ci in K. Exact ring arithmetic;
/// certified interval evaluation under the distinguished embedding.
class TowerElem {
  public:
    TowerElem() = default;
    TowerElem(TowerRef ctx, std::array<NfElem, 4> c) : ctx_(std::move(ctx)), c_(std::move(c)) {}
    static TowerElem from_base(const TowerRef& ctx, const NfElem& x);
    static TowerElem constant(const TowerRef& ctx, const Q& v);
    static TowerElem s(const TowerRef& ctx);
    static TowerElem t(const TowerRef& ctx);

    const TowerRef& ctx() const { return ctx_; }
    const std::array<NfElem, 4>& comps() const { return c_; }
    bool is_zero() const;
    bool operator==(const TowerElem&) const;

    TowerElem operator+(const TowerElem&) const;
    TowerElem operator-(const TowerElem&) const;
    TowerElem operator*(const TowerElem&) const;
    TowerElem operator-() const;
    TowerElem operator*(const Q&) const;
    TowerElem inverse() const; // element must be invertible

    /// coordinates in Q^{4d} (K-coords of the four components, concatenated)
    std::vector<Q> qvec() const;
    QInterval embed(const Q& width) const;
    int sign() const;
    int cmp(const Q& r) const;
    RInterval enclosure(mpfr_prec_t prec) const;

    /// minimal polynomial of the multiplication operator (monic over Q)
    QPoly operator_minimal_poly() const;
    /// minimal polynomial over Q of the real number this element denotes
    /// under the distinguished embedding (monic, irreducible)
    QPoly number_minimal_poly() const;

  private:
    TowerRef ctx_;
    std::array<NfElem, 4> c_;
    void check_same(const TowerElem& o) const;
};

/// true iff the denoted real number is an algebraic integer
bool is_algebraic_integer(const TowerElem& x);
/// true iff the denoted real number is totally real (all conjugates real)
bool is_totally_real(const TowerElem& x);

/// rational square-root bracketing: an interval J with J^2 containing v
QInterval qi_sqrt(const QInterval& v, int bits);

} // namespace sag
