#include "sag/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sag/error.hpp"

namespace sag {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_z(const std::vector<Z>& c) {
    std::vector<Q> q(c.size());
    for (size_t i = 0; i < c.size(); ++i) q[i] = Q(c[i]);
    return QPoly(std::move(q));
}

bool QPoly::is_integer() const {
    for (auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

std::vector<Z> QPoly::z_coeffs() const {
    std::vector<Z> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].get_den() != 1) fail(errc::internal, "non-integer coefficient");
        out[i] = c_[i].get_num();
    }
    return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Q> r(std::max(c_.size(), o.c_.size()), Q(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Q> r(c_);
    for (auto& q : r) q = -q;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Q> r(c_.size() + o.c_.size() - 1, Q(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Q& s) const {
    std::vector<Q> r(c_);
    for (auto& q : r) q *= s;
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) fail(errc::internal, "polynomial division by zero");
    std::vector<Q> rem(c_);
    int dd = d.degree();
    if (degree() < dd) return {QPoly(), *this};
    std::vector<Q> quo(degree() - dd + 1, Q(0));
    for (int i = degree(); i >= dd; --i) {
        Q f = rem[i] / d.leading();
        if (f == 0) continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    return *this * (1 / leading());
}

QPoly QPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Q> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Q(static_cast<long>(i));
    return QPoly(std::move(r));
}

Q QPoly::eval(const Q& x) const {
    Q v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

QInterval QPoly::eval(const QInterval& x) const {
    QInterval v{Q(0), Q(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

QPoly QPoly::compose_x2() const {
    if (is_zero()) return {};
    std::vector<Q> r(2 * c_.size() - 1, Q(0));
    for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::shift(const Q& a) const {
    // Horner on P(X + a)
    QPoly r;
    QPoly xa({a, Q(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * xa + QPoly::constant(*it);
    return r;
}

QPoly QPoly::neg_x() const {
    std::vector<Q> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return QPoly(std::move(r));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Q c = c_[i];
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Q a = ::abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        x = y;
        y = r;
    }
    return x.monic();
}

Sturm::Sturm(const QPoly& p) {
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
        auto [q, r] = chain_[chain_.size() - 2].divmod(chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

int Sturm::variations(const Q& x) const {
    int v = 0, last = 0;
    for (auto& p : chain_) {
        Q val = p.eval(x);
        int s = val > 0 ? 1 : val < 0 ? -1 : 0;
        if (s != 0) {
            if (last != 0 && s != last) ++v;
            last = s;
        }
    }
    return v;
}

int Sturm::variations_at_inf(int sign) const {
    int v = 0, last = 0;
    for (auto& p : chain_) {
        if (p.is_zero()) continue;
        int s = p.leading() > 0 ? 1 : -1;
        if (sign < 0 && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int Sturm::count(const Q& a, const Q& b) const { return variations(a) - variations(b); }

int Sturm::count_all() const { return variations_at_inf(-1) - variations_at_inf(1); }

Q Sturm::root_bound() const {
    const QPoly& p = chain_.front();
    if (p.degree() < 1) return Q(1);
    Q m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Q v = ::abs(p[i] / p.leading());
        if (v > m) m = v;
    }
    return m + 1;
}

std::vector<QInterval> isolate_real_roots(const QPoly& p) {
    if (p.degree() < 1) return {};
    QPoly sf = p.monic();
    QPoly g = gcd(sf, sf.derivative());
    if (g.degree() > 0) sf = sf.divmod(g).first.monic(); // squarefree part
    Sturm st(sf);
    Q bound = st.root_bound();
    std::vector<QInterval> out;
    // recursive bisection on (a, b]
    struct Seg { Q a, b; int n; };
    std::vector<Seg> stack{{-bound, bound, st.count(-bound, bound)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            out.push_back({s.a, s.b});
            continue;
        }
        // split point must avoid the finitely many roots
        Q m = (s.a + s.b) / 2;
        for (long k = 3; sf.eval(m) == 0; k += 2) m = s.a + (s.b - s.a) / k;
        int left = st.count(s.a, m);
        stack.push_back({s.a, m, left});
        stack.push_back({m, s.b, s.n - left});
    }
    std::sort(out.begin(), out.end(), [](const QInterval& x, const QInterval& y) { return x.lo < y.lo; });
    // tighten so intervals are pairwise disjoint
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].hi > out[i + 1].lo) {
            out[i] = refine_root(sf, out[i], out[i].width() / 4);
            out[i + 1] = refine_root(sf, out[i + 1], out[i + 1].width() / 4);
        }
    }
    return out;
}

QInterval refine_root(const QPoly& p, QInterval iv, const Q& w) {
    // sign-based bisection; (lo, hi] is assumed isolating
    if (iv.is_point()) return iv;
    if (p.eval(iv.hi) == 0) return {iv.hi, iv.hi};
    Q flo = p.eval(iv.lo);
    while (iv.width() > w) {
        Q m = iv.mid();
        Q fm = p.eval(m);
        if (fm == 0) {
            // exact hit: return a point interval
            return {m, m};
        }
        if ((flo < 0) != (fm < 0)) {
            iv.hi = m;
        } else {
            iv.lo = m;
            flo = fm;
        }
    }
    return iv;
}

} // namespace sag
