#ifndef DUALVAR_MONOMIAL_HPP
#define DUALVAR_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dualvar {

// Exponent vector with cached total degree. The slot count always matches the
// VarSet of the owning polynomial; monomials themselves carry no names.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {
        for (auto x : e_) {
            if (x < 0)
                throw std::invalid_argument("Monomial: negative exponent");
            deg_ += x;
        }
    }

    static Monomial variable(std::size_t nvars, std::size_t i, std::int32_t power = 1) {
        Monomial m(nvars);
        m.e_.at(i) = power;
        m.deg_ = power;
        return m;
    }

    std::size_t nvars() const noexcept { return e_.size(); }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::int64_t degree() const noexcept { return deg_; }
    bool is_unit() const noexcept { return deg_ == 0; }

    std::int64_t degree_in(const std::vector<std::size_t>& block) const {
        std::int64_t d = 0;
        for (auto i : block)
            d += e_[i];
        return d;
    }

    bool depends_on(std::size_t i) const { return e_[i] != 0; }

    bool depends_on_any(const std::vector<std::size_t>& block) const {
        for (auto i : block)
            if (e_[i] != 0)
                return true;
        return false;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& m) const {
        if (deg_ > m.deg_)
            return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i])
                return false;
        return true;
    }

    // this / d, assuming d | this.
    Monomial divide_by(const Monomial& d) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= d.e_[i];
            if (r.e_[i] < 0)
                throw std::invalid_argument("Monomial: division not exact");
        }
        r.deg_ -= d.deg_;
        return r;
    }

    Monomial with_exponent(std::size_t i, std::int32_t v) const {
        Monomial r(*this);
        r.deg_ += v - r.e_[i];
        r.e_[i] = v;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::int32_t>& exponents() const noexcept { return e_; }

private:
    std::vector<std::int32_t> e_;
    std::int64_t deg_ = 0;
};

// Graded reverse lexicographic comparison over all slots, ties broken toward
// the variable listed first. Used as the canonical storage/print order.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.nvars(); i-- > 0;) {
        auto d = a[i] - b[i];
        if (d != 0)
            return d > 0; // more of the last variable = smaller
    }
    return false;
}

inline bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        auto d = a[i] - b[i];
        if (d != 0)
            return d < 0;
    }
    return false;
}

} // namespace dualvar

#endif
