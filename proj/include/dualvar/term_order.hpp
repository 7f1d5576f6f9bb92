#ifndef DUALVAR_TERM_ORDER_HPP
#define DUALVAR_TERM_ORDER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "monomial.hpp"

namespace dualvar {

// Monomial order: lex, grevlex, or a block elimination order that compares the
// eliminated block first and the retained block on ties (each block graded
// reverse lex by default; lex inside blocks is available for experiments).
class TermOrder {
public:
    enum class Kind { lex, grevlex, block };

    static TermOrder lex() { return TermOrder(Kind::lex, {}, Kind::lex); }
    static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}, Kind::grevlex); }

    // elim_mask[i] != 0 marks variable i as eliminated (compared first).
    static TermOrder block(std::vector<std::uint8_t> elim_mask, Kind inner = Kind::grevlex) {
        if (inner == Kind::block)
            throw std::invalid_argument("TermOrder: nested block orders");
        return TermOrder(Kind::block, std::move(elim_mask), inner);
    }

    Kind kind() const noexcept { return kind_; }
    const std::vector<std::uint8_t>& elim_mask() const noexcept { return mask_; }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::lex:
            return lex_less(a, b);
        case Kind::grevlex:
            return grevlex_less(a, b);
        case Kind::block: {
            int c = masked_cmp(a, b, true);
            if (c != 0)
                return c < 0;
            return masked_cmp(a, b, false) < 0;
        }
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    bool equal(const Monomial& a, const Monomial& b) const { return a == b; }

    // True when the order is degree-compatible on the full exponent vector.
    bool is_graded() const noexcept { return kind_ == Kind::grevlex; }

private:
    TermOrder(Kind k, std::vector<std::uint8_t> mask, Kind inner)
        : kind_(k), mask_(std::move(mask)), inner_(inner) {}

    // Compare a and b restricted to mask (in_block selects which side),
    // returning <0, 0, >0. Inside a block: graded, then reverse-lex or lex.
    int masked_cmp(const Monomial& a, const Monomial& b, bool in_block) const {
        std::int64_t da = 0, db = 0;
        const std::size_t n = a.nvars();
        for (std::size_t i = 0; i < n; ++i) {
            if (selected(i) != in_block)
                continue;
            da += a[i];
            db += b[i];
        }
        if (da != db)
            return da < db ? -1 : 1;
        if (inner_ == Kind::grevlex) {
            for (std::size_t i = n; i-- > 0;) {
                if (selected(i) != in_block)
                    continue;
                auto d = a[i] - b[i];
                if (d != 0)
                    return d > 0 ? -1 : 1;
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (selected(i) != in_block)
                    continue;
                auto d = a[i] - b[i];
                if (d != 0)
                    return d < 0 ? -1 : 1;
            }
        }
        return 0;
    }

    bool selected(std::size_t i) const { return i < mask_.size() && mask_[i] != 0; }

    Kind kind_;
    std::vector<std::uint8_t> mask_;
    Kind inner_;
};

inline std::vector<std::uint8_t> elimination_mask(std::size_t nvars,
                                                  const std::vector<std::size_t>& block) {
    std::vector<std::uint8_t> mask(nvars, 0);
    for (auto i : block)
        mask.at(i) = 1;
    return mask;
}

} // namespace dualvar

#endif
