#ifndef LISSAJOUS_PRODUCT_HPP
#define LISSAJOUS_PRODUCT_HPP

#include <optional>
#include <vector>

namespace lissajous {

// Theta(theta) * Phi(phi); the two factors live in separate function spaces.
template <class Space>
struct ProductTerm {
    typename Space::Function theta;
    typename Space::Function phi;
};

// Finite sum of separated products.
template <class Space>
class ProductSum {
public:
    using Function = typename Space::Function;
    using Scalar = typename Space::Scalar;

    ProductSum() = default;
    ProductSum(Function theta, Function phi) { terms_.push_back({std::move(theta), std::move(phi)}); }

    const std::vector<ProductTerm<Space>>& terms() const { return terms_; }

    ProductSum& add(Function theta, Function phi)
    {
        terms_.push_back({std::move(theta), std::move(phi)});
        return *this;
    }
    ProductSum& operator+=(const ProductSum& o)
    {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        return *this;
    }
    ProductSum& operator-=(const ProductSum& o)
    {
        for (const auto& t : o.terms_)
            terms_.push_back({Scalar(-1) * t.theta, t.phi});
        return *this;
    }
    friend ProductSum operator+(ProductSum a, const ProductSum& b) { return a += b; }
    friend ProductSum operator-(ProductSum a, const ProductSum& b) { return a -= b; }
    friend ProductSum operator*(const Scalar& s, ProductSum a)
    {
        for (auto& t : a.terms_)
            t.theta = s * t.theta;
        return a;
    }

    // Exact when one of the two factor families is pairwise proportional or
    // independent; a dependent but non-proportional family reports nonzero.
    bool isZero(const Space& thetaSpace, const Space& phiSpace) const
    {
        return groupedZero(phiSpace, thetaSpace, true) || groupedZero(thetaSpace, phiSpace, false);
    }

private:
    // Group terms whose key factor (phi when byPhi) is proportional and sum the other factor.
    bool groupedZero(const Space& keySpace, const Space& valueSpace, bool byPhi) const
    {
        struct Group {
            Function key;
            Function value;
        };
        std::vector<Group> groups;
        for (const auto& t : terms_) {
            const Function& key = byPhi ? t.phi : t.theta;
            const Function& value = byPhi ? t.theta : t.phi;
            if (keySpace.isZero(key) || valueSpace.isZero(value))
                continue;
            bool placed = false;
            for (auto& g : groups) {
                std::optional<Scalar> r = keySpace.ratio(key, g.key);
                if (r) {
                    g.value = g.value + *r * value;
                    placed = true;
                    break;
                }
            }
            if (!placed)
                groups.push_back({key, value});
        }
        for (const auto& g : groups)
            if (!valueSpace.isZero(g.value))
                return false;
        return true;
    }

    std::vector<ProductTerm<Space>> terms_;
};

} // namespace lissajous

#endif
