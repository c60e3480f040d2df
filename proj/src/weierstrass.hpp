#ifndef MWPLET_WEIERSTRASS_HPP
#define MWPLET_WEIERSTRASS_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "mpoly.hpp"
#include "places.hpp"

namespace mwplet {

// Multiplicative fiber I_n at a place, together with the coordinates of the
// node of the Weierstrass fiber (y = 0 there); at the infinite place the
// coordinates refer to the chart u = 1/t, x~ = u^2 x, y~ = u^3 y.
struct FiberPlace {
    Place place;          // finite place or infinity
    int n = 0;            // I_n, n >= 1
    int residue_degree = 1;
    std::optional<std::pair<FieldElem, FieldElem>> node; // absent if outside the tower
};

// y^2 = x^3 + a2(t) x^2 + a4(t) x + a6(t) over a quadratic tower, relatively
// minimal rational elliptic surface normalization: chi = 1, deg a_{2i} <= 2i.
class WeierstrassModel {
public:
    WeierstrassModel(const Poly& a2, const Poly& a4, const Poly& a6, int euler_char = 1);

    // expand a factored right-hand side, monic cubic in x with Q(t) tower
    // coefficients, e.g. (x - t^2 + 2)*(x^2 - 2x + t^2 - 4)
    static WeierstrassModel expand_factored(const MPoly& rhs);

    const Poly& a2() const { return a2_; }
    const Poly& a4() const { return a4_; }
    const Poly& a6() const { return a6_; }
    int euler_char() const { return chi_; }
    Tower tower() const;

    const Poly& discriminant() const { return disc_; }
    const Poly& c4() const { return c4_; }
    MPoly rhs_mpoly() const; // x^3 + a2 x^2 + a4 x + a6 as a (t, x) polynomial

    // f(t, x) with t specialized at a place, a cubic in x over the residue field
    Poly fiber_cubic(const FieldElem& t_value) const;

    // the model in the chart at infinity (variable u = 1/t)
    WeierstrassModel infinity_chart_model() const;

    // I_n classification; additive reduction raises UnsupportedFiber
    std::vector<FiberPlace> classify_fibers() const;
    const FiberPlace* fiber_at(const Place& v, const std::vector<FiberPlace>& fibers) const;

    bool operator==(const WeierstrassModel& o) const;

private:
    void compute_invariants();
    Poly a2_, a4_, a6_;
    Poly disc_, c4_;
    int chi_ = 1;
    // fiber list computed once; copies share the cache, the model is immutable
    struct FiberCache {
        std::mutex lock;
        std::optional<std::vector<FiberPlace>> fibers;
    };
    mutable std::shared_ptr<FiberCache> cache_ = std::make_shared<FiberCache>();
};

} // namespace mwplet

#endif
