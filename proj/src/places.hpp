#ifndef MWPLET_PLACES_HPP
#define MWPLET_PLACES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace mwplet {

// A closed point of P^1 over the working tower: either a monic irreducible
// polynomial of degree 1 or 2, or the infinite place.
class Place {
public:
    Place() : infinite_(true) {} // defaults to the infinite place
    static Place infinity();
    static Place finite(const Poly& monic_irreducible); // trusts irreducibility
    static Place at_root(const FieldElem& root, const std::string& var = "t");

    bool is_infinity() const { return infinite_; }
    const Poly& pi() const;
    int degree() const { return infinite_ ? 1 : pi_.degree(); }
    // root of a degree-1 place
    FieldElem root() const;

    bool operator==(const Place& o) const;
    std::string str() const;

private:
    bool infinite_ = false;
    Poly pi_{"t"};
};

// Element of the residue field K[t]/(pi), for finite places.
class Residue {
public:
    Residue(const Place& place, const Poly& value); // reduces mod pi
    static Residue of_field_elem(const Place& place, const FieldElem& c);

    const Place& place() const { return place_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    // the residue as a tower element, when it lies in the base tower
    std::optional<FieldElem> as_field_elem() const;

    Residue operator-() const;
    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue inverse() const;
    bool operator==(const Residue& o) const;
    bool operator!=(const Residue& o) const { return !(*this == o); }

private:
    Place place_;
    Poly rep_;
};

// multiplicity of pi in p (0 if coprime); p nonzero
int poly_ord_at(const Poly& p, const Place& v);
// ord_v of a nonzero rational function; at infinity deg(den) - deg(num)
int place_valuation(const RatFunc& r, const Place& v);

// value of p mod pi
Residue poly_mod(const Poly& p, const Place& v);
// value of a rational function at a finite place; nullopt on a pole
std::optional<Residue> ratfunc_at(const RatFunc& r, const Place& v);

struct PlaceFactor {
    Place place;
    int multiplicity;
};

// Complete factorization of p into places over the given ambient tower
// (places of residue degree >= 3 raise UnsupportedPlace). Factors are
// ordered by (degree, canonical coefficient text).
std::vector<PlaceFactor> factor_into_places(const Poly& p, const Tower& ambient);

// Roots of a squarefree polynomial inside the ambient tower, with the
// cofactor left after dividing them out.
std::pair<std::vector<FieldElem>, Poly> tower_roots(const Poly& squarefree, const Tower& ambient);

} // namespace mwplet

#endif
