#ifndef MWPLET_ARRANGEMENTS_HPP
#define MWPLET_ARRANGEMENTS_HPP

#include "catalog.hpp"

namespace mwplet {

struct Partition3 {
    long k1 = 0, k2 = 0, k3 = 0; // k1 >= k2 >= k3 >= 0
    long k() const { return k1 + k2 + k3; }
    bool operator==(const Partition3&) const = default;
};

// partitions of k into at most three parts, lexicographically descending
std::vector<Partition3> partitions3(long k);

// Number of Young diagrams with k boxes and at most 3 rows. Three
// independent routes (enumeration, the recursion y(k) = 1 + [k/2] + y(k-3),
// and the mod-6 closed forms) are compared and must agree.
long young_count(long k);

enum class ArrangementKind { Weak, Full };

struct ArrangementMember {
    int group = 0;       // 1, 2 or 3: which bisection family
    Rational parameter;
    PlaneCurve conic;
};

struct SingularityCensus {
    long quartic_nodes = 0; // nodes of the branch quartic itself
    long tacnodes = 0;      // conic/quartic contacts
    long member_nodes = 0;  // transverse conic/conic meetings
    long other = 0;
};

struct NTArrangement {
    ArrangementKind kind = ArrangementKind::Weak;
    Partition3 partition;
    std::vector<ArrangementMember> members;
    SingularityCensus census;
};

// Conditions whose bad-parameter loci the scan consults.
struct BadParameterQuery {
    enum class Condition { Nonsmooth, ThroughPoint, ContactBeyondTacnode, NontransverseTo };
    Condition condition;
    std::optional<ProjPoint> point;      // ThroughPoint
    std::optional<PlaneCurve> reference; // NontransverseTo
};

// A nonzero polynomial in the family parameter whose roots contain every bad
// value for the queried condition; nonvanishing is certified by evaluation.
Poly bad_parameter_locus(int family_index, const BadParameterQuery& query);

// Assembles k1 + k2 + k3 family members by the deterministic parameter scan
// and verifies the arrangement conditions (weak: tangency to both quartic
// components; full: additionally pairwise transversality, node/tacnode-only
// singularities and no three curves through one point).
NTArrangement build_arrangement(long k, const Partition3& part, ArrangementKind kind);

// Existence of the degree-2p dihedral cover branched along the quartic and
// the two members: their images are linearly dependent mod p iff the members
// come from the same family.
bool cover_exists(const NTArrangement& arr, int i, int j, long prime);

struct PletEntry {
    Partition3 partition;
    NTArrangement arrangement;
    std::array<long, 3> invariant; // sorted clique sizes of the cover graph
};

struct PletCertificate {
    long k = 0;
    long prime = 0;
    std::vector<PletEntry> entries;
    bool pairwise_distinct = false;
};

PletCertificate certify_plet(long k, long prime);

} // namespace mwplet

#endif
