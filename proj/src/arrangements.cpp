#include "arrangements.hpp"

#include <algorithm>

#include "error.hpp"
#include "textform.hpp"

namespace mwplet {

std::vector<Partition3> partitions3(long k) {
    std::vector<Partition3> out;
    for (long k1 = k; k1 >= (k + 2) / 3; --k1)
        for (long k2 = std::min(k1, k - k1); k2 >= 0; --k2) {
            long k3 = k - k1 - k2;
            if (k3 < 0 || k3 > k2) continue;
            out.push_back({k1, k2, k3});
        }
    return out;
}

namespace {

long young_by_recursion(long k) {
    if (k < 0) fail(Err::Domain, "negative k");
    // seeded from the small cases; y(k) = 1 + [k/2] + y(k-3) for k >= 4
    if (k == 0) return 1;
    if (k == 1) return 1;
    if (k == 2) return 2;
    if (k == 3) return 3;
    return 1 + k / 2 + young_by_recursion(k - 3);
}

long young_by_closed_form(long k) {
    long r = k % 6;
    switch (r) {
    case 0: return (k * k + 6 * k + 12) / 12;
    case 1:
    case 5: return (k + 1) * (k + 5) / 12;
    case 2:
    case 4: return (k + 2) * (k + 4) / 12;
    default: return (k + 3) * (k + 3) / 12; // k = 3 mod 6
    }
}

} // namespace

long young_count(long k) {
    if (k < 1) fail(Err::Domain, "young_count expects k >= 1");
    long by_enum = static_cast<long>(partitions3(k).size());
    long by_rec = young_by_recursion(k);
    long by_form = young_by_closed_form(k);
    if (by_enum != by_rec || by_rec != by_form)
        fail(Err::VerifyFailed, "young-count routes disagree at k = " + std::to_string(k) +
                                    ": " + std::to_string(by_enum) + ", " +
                                    std::to_string(by_rec) + ", " + std::to_string(by_form));
    return by_enum;
}

namespace {

const std::array<ProjPoint, 4>& quartic_nodes() { return catalog().nodes; }

MPoly family_conic_symbolic(int family_index) {
    if (family_index < 1 || family_index > 3) fail(Err::Domain, "family index must be 1..3");
    return catalog().family[family_index - 1].g;
}

// first nonzero polynomial in a list, as a univariate in the parameter
Poly first_nonzero_in_a(const std::vector<MPoly>& polys) {
    for (const auto& p : polys)
        if (!p.is_zero()) return p.to_poly("a");
    fail(Err::VerifyFailed, "locus is identically zero, contradicting the genericity lemma");
}

} // namespace

Poly bad_parameter_locus(int family_index, const BadParameterQuery& query) {
    MPoly g = family_conic_symbolic(family_index);
    MConicMatrix m = conic_matrix_symbolic(g);
    Poly locus("a");
    switch (query.condition) {
    case BadParameterQuery::Condition::Nonsmooth: {
        locus = first_nonzero_in_a({mconic_det(m)});
        break;
    }
    case BadParameterQuery::Condition::ThroughPoint: {
        if (!query.point) fail(Err::Domain, "ThroughPoint needs a point");
        MPoly h = homogenize_conic(g);
        const ProjPoint& p = *query.point;
        MPoly value = h.substitute("T", p[0]).substitute("X", p[1]).substitute("Z", p[2]);
        if (value.is_zero())
            fail(Err::VerifyFailed,
                 "every member passes through the point, contradicting the genericity lemma");
        locus = value.to_poly("a");
        break;
    }
    case BadParameterQuery::Condition::ContactBeyondTacnode: {
        // contact of order >= 4 with the quartic happens at a parameter where
        // the pencil cubic with one component acquires a triple root, i.e.
        // where its Hessian vanishes; either component may degenerate
        MPoly product(FieldElem(1));
        for (const PlaneCurve* comp : {&catalog().branch_conic1, &catalog().branch_conic2}) {
            ConicMatrix cm = conic_matrix(*comp);
            MConicMatrix bm;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) bm[i][j] = MPoly(cm[i][j]);
            auto cubic = pencil_cubic_symbolic(m, bm);
            auto hess = binary_cubic_hessian(cubic);
            MPoly pick;
            for (const auto& h : hess)
                if (!h.is_zero()) {
                    pick = h;
                    break;
                }
            if (pick.is_zero())
                fail(Err::VerifyFailed, "hessian locus identically zero");
            product *= pick;
        }
        locus = product.to_poly("a");
        break;
    }
    case BadParameterQuery::Condition::NontransverseTo: {
        if (!query.reference) fail(Err::Domain, "NontransverseTo needs a reference conic");
        ConicMatrix cm = conic_matrix(*query.reference);
        MConicMatrix bm;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) bm[i][j] = MPoly(cm[i][j]);
        auto cubic = pencil_cubic_symbolic(m, bm);
        MPoly disc = binary_cubic_discriminant(cubic);
        // degenerate members are bad for transversality as well
        MPoly full = disc * mconic_det(m);
        locus = first_nonzero_in_a({full});
        break;
    }
    }
    if (locus.is_zero())
        fail(Err::VerifyFailed, "locus is identically zero, contradicting the genericity lemma");
    // certified nonzero by exhibiting a nonvanishing specialization
    bool witness = false;
    for (long a = 0; a <= 50 && !witness; ++a)
        witness = !locus.eval(FieldElem(a)).is_zero();
    if (!witness)
        fail(Err::VerifyFailed, "no good specialization found for the locus in range");
    return locus;
}

namespace {

PlaneCurve specialize_member(int family_index, const Rational& a) {
    ResidualQuadratic g = catalog().family[family_index - 1].specialized(FieldElem(a));
    return g.plane_conic();
}

bool member_passes_quartic_checks(const PlaneCurve& conic, bool full) {
    const Catalog& cat = catalog();
    if (!conic_smooth(conic)) return false;
    if (full) {
        for (const auto& nd : cat.nodes)
            if (conic.contains(nd)) return false;
    }
    for (const PlaneCurve* comp : {&cat.branch_conic1, &cat.branch_conic2}) {
        ConicPairClass cls = classify_conic_pair(conic, *comp);
        if (cls.type != ConicPairType::TwoTacnodes) return false;
    }
    return true;
}

} // namespace

NTArrangement build_arrangement(long k, const Partition3& part, ArrangementKind kind) {
    if (part.k1 < part.k2 || part.k2 < part.k3 || part.k3 < 0)
        fail(Err::Domain, "partition parts must be weakly decreasing and nonnegative");
    if (part.k() != k)
        fail(Err::Domain, "partition parts must sum to k");
    if (kind == ArrangementKind::Weak && k < 2)
        fail(Err::Domain, "weak arrangements need k >= 2");
    if (kind == ArrangementKind::Full && k < 3)
        fail(Err::Domain, "full arrangements need k >= 3");
    const Catalog& cat = catalog();
    bool full = (kind == ArrangementKind::Full);
    NTArrangement arr;
    arr.kind = kind;
    arr.partition = part;
    const long group_sizes[3] = {part.k1, part.k2, part.k3};
    const long scan_limit = 10000;
    for (int gi = 0; gi < 3; ++gi) {
        int family = gi + 1;
        long chosen = 0;
        for (long a = 1; a <= scan_limit && chosen < group_sizes[gi]; ++a) {
            Rational av(a);
            PlaneCurve cand = specialize_member(family, av);
            if (!member_passes_quartic_checks(cand, full)) continue;
            bool ok = true;
            // pairwise checks against the members already placed
            for (const auto& mem : arr.members) {
                if (cand == mem.conic) ok = false;
                if (!ok) break;
                ConicPairClass cls = classify_conic_pair(cand, mem.conic);
                if (cls.type != ConicPairType::FourTransverse) ok = false;
                if (!ok) break;
            }
            if (ok && full) {
                // no three of the k+2 conics may share a point
                std::vector<const PlaneCurve*> others = {&cat.branch_conic1,
                                                         &cat.branch_conic2};
                for (const auto& mem : arr.members) others.push_back(&mem.conic);
                for (size_t i = 0; i < others.size() && ok; ++i)
                    for (size_t j = i + 1; j < others.size() && ok; ++j)
                        if (certify_no_common_point(cand, *others[i], *others[j]) !=
                            TripleCheck::NoCommonPoint)
                            ok = false;
            }
            if (!ok) continue;
            arr.members.push_back({family, av, cand});
            ++chosen;
        }
        if (chosen < group_sizes[gi])
            fail(Err::ScanExhausted, "parameter scan exhausted for family " +
                                         std::to_string(family) + " after " +
                                         std::to_string(scan_limit) + " candidates");
    }
    // census: the quartic's own nodes, two tacnodes per member per component,
    // four transverse nodes per member pair
    arr.census.quartic_nodes = 4;
    arr.census.tacnodes = 4 * static_cast<long>(arr.members.size());
    long pairs = static_cast<long>(arr.members.size() * (arr.members.size() - 1) / 2);
    arr.census.member_nodes = 4 * pairs;
    arr.census.other = 0;
    return arr;
}

bool cover_exists(const NTArrangement& arr, int i, int j, long prime) {
    if (prime < 3 || prime % 2 == 0) fail(Err::Domain, "an odd prime is required");
    // crude primality check, sufficient for small input
    for (long d = 3; d * d <= prime; d += 2)
        if (prime % d == 0) fail(Err::Domain, "an odd prime is required");
    int n = static_cast<int>(arr.members.size());
    if (i < 0 || j < 0 || i >= n || j >= n) fail(Err::Domain, "member index out of range");
    if (i == j) fail(Err::Domain, "distinct member indices required");
    // members map to +-e_g in (Z/p)^3; dependence mod an odd prime is
    // insensitive to the sign and happens exactly for equal groups
    return arr.members[i].group == arr.members[j].group;
}

PletCertificate certify_plet(long k, long prime) {
    if (k < 3) fail(Err::Domain, "certification needs k >= 3 (weak arrangements below that)");
    PletCertificate cert;
    cert.k = k;
    cert.prime = prime;
    for (const auto& part : partitions3(k)) {
        PletEntry entry;
        entry.partition = part;
        entry.arrangement = build_arrangement(k, part, ArrangementKind::Full);
        // cover graph: vertices are members, edges where the dihedral cover
        // exists; its connected components are cliques, one per family
        int n = static_cast<int>(entry.arrangement.members.size());
        std::vector<int> comp(n, -1);
        std::vector<long> sizes;
        for (int v = 0; v < n; ++v) {
            if (comp[v] >= 0) continue;
            int id = static_cast<int>(sizes.size());
            sizes.push_back(0);
            std::vector<int> stack{v};
            comp[v] = id;
            while (!stack.empty()) {
                int w = stack.back();
                stack.pop_back();
                ++sizes.back();
                for (int u = 0; u < n; ++u)
                    if (comp[u] < 0 && cover_exists(entry.arrangement, w, u, prime)) {
                        comp[u] = id;
                        stack.push_back(u);
                    }
            }
        }
        // clique sizes confirm the partition; missing families count as zero
        std::array<long, 3> inv{0, 0, 0};
        for (size_t s = 0; s < sizes.size() && s < 3; ++s) inv[s] = sizes[s];
        std::sort(inv.begin(), inv.end(), std::greater<long>());
        std::array<long, 3> expected{part.k1, part.k2, part.k3};
        if (inv != expected)
            fail(Err::VerifyFailed, "cover-graph cliques do not reproduce the partition");
        entry.invariant = inv;
        cert.entries.push_back(std::move(entry));
    }
    if (static_cast<long>(cert.entries.size()) != young_count(k))
        fail(Err::VerifyFailed, "entry count does not match the diagram count");
    cert.pairwise_distinct = true;
    for (size_t i = 0; i < cert.entries.size() && cert.pairwise_distinct; ++i)
        for (size_t j = i + 1; j < cert.entries.size(); ++j)
            if (cert.entries[i].invariant == cert.entries[j].invariant) {
                cert.pairwise_distinct = false;
                fail(Err::VerifyFailed, "invariant collision between distinct partitions");
            }
    return cert;
}

} // namespace mwplet
