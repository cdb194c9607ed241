#include "ctconfig/cohomology.hpp"

#include <cassert>

namespace ctconfig {

long CochainComplex::dim(int degree) const
{
    auto it = basis_labels.find(degree);
    return it == basis_labels.end() ? 0 : (long)it->second.size();
}

const SparseMatrix* CochainComplex::differential(int degree) const
{
    auto it = differentials.find(degree);
    return it == differentials.end() ? nullptr : &it->second;
}

std::vector<int> CochainComplex::square_violations() const
{
    std::vector<int> bad;
    for (const auto& [deg, d] : differentials) {
        const SparseMatrix* next = differential(deg + 1);
        if (!next)
            continue;
        for (long c = 0; c < d.cols(); ++c) {
            Vec x = zero_vec(d.cols(), field);
            x[c] = Scalar::one(field);
            if (!is_zero_vec(next->apply(d.apply(x)))) {
                bad.push_back(deg);
                break;
            }
        }
    }
    return bad;
}

std::map<int, long> betti(const CochainComplex& c)
{
    std::map<int, long> out;
    for (const auto& [deg, labels] : c.basis_labels) {
        long dim = (long)labels.size();
        if (dim == 0)
            continue;
        const SparseMatrix* d = c.differential(deg);
        long rank_out = d ? rank_kernel(*d).rank : 0;
        const SparseMatrix* din = c.differential(deg - 1);
        long rank_in = din ? rank_kernel(*din).rank : 0;
        long b = dim - rank_out - rank_in;
        if (b != 0)
            out[deg] = b;
    }
    return out;
}

std::map<int, long> Cohomology::betti() const
{
    std::map<int, long> out;
    for (const auto& [deg, dc] : by_degree)
        if (!dc.reps.empty())
            out[deg] = (long)dc.reps.size();
    return out;
}

long Cohomology::dim(int degree) const
{
    auto it = by_degree.find(degree);
    return it == by_degree.end() ? 0 : (long)it->second.reps.size();
}

Vec Cohomology::class_coordinates(int degree, const Vec& cocycle) const
{
    auto it = by_degree.find(degree);
    if (it == by_degree.end()) {
        if (!is_zero_vec(cocycle))
            throw std::invalid_argument("class_coordinates: nonzero cocycle in a trivial degree");
        return {};
    }
    const DegreeCohomology& dc = it->second;
    Vec reduced = dc.mod_coboundaries.reduce(cocycle);
    auto x = solve(dc.reduced_rep_matrix, reduced);
    if (!x)
        throw std::invalid_argument("class_coordinates: vector is not a cocycle class");
    return *x;
}

Cohomology cohomology(const CochainComplex& c)
{
    Cohomology out;
    out.field = c.field;
    for (const auto& [deg, labels] : c.basis_labels) {
        long dim = (long)labels.size();
        if (dim == 0)
            continue;

        // image of the incoming differential
        std::vector<Vec> image;
        if (const SparseMatrix* din = c.differential(deg - 1)) {
            for (long col = 0; col < din->cols(); ++col) {
                Vec x = zero_vec(din->cols(), c.field);
                x[col] = Scalar::one(c.field);
                Vec y = din->apply(x);
                if (!is_zero_vec(y))
                    image.push_back(std::move(y));
            }
        }

        // kernel of the outgoing differential
        std::vector<Vec> kernel;
        if (const SparseMatrix* d = c.differential(deg)) {
            kernel = rank_kernel(*d).kernel;
        } else {
            for (long i = 0; i < dim; ++i) {
                Vec x = zero_vec(dim, c.field);
                x[i] = Scalar::one(c.field);
                kernel.push_back(std::move(x));
            }
        }

        DegreeCohomology dc(Quotient(image, dim, c.field), c.field);
        // greedily accept kernel vectors whose class is new
        std::vector<Vec> accepted_reduced;
        for (const auto& k : kernel) {
            Vec r = dc.mod_coboundaries.reduce(k);
            if (is_zero_vec(r))
                continue;
            accepted_reduced.push_back(std::move(r));
            auto basis =
                row_space_basis(accepted_reduced, dc.mod_coboundaries.dim(), c.field);
            if ((long)basis.size() == (long)accepted_reduced.size())
                dc.reps.push_back(k);
            else
                accepted_reduced.pop_back();
        }
        // columns = reduced representatives, for class-coordinate solving
        SparseMatrix repmat(dc.mod_coboundaries.dim(), (long)dc.reps.size(), c.field);
        for (size_t j = 0; j < dc.reps.size(); ++j) {
            Vec r = dc.mod_coboundaries.reduce(dc.reps[j]);
            for (long i = 0; i < (long)r.size(); ++i)
                repmat.set(i, (long)j, r[i]);
        }
        dc.reduced_rep_matrix = std::move(repmat);
        out.by_degree.emplace(deg, std::move(dc));
    }
    return out;
}

/* ---- wedge model ---- */

Vec WedgeComplexData::to_coords(const WedgeElement& e, int degree) const
{
    auto it = monomials.find(degree);
    long dim = it == monomials.end() ? 0 : (long)it->second.size();
    Vec v = zero_vec(dim, h->field);
    if (e.is_zero())
        return v;
    std::map<WedgeMonomial, long> index;
    if (it != monomials.end())
        for (size_t i = 0; i < it->second.size(); ++i)
            index[it->second[i]] = (long)i;
    for (const auto& [m, c] : e.terms) {
        auto jt = index.find(m);
        if (jt == index.end())
            throw std::invalid_argument("to_coords: monomial outside the stated degree");
        v[jt->second] = c;
    }
    return v;
}

WedgeElement WedgeComplexData::from_coords(int degree, const Vec& v) const
{
    WedgeElement e;
    e.n = n;
    auto it = monomials.find(degree);
    if (it == monomials.end())
        return e;
    assert(v.size() == it->second.size());
    for (size_t i = 0; i < it->second.size(); ++i)
        add_term(e, it->second[i], v[i]);
    return e;
}

WedgeComplexData build_wedge_complex(const PDAlgebra& h, int n)
{
    WedgeComplexData wc;
    wc.h = &h;
    wc.n = n;
    wc.complex.field = h.field;

    for (auto& [key, monos] : wedge_basis(h, n)) {
        auto& list = wc.monomials[key.first];
        for (auto& m : monos)
            list.push_back(std::move(m));
    }
    for (const auto& [deg, monos] : wc.monomials) {
        auto& labels = wc.complex.basis_labels[deg];
        for (const auto& m : monos)
            labels.push_back(m.str(h));
    }
    for (const auto& [deg, monos] : wc.monomials) {
        long target_dim = 0;
        auto it = wc.monomials.find(deg + 1);
        if (it != wc.monomials.end())
            target_dim = (long)it->second.size();
        SparseMatrix d(target_dim, (long)monos.size(), h.field);
        for (size_t j = 0; j < monos.size(); ++j) {
            WedgeElement e;
            e.n = n;
            add_term(e, monos[j], Scalar::one(h.field));
            WedgeElement de = wedge_differential(h, e);
            if (de.is_zero())
                continue;
            Vec col = wc.to_coords(de, deg + 1);
            for (long i = 0; i < (long)col.size(); ++i)
                d.set(i, (long)j, col[i]);
        }
        wc.complex.differentials.emplace(deg, std::move(d));
    }
    return wc;
}

/* ---- first-page complexes ---- */

Vec E1ComplexData::to_coords(const E1Element& e, int degree) const
{
    auto it = monomials.find(degree);
    long dim = it == monomials.end() ? 0 : (long)it->second.size();
    Vec v = zero_vec(dim, h->field);
    if (e.is_zero())
        return v;
    std::map<E1Monomial, long> index;
    if (it != monomials.end())
        for (size_t i = 0; i < it->second.size(); ++i)
            index[it->second[i]] = (long)i;
    for (const auto& [m, c] : e.terms) {
        auto jt = index.find(m);
        if (jt == index.end())
            throw std::invalid_argument("to_coords: monomial outside the stated degree");
        v[jt->second] = c;
    }
    return v;
}

E1Element E1ComplexData::from_coords(int degree, const Vec& v) const
{
    E1Element e;
    e.n = n;
    auto it = monomials.find(degree);
    if (it == monomials.end())
        return e;
    assert(v.size() == it->second.size());
    for (size_t i = 0; i < it->second.size(); ++i)
        add_term(e, it->second[i], v[i]);
    return e;
}

E1ComplexData build_e1_complex(const PDAlgebra& h, int n)
{
    E1ComplexData ec;
    ec.h = &h;
    ec.n = n;
    ec.complex.field = h.field;

    for (auto& [bideg, monos] : e1_basis(h, n)) {
        auto& list = ec.monomials[bideg.t + bideg.s];
        for (auto& m : monos)
            list.push_back(std::move(m));
    }
    for (const auto& [deg, monos] : ec.monomials) {
        auto& labels = ec.complex.basis_labels[deg];
        for (const auto& m : monos)
            labels.push_back(m.str(h));
    }
    for (const auto& [deg, monos] : ec.monomials) {
        long target_dim = 0;
        auto it = ec.monomials.find(deg + 1);
        if (it != ec.monomials.end())
            target_dim = (long)it->second.size();
        SparseMatrix d(target_dim, (long)monos.size(), h.field);
        for (size_t j = 0; j < monos.size(); ++j) {
            E1Element e;
            e.n = n;
            add_term(e, monos[j], Scalar::one(h.field));
            E1Element de = e1_d1(h, e);
            if (de.is_zero())
                continue;
            Vec col = ec.to_coords(de, deg + 1);
            for (long i = 0; i < (long)col.size(); ++i)
                d.set(i, (long)j, col[i]);
        }
        ec.complex.differentials.emplace(deg, std::move(d));
    }
    return ec;
}

E1InvariantComplexData build_e1_invariant_complex(const PDAlgebra& h, int n)
{
    E1ComplexData ec = build_e1_complex(h, n);
    InvariantBasis inv = invariants_basis(h, n);

    E1InvariantComplexData out;
    out.n = n;
    out.complex.field = h.field;

    // per total degree: invariant basis elements, and their coordinates in
    // the full monomial basis of that degree
    std::map<int, std::vector<Vec>> coords;
    for (const auto& block : inv.blocks) {
        int deg = block.bidegree.t + block.bidegree.s;
        for (const auto& v : block.invariants) {
            E1Element e;
            e.n = n;
            for (size_t i = 0; i < block.monomials.size(); ++i)
                add_term(e, block.monomials[i], v[i]);
            coords[deg].push_back(ec.to_coords(e, deg));
            out.basis[deg].push_back(std::move(e));
        }
    }
    for (const auto& [deg, elems] : out.basis) {
        auto& labels = out.complex.basis_labels[deg];
        for (size_t i = 0; i < elems.size(); ++i)
            labels.push_back("inv" + std::to_string(deg) + "_" + std::to_string(i));
    }

    for (const auto& [deg, elems] : out.basis) {
        long target_dim = 0;
        auto it = out.basis.find(deg + 1);
        if (it != out.basis.end())
            target_dim = (long)it->second.size();

        // target invariant vectors as columns over the full monomial basis
        long full_dim = ec.complex.dim(deg + 1);
        SparseMatrix target(full_dim, target_dim, h.field);
        if (it != out.basis.end()) {
            const auto& tcoords = coords.at(deg + 1);
            for (long j = 0; j < target_dim; ++j)
                for (long i = 0; i < full_dim; ++i)
                    target.set(i, j, tcoords[j][i]);
        }

        SparseMatrix d(target_dim, (long)elems.size(), h.field);
        for (size_t j = 0; j < elems.size(); ++j) {
            E1Element de = e1_d1(h, elems[j]);
            if (de.is_zero())
                continue;
            Vec full = ec.to_coords(de, deg + 1);
            auto x = solve(target, full);
            if (!x)
                throw std::logic_error("differential of an invariant is not invariant");
            for (long i = 0; i < target_dim; ++i)
                d.set(i, (long)j, (*x)[i]);
        }
        out.complex.differentials.emplace(deg, std::move(d));
    }
    return out;
}

/* ---- ring tables ---- */

RingTable ring_table(const WedgeComplexData& wc, const Cohomology& coh)
{
    const PDAlgebra& h = *wc.h;
    RingTable out;
    out.betti = coh.betti();
    for (const auto& [deg, dc] : coh.by_degree)
        for (size_t i = 0; i < dc.reps.size(); ++i)
            out.classes.push_back(
                {deg, (long)i, "h" + std::to_string(deg) + "_" + std::to_string(i)});

    for (size_t a = 0; a < out.classes.size(); ++a) {
        for (size_t b = 0; b < out.classes.size(); ++b) {
            const auto& ca = out.classes[a];
            const auto& cb = out.classes[b];
            WedgeElement ea =
                wc.from_coords(ca.degree, coh.by_degree.at(ca.degree).reps[ca.index]);
            WedgeElement eb =
                wc.from_coords(cb.degree, coh.by_degree.at(cb.degree).reps[cb.index]);
            WedgeElement prod = wedge_multiply(h, ea, eb);
            // the chain-level product of cocycles must be a cocycle
            if (!wedge_differential(h, prod).is_zero())
                throw std::logic_error("ring_table: product is not compatible with the "
                                       "differential");
            int pdeg = ca.degree + cb.degree;
            Vec coords;
            if (coh.dim(pdeg) > 0)
                coords = coh.class_coordinates(pdeg, wc.to_coords(prod, pdeg));
            out.products[{(long)a, (long)b}] = coords;
        }
    }
    return out;
}

RingTable odd_ring_table(const PDAlgebra& h, int n)
{
    OddCheck oc = odd_invariants_check(h, n);
    if (!oc.passes)
        throw std::logic_error("odd route: invariants with edges did not vanish");

    RingTable out;
    out.betti = oc.betti;
    // classes ordered by degree, then enumeration order
    std::map<int, std::vector<std::vector<int>>> by_degree;
    for (const auto& [word, deg] : oc.wedge_basis)
        by_degree[deg].push_back(word);
    std::map<std::vector<int>, std::pair<int, long>> index;
    for (const auto& [deg, words] : by_degree)
        for (size_t i = 0; i < words.size(); ++i) {
            index[words[i]] = {deg, (long)i};
            out.classes.push_back(
                {deg, (long)i, "h" + std::to_string(deg) + "_" + std::to_string(i)});
        }

    std::vector<std::vector<int>> flat;
    for (const auto& c : out.classes)
        flat.push_back(by_degree.at(c.degree)[c.index]);

    for (size_t a = 0; a < flat.size(); ++a)
        for (size_t b = 0; b < flat.size(); ++b) {
            WordCombo prod = nu_prime(h, flat[a], flat[b]);
            int pdeg = out.classes[a].degree + out.classes[b].degree;
            Vec coords = zero_vec(
                by_degree.count(pdeg) ? (long)by_degree.at(pdeg).size() : 0, h.field);
            for (const auto& [w, c] : prod) {
                auto it = index.find(w);
                if (it == index.end())
                    throw std::logic_error("odd ring table: product left the basis");
                coords[it->second.second] += c;
            }
            out.products[{(long)a, (long)b}] = coords;
        }
    return out;
}

}  // namespace ctconfig
