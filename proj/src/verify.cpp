#include "ctconfig/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ctconfig/words.hpp"

namespace ctconfig {

bool SuiteResult::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

void SuiteResult::add(const std::string& name, bool pass, const std::string& detail)
{
    checks.push_back({name, pass, detail});
}

void SuiteResult::merge(const SuiteResult& o)
{
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

namespace {

std::string betti_str(const std::map<int, long>& b)
{
    std::string out = "{";
    for (const auto& [d, v] : b)
        out += std::to_string(d) + ":" + std::to_string(v) + " ";
    return out + "}";
}

Scalar sc(long v, const Field& f)
{
    return Scalar::integer(v, f);
}

/* t_k and z_k cocycles of the projective-plane model, at the given n. */
WedgeElement cp2_t(const PDAlgebra& h, int n, int k)
{
    std::vector<int> xs(n - 1, h.unit);
    xs.push_back(k);
    Scalar norm = Scalar::from_mpq(mpq_class(mpz_class(1), factorial(n - 1)), h.field);
    return wedge_term(h, n, std::move(xs), {}, norm);
}

WedgeElement cp2_z0(const PDAlgebra& h, int n)
{
    const Field& f = h.field;
    std::vector<int> a(n - 3, h.unit);
    a.push_back(1);
    std::vector<int> b(n - 3, h.unit);
    b.push_back(2);
    std::vector<int> c(n - 2, h.unit);
    WedgeElement out = wedge_term(h, n, a, {1}, sc(1, f));
    out = wedge_add(out, wedge_term(h, n, b, {0}, sc(-2, f)));
    out = wedge_add(out, wedge_term(h, n, c, {2}, sc(4, f)));
    return out;
}

WedgeElement cp2_z1(const PDAlgebra& h, int n)
{
    const Field& f = h.field;
    std::vector<int> a(n - 3, h.unit);
    a.push_back(2);
    std::vector<int> b(n - 3, h.unit);
    b.push_back(1);
    WedgeElement out = wedge_term(h, n, a, {1}, sc(1, f));
    out = wedge_add(out, wedge_term(h, n, b, {2}, sc(-2, f)));
    return out;
}

WedgeElement cp2_z2(const PDAlgebra& h, int n)
{
    const Field& f = h.field;
    std::vector<int> a(n - 4, h.unit);
    a.push_back(1);
    a.push_back(2);
    std::vector<int> b(n - 4, h.unit);
    b.push_back(1);
    b.push_back(1);
    WedgeElement out = wedge_term(h, n, a, {1}, sc(1, f));
    out = wedge_add(out, wedge_term(h, n, b, {2}, sc(-2, f)));
    return out;
}

bool class_identity(const WedgeComplexData& wc, const Cohomology& coh, int deg,
                    const WedgeElement& lhs, long factor, const WedgeElement& rhs,
                    std::string& why)
{
    const Field& f = wc.h->field;
    try {
        Vec cl = coh.class_coordinates(deg, wc.to_coords(lhs, deg));
        Vec cr = coh.class_coordinates(deg, wc.to_coords(rhs, deg));
        for (auto& x : cr)
            x *= sc(factor, f);
        if (cl != cr) {
            why = "class coordinates differ";
            return false;
        }
        return true;
    } catch (const std::exception& e) {
        why = e.what();
        return false;
    }
}

Vec e1_coords(const std::map<E1Monomial, long>& index, const E1Element& e, long dim,
              const Field& f, bool& ok)
{
    Vec v = zero_vec(dim, f);
    for (const auto& [m, c] : e.terms) {
        auto it = index.find(m);
        if (it == index.end()) {
            ok = false;
            return v;
        }
        v[it->second] = c;
    }
    ok = true;
    return v;
}

WordCombo rho_raw_combo(const PDAlgebra& h, const WordCombo& wedge, bool shifted)
{
    WordCombo out;
    for (const auto& [w, c] : wedge)
        for (const auto& [t, ct] : rho_raw(h, w, shifted))
            add_word(out, t, ct * c);
    return out;
}

std::vector<PDAlgebra> even_test_rings(const Field& f)
{
    return {builtin_ring("sphere:2", f), builtin_ring("cp:2", f), builtin_ring("surface:1", f)};
}

}  // namespace

SuiteResult verify_cp2_betti(const Field& f, int n_max)
{
    SuiteResult out;
    PDAlgebra h = builtin_ring("cp:2", f);
    for (int n = 1; n <= n_max; ++n) {
        std::map<int, long> expected = {{0, 1}, {2, 1}, {4, 1}};
        if (n >= 3) {
            expected[7] = 1;
            expected[9] = 1;
        }
        if (n >= 4)
            expected[11] = 1;
        auto wc = build_wedge_complex(h, n);
        auto b = betti(wc.complex);
        bool pass = (b == expected);
        out.add("cp2 betti n=" + std::to_string(n), pass,
                pass ? "" : "got " + betti_str(b) + " expected " + betti_str(expected));
    }
    return out;
}

SuiteResult verify_cp2_ring(const Field& f, int n_max)
{
    SuiteResult out;
    PDAlgebra h = builtin_ring("cp:2", f);
    for (int n = 2; n <= n_max; ++n) {
        auto wc = build_wedge_complex(h, n);
        auto coh = cohomology(wc.complex);
        WedgeElement t1 = cp2_t(h, n, 1);
        WedgeElement t2 = cp2_t(h, n, 2);

        // cocycle checks
        bool cocycles = wedge_differential(h, t1).is_zero() &&
                        wedge_differential(h, t2).is_zero();
        if (n >= 3)
            cocycles = cocycles && wedge_differential(h, cp2_z0(h, n)).is_zero() &&
                       wedge_differential(h, cp2_z1(h, n)).is_zero();
        if (n >= 4)
            cocycles = cocycles && wedge_differential(h, cp2_z2(h, n)).is_zero();
        out.add("cp2 cocycles n=" + std::to_string(n), cocycles);

        std::string why;
        WedgeElement t1t1 = wedge_multiply(h, t1, t1);
        bool p1 = class_identity(wc, coh, 4, t1t1, 3 - 2 * n, t2, why);
        out.add("cp2 [t1]^2=(3-2n)[t2] n=" + std::to_string(n), p1, p1 ? "" : why);

        WedgeElement t1cube = wedge_multiply(h, t1, t1t1);
        bool p4 = true;
        try {
            Vec c3 = coh.class_coordinates(6, wc.to_coords(t1cube, 6));
            p4 = is_zero_vec(c3);
        } catch (const std::exception& e) {
            p4 = false;
            why = e.what();
        }
        out.add("cp2 [t1]^3=0 n=" + std::to_string(n), p4, p4 ? "" : why);

        if (n >= 3) {
            WedgeElement z0 = cp2_z0(h, n), z1 = cp2_z1(h, n);
            WedgeElement t1z0 = wedge_multiply(h, t1, z0);
            bool p2 = class_identity(wc, coh, 9, t1z0, 3 - 2 * n, z1, why);
            out.add("cp2 [t1][z0]=(3-2n)[z1] n=" + std::to_string(n), p2, p2 ? "" : why);

            WedgeElement t1z1 = wedge_multiply(h, t1, z1);
            if (n == 3) {
                bool p3 = true;
                try {
                    Vec c = coh.class_coordinates(11, wc.to_coords(t1z1, 11));
                    p3 = is_zero_vec(c);
                } catch (const std::exception& e) {
                    p3 = false;
                    why = e.what();
                }
                out.add("cp2 [t1][z1]=0 n=3", p3, p3 ? "" : why);
            } else {
                WedgeElement z2 = cp2_z2(h, n);
                bool p3 = class_identity(wc, coh, 11, t1z1, n - 3, z2, why);
                out.add("cp2 [t1][z1]=(n-3)[z2] n=" + std::to_string(n), p3, p3 ? "" : why);
            }
        }
    }
    return out;
}

SuiteResult verify_oracle_equivalence(const Field& f, int n_max)
{
    SuiteResult out;
    for (const auto& h : even_test_rings(f)) {
        for (int n = 1; n <= n_max; ++n) {
            auto wc = build_wedge_complex(h, n);
            auto inv = build_e1_invariant_complex(h, n);
            auto bw = betti(wc.complex);
            auto bi = betti(inv.complex);
            bool pass = (bw == bi);
            out.add("oracle betti " + h.name + " n=" + std::to_string(n), pass,
                    pass ? "" : "model " + betti_str(bw) + " vs averaged " + betti_str(bi));
        }
    }
    return out;
}

SuiteResult verify_phi_for(const PDAlgebra& h, int n)
{
    SuiteResult out;
    const Field& f = h.field;
    std::mt19937 rng(12345);
    const int edge_deg = h.top_degree - 1;
    {
        {
            auto wb = wedge_basis(h, n);
            auto inv = invariants_basis(h, n);

            // per-bidegree index of the first page
            std::map<Bidegree, std::pair<std::vector<E1Monomial>, std::map<E1Monomial, long>>>
                e1idx;
            for (const auto& block : inv.blocks) {
                auto& entry = e1idx[block.bidegree];
                entry.first = block.monomials;
                for (size_t i = 0; i < block.monomials.size(); ++i)
                    entry.second[block.monomials[i]] = (long)i;
            }

            bool inj = true, image = true, chain = true;
            for (const auto& [key, monos] : wb) {
                Bidegree bideg{key.first - key.second * edge_deg, key.second * edge_deg};
                auto it = e1idx.find(bideg);
                long dim = it == e1idx.end() ? 0 : (long)it->second.first.size();
                if (dim == 0) {
                    if (!monos.empty())
                        image = false;
                    continue;
                }
                std::vector<Vec> cols;
                for (const auto& m : monos) {
                    WedgeElement e;
                    e.n = n;
                    add_term(e, m, Scalar::one(f));
                    E1Element phi = invariant_embedding(h, e);
                    bool ok = true;
                    cols.push_back(e1_coords(it->second.second, phi, dim, f, ok));
                    if (!ok)
                        image = false;

                    // chain map on this monomial
                    E1Element lhs = invariant_embedding(h, wedge_differential(h, e));
                    E1Element rhs = e1_d1(h, phi);
                    if (!e1_equal(lhs, rhs))
                        chain = false;
                }
                if ((long)row_space_basis(cols, dim, f).size() != (long)cols.size())
                    inj = false;

                // image span = invariant span
                const InvariantBlock* block = nullptr;
                for (const auto& bl : inv.blocks)
                    if (bl.bidegree == bideg)
                        block = &bl;
                long inv_dim = block ? (long)block->invariants.size() : 0;
                std::vector<Vec> both = cols;
                if (block)
                    both.insert(both.end(), block->invariants.begin(), block->invariants.end());
                long rank_cols = (long)row_space_basis(cols, dim, f).size();
                long rank_both = (long)row_space_basis(both, dim, f).size();
                if (!(rank_cols == inv_dim && rank_both == rank_cols))
                    image = false;
            }
            out.add("phi injective " + h.name + " n=" + std::to_string(n), inj);
            out.add("phi image=invariants " + h.name + " n=" + std::to_string(n), image);
            out.add("phi chain map " + h.name + " n=" + std::to_string(n), chain);

            // algebra map: exhaustive through n = 3, sampled pairs at n = 4
            std::vector<WedgeMonomial> flat;
            for (const auto& [key, monos] : wb)
                flat.insert(flat.end(), monos.begin(), monos.end());
            auto hom_check = [&](const WedgeMonomial& a, const WedgeMonomial& b) {
                WedgeElement ea, eb;
                ea.n = eb.n = n;
                add_term(ea, a, Scalar::one(f));
                add_term(eb, b, Scalar::one(f));
                E1Element lhs = invariant_embedding(h, wedge_multiply(h, ea, eb));
                E1Element rhs =
                    e1_multiply(h, invariant_embedding(h, ea), invariant_embedding(h, eb));
                return e1_equal(lhs, rhs);
            };
            bool hom = true;
            if (n <= 3) {
                for (const auto& a : flat)
                    for (const auto& b : flat)
                        if (!hom_check(a, b))
                            hom = false;
            } else {
                std::uniform_int_distribution<size_t> pick(0, flat.size() - 1);
                for (int trial = 0; trial < 200 && hom; ++trial)
                    if (!hom_check(flat[pick(rng)], flat[pick(rng)]))
                        hom = false;
            }
            out.add("phi algebra map " + h.name + " n=" + std::to_string(n), hom);
        }
    }
    return out;
}

SuiteResult verify_phi_suite(const Field& f, int n_max)
{
    SuiteResult out;
    for (const auto& h : even_test_rings(f))
        for (int n = 1; n <= n_max; ++n)
            out.merge(verify_phi_for(h, n));
    return out;
}

SuiteResult verify_free_counts(int n_max)
{
    SuiteResult out;
    for (int n = 2; n <= n_max; ++n) {
        mpz_class expected = factorial(n - 1);
        long got = (long)edge_basis(n, n - 1).size();
        bool pass = (expected == got);
        out.add("tree count n=" + std::to_string(n), pass,
                pass ? "" : "got " + std::to_string(got));
    }
    for (int N : {2, 3}) {
        for (int n = 1; n <= n_max; ++n) {
            IntPolynomial counted;
            for (int r = 0; r <= n - 1; ++r) {
                long c = (long)edge_basis(n, r).size();
                if (c != 0)
                    counted.coeffs[r * (N - 1)] = c;
            }
            IntPolynomial closed = poincare_polynomial(n, N);
            bool pass = (counted == closed) && (closed.eval_at_one() == factorial(n));
            out.add("poincare n=" + std::to_string(n) + " N=" + std::to_string(N), pass,
                    pass ? "" : "enumeration " + counted.str() + " vs product " + closed.str());
        }
    }
    return out;
}

SuiteResult verify_tree_invariants(int n_max)
{
    SuiteResult out;
    for (int n = 3; n <= n_max; ++n) {
        for (bool even : {true, false}) {
            std::string tag = std::string(even ? "even" : "odd") + " n=" + std::to_string(n);
            auto full = tree_invariants(n, even, Subgroup::full);
            out.add("tree invariants full " + tag, full.dimension == 0,
                    full.dimension == 0 ? "" : "dim " + std::to_string(full.dimension));
            auto stab = tree_invariants(n, even, Subgroup::stabilizer_of_1);
            bool dim_ok = stab.dimension == 1;
            bool span_ok = true;
            if (!even && dim_ok) {
                // the invariant line is the star at vertex 1
                EdgeMonomial star;
                for (int j = 2; j <= n; ++j)
                    star.edges.push_back({1, j});
                span_ok = stab.basis.size() == 1 && stab.basis[0].size() == 1 &&
                          stab.basis[0].count(star) == 1;
            }
            out.add("tree invariants stabilizer " + tag, dim_ok && span_ok,
                    dim_ok ? (span_ok ? "" : "not the star") : "dim " +
                              std::to_string(stab.dimension));
        }
    }
    return out;
}

SuiteResult verify_pair_counts(int n_max)
{
    SuiteResult out;
    for (int n = 0; n <= n_max; ++n) {
        bool pass = true;
        std::string detail;
        for (int r = 0; 2 * r <= n; ++r) {
            mpz_class formula = pair_partition_count(n, r);
            mpz_class counted = (long)pair_partitions(n, r).size();
            if (formula != counted) {
                pass = false;
                detail = "r=" + std::to_string(r) + ": " + counted.get_str() + " vs " +
                         formula.get_str();
            }
        }
        out.add("pair sets n=" + std::to_string(n), pass, detail);
    }
    return out;
}

SuiteResult verify_odd_dimension(const Field& f, int n_max)
{
    SuiteResult out;
    std::vector<PDAlgebra> rings;
    rings.push_back(builtin_ring("sphere:3", f));
    rings.push_back(product_ring(builtin_ring("torus:1", f), builtin_ring("sphere:2", f)));
    for (const auto& h : rings) {
        for (int n = 1; n <= n_max; ++n) {
            OddCheck oc = odd_invariants_check(h, n);
            std::string detail;
            if (!oc.passes)
                detail = oc.failures.empty() ? std::string("?") : oc.failures.front();
            out.add("odd invariants vanish " + h.name + " n=" + std::to_string(n), oc.passes,
                    detail);

            auto inv = build_e1_invariant_complex(h, n);
            auto b = betti(inv.complex);
            bool pass = (b == oc.betti);
            out.add("odd betti=wedge histogram " + h.name + " n=" + std::to_string(n), pass,
                    pass ? "" : betti_str(b) + " vs " + betti_str(oc.betti));

            if (h.name == "sphere:3" && n >= 2) {
                std::map<int, long> expected = {{0, 1}, {3, 1}};
                out.add("odd sphere:3 b0=b3=1 n=" + std::to_string(n), oc.betti == expected);
            }
        }
    }
    return out;
}

SuiteResult verify_property_suites(const Field& f, int n_max)
{
    SuiteResult out;
    auto evens = even_test_rings(f);
    std::vector<PDAlgebra> all = evens;
    all.push_back(builtin_ring("sphere:3", f));

    // d1 o d1 = 0 on every basis monomial
    for (const auto& h : all) {
        bool pass = true;
        for (int n = 1; n <= n_max; ++n) {
            for (const auto& [bideg, monos] : e1_basis(h, n)) {
                for (const auto& m : monos) {
                    E1Element e;
                    e.n = n;
                    add_term(e, m, Scalar::one(f));
                    if (!e1_d1(h, e1_d1(h, e)).is_zero())
                        pass = false;
                }
            }
        }
        out.add("d1^2=0 " + h.name, pass);
    }

    // wedge differential squares to zero
    for (const auto& h : evens) {
        bool pass = true;
        for (int n = 1; n <= std::min(5, n_max + 1); ++n) {
            for (const auto& [key, monos] : wedge_basis(h, n)) {
                for (const auto& m : monos) {
                    WedgeElement e;
                    e.n = n;
                    add_term(e, m, Scalar::one(f));
                    if (!wedge_differential(h, wedge_differential(h, e)).is_zero())
                        pass = false;
                }
            }
        }
        out.add("d^2=0 " + h.name, pass);
    }

    // equivariance of d1 under transpositions
    for (const auto& h : all) {
        bool pass = true;
        for (int n = 2; n <= std::min(4, n_max); ++n) {
            for (int a = 1; a <= n && pass; ++a)
                for (int b = a + 1; b <= n && pass; ++b) {
                    std::vector<int> tau(n);
                    for (int v = 1; v <= n; ++v)
                        tau[v - 1] = v;
                    std::swap(tau[a - 1], tau[b - 1]);
                    for (const auto& [bideg, monos] : e1_basis(h, n)) {
                        for (const auto& m : monos) {
                            E1Element e;
                            e.n = n;
                            add_term(e, m, Scalar::one(f));
                            if (!e1_equal(sigma_act(h, tau, e1_d1(h, e)),
                                          e1_d1(h, sigma_act(h, tau, e))))
                                pass = false;
                        }
                    }
                }
        }
        out.add("d1 equivariance " + h.name, pass);
    }

    // averaging: idempotent and a cochain map (sampled at n = 4)
    for (const auto& h : evens) {
        bool pass = true;
        for (int n = 2; n <= std::min(4, n_max); ++n) {
            for (const auto& [bideg, monos] : e1_basis(h, n)) {
                size_t limit = n <= 3 ? monos.size() : std::min<size_t>(monos.size(), 3);
                for (size_t i = 0; i < limit; ++i) {
                    E1Element e;
                    e.n = n;
                    add_term(e, monos[i], Scalar::one(f));
                    E1Element avg = average_project(h, e);
                    if (!e1_equal(average_project(h, avg), avg))
                        pass = false;
                    if (!e1_equal(average_project(h, e1_d1(h, e)), e1_d1(h, avg)))
                        pass = false;
                }
            }
        }
        out.add("averaging projector " + h.name, pass);
    }

    // the four symmetrization squares, on words of length <= 4
    for (const auto& h : evens) {
        bool nu_ok = true, nubar_ok = true, red_ok = true, split_ok = true;
        const int max_len = 4;
        for (int len = 0; len <= max_len; ++len) {
            auto words = graded_words(h.degrees, len);
            auto swords = graded_words(shifted_degrees(h), len);
            for (const auto& u : words) {
                // red square (even word lengths)
                if (len % 2 == 0) {
                    WordCombo lhs = rho_raw_combo(h, red_prime(h, u), false);
                    WordCombo rhs = tensor_red(h, rho_raw(h, u, false));
                    if (lhs != rhs)
                        red_ok = false;
                }
                // split square, all split sizes
                for (int p = 0; p <= len; ++p) {
                    std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar> lhs, rhs;
                    for (const auto& split : delta_prime(h, u, p, false)) {
                        Scalar cs = split.sign < 0 ? -Scalar::one(f) : Scalar::one(f);
                        for (const auto& [tl, cl] : rho_raw(h, split.left, false))
                            for (const auto& [tr, cr] : rho_raw(h, split.right, false)) {
                                auto key = std::pair(tl, tr);
                                auto it = lhs.find(key);
                                Scalar add = cs * cl * cr;
                                if (it == lhs.end())
                                    lhs.emplace(key, add);
                                else {
                                    it->second += add;
                                    if (it->second.is_zero())
                                        lhs.erase(it);
                                }
                            }
                    }
                    for (const auto& [t, c] : rho_raw(h, u, false)) {
                        std::vector<int> tl(t.begin(), t.begin() + p);
                        std::vector<int> tr(t.begin() + p, t.end());
                        auto key = std::pair(tl, tr);
                        auto it = rhs.find(key);
                        if (it == rhs.end())
                            rhs.emplace(key, c);
                        else {
                            it->second += c;
                            if (it->second.is_zero())
                                rhs.erase(it);
                        }
                    }
                    if (lhs != rhs)
                        split_ok = false;
                }
                if (len == 0 || len > 3)
                    continue;  // componentwise squares get expensive; <=3 suffices
                for (const auto& v : words) {
                    WordCombo lhs = rho_raw_combo(h, nu_prime(h, u, v), false);
                    WordCombo rhs = tensor_mult(h, rho_raw(h, u, false), rho_raw(h, v, false));
                    if (lhs != rhs)
                        nu_ok = false;
                }
                for (const auto& sv : swords) {
                    WordCombo lhs = rho_raw_combo(h, nu_bar_prime(h, u, sv), true);
                    WordCombo rhs =
                        tensor_action(h, rho_raw(h, u, false), rho_raw(h, sv, true));
                    if (lhs != rhs)
                        nubar_ok = false;
                }
            }
        }
        out.add("square nu " + h.name, nu_ok);
        out.add("square nu-bar " + h.name, nubar_ok);
        out.add("square red " + h.name, red_ok);
        out.add("square split " + h.name, split_ok);
    }

    // invariants of cohomology = cohomology of invariants, dimensionwise
    for (const char* name : {"sphere:2", "cp:2"}) {
        PDAlgebra h = builtin_ring(name, f);
        bool pass = true;
        for (int n = 2; n <= std::min(3, n_max); ++n) {
            auto ec = build_e1_complex(h, n);
            auto coh = cohomology(ec.complex);
            auto inv = build_e1_invariant_complex(h, n);
            auto invb = betti(inv.complex);
            std::map<int, long> fixed_dims;
            for (const auto& [deg, dc] : coh.by_degree) {
                if (dc.reps.empty())
                    continue;
                std::vector<Vec> rows;
                for (const auto& rep : dc.reps) {
                    E1Element e = ec.from_coords(deg, rep);
                    E1Element avg = average_project(h, e);
                    rows.push_back(coh.class_coordinates(deg, ec.to_coords(avg, deg)));
                }
                long rank = (long)row_space_basis(rows, (long)dc.reps.size(), f).size();
                if (rank != 0)
                    fixed_dims[deg] = rank;
            }
            if (fixed_dims != invb)
                pass = false;
        }
        out.add(std::string("H(inv)=inv(H) dims ") + name, pass);
    }

    return out;
}

SuiteResult verify_ring_axioms(const Field& f)
{
    SuiteResult out;
    std::vector<std::string> names = {"sphere:2", "sphere:3", "sphere:4", "cp:1",
                                      "cp:2",     "cp:3",     "surface:0", "surface:1",
                                      "surface:2", "torus:1", "torus:2",  "torus:3"};
    for (const auto& name : names) {
        PDAlgebra h = builtin_ring(name, f);
        auto bad = validate(h);
        out.add("validate " + name, bad.empty(), bad.empty() ? "" : bad.front());
    }
    {
        PDAlgebra p = product_ring(builtin_ring("sphere:2", f), builtin_ring("sphere:3", f));
        auto bad = validate(p);
        out.add("validate sphere:2xsphere:3", bad.empty(), bad.empty() ? "" : bad.front());
        PDAlgebra q = product_ring(builtin_ring("sphere:2", f), builtin_ring("sphere:2", f));
        auto bad2 = validate(q);
        out.add("validate sphere:2xsphere:2", bad2.empty(), bad2.empty() ? "" : bad2.front());
    }

    // diagonal class axioms on a spread of rings
    for (const char* name : {"sphere:2", "sphere:3", "cp:2", "surface:2", "torus:2"}) {
        PDAlgebra h = builtin_ring(name, f);
        DiagonalClass delta = diagonal_class(h);
        bool pass = true;
        for (int i = 0; i < h.dim() && pass; ++i) {
            // (h (x) 1) delta = (1 (x) h) delta
            std::map<std::pair<int, int>, Scalar> left, right;
            for (const auto& [a, b, c] : delta.terms) {
                for (const auto& [k, v] : h.multiply_basis(i, a)) {
                    auto key = std::pair(k, b);
                    auto it = left.find(key);
                    Scalar add = c * v;
                    if (it == left.end())
                        left.emplace(key, add);
                    else {
                        it->second += add;
                        if (it->second.is_zero())
                            left.erase(it);
                    }
                }
                Scalar sign = ((h.degrees[i] & 1) && (h.degrees[a] & 1)) ? -Scalar::one(f)
                                                                         : Scalar::one(f);
                for (const auto& [k, v] : h.multiply_basis(i, b)) {
                    auto key = std::pair(a, k);
                    auto it = right.find(key);
                    Scalar add = sign * c * v;
                    if (it == right.end())
                        right.emplace(key, add);
                    else {
                        it->second += add;
                        if (it->second.is_zero())
                            right.erase(it);
                    }
                }
            }
            if (left != right)
                pass = false;
        }
        out.add(std::string("diagonal class ") + name, pass);
    }
    return out;
}

}  // namespace ctconfig
