#include "ctconfig/e1_page.hpp"

#include <cassert>
#include <cstdlib>

#include "ctconfig/words.hpp"

namespace ctconfig {

int max_point_count()
{
    static int guard = [] {
        int g = 8;
        if (const char* env = std::getenv("CTCONFIG_MAX_N")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 0 && v < g)
                g = (int)v;
        }
        return g;
    }();
    return guard;
}

void check_point_guard(int n)
{
    if (n > max_point_count())
        throw GuardError("n = " + std::to_string(n) + " exceeds the combinatorial guard " +
                         std::to_string(max_point_count()));
}

void check_char_guard(const Field& f, int n)
{
    long p = f.characteristic();
    if (p != 0 && p <= n)
        throw FieldError("field characteristic " + std::to_string(p) +
                         " must exceed n = " + std::to_string(n));
}

std::string E1Monomial::str(const PDAlgebra& h) const
{
    std::string out;
    for (size_t v = 0; v < labels.size(); ++v) {
        if (!out.empty())
            out += "(x)";
        out += h.labels[labels[v]];
    }
    if (!forest.edges.empty())
        out += "." + forest.str();
    return out;
}

void add_term(E1Element& e, const E1Monomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = e.terms.find(m);
    if (it == e.terms.end()) {
        e.terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            e.terms.erase(it);
    }
}

E1Element e1_add(const E1Element& a, const E1Element& b)
{
    assert(a.n == b.n || a.is_zero() || b.is_zero());
    E1Element r = a;
    if (r.n == 0)
        r.n = b.n;
    for (const auto& [m, c] : b.terms)
        add_term(r, m, c);
    return r;
}

E1Element e1_scale(const E1Element& a, const Scalar& c)
{
    E1Element r;
    r.n = a.n;
    for (const auto& [m, v] : a.terms)
        add_term(r, m, v * c);
    return r;
}

bool e1_equal(const E1Element& a, const E1Element& b)
{
    return a.terms == b.terms;
}

Bidegree bidegree_of(const PDAlgebra& h, const E1Monomial& m)
{
    Bidegree b;
    for (int l : m.labels)
        b.t += h.degrees[l];
    b.s = m.forest.edge_count() * (h.top_degree - 1);
    return b;
}

int total_degree_of(const PDAlgebra& h, const E1Monomial& m)
{
    Bidegree b = bidegree_of(h, m);
    return b.t + b.s;
}

namespace {

/* incoming[v-1] = source of the edge ending at v, or 0 when v is a root */
std::vector<int> incoming_map(int n, const EdgeMonomial& forest)
{
    std::vector<int> in(n, 0);
    for (const auto& [i, j] : forest.edges)
        in[j - 1] = i;
    return in;
}

/* Transport every label that sits at a non-root vertex to the root of its
 * component using the edge relation, accumulating the Koszul sign picked up
 * when the label crosses the labels strictly between source and target. */
void normalize_labels_into(const PDAlgebra& h, int n, const EdgeMonomial& forest,
                           std::vector<int> labels, Scalar coeff, E1Element& out)
{
    auto in = incoming_map(n, forest);
    struct Item {
        std::vector<int> labels;
        Scalar coeff;
    };
    std::vector<Item> work;
    work.push_back({std::move(labels), std::move(coeff)});
    while (!work.empty()) {
        Item t = std::move(work.back());
        work.pop_back();
        int v = 0;
        for (int w = n; w >= 1; --w)
            if (in[w - 1] != 0 && t.labels[w - 1] != h.unit) {
                v = w;
                break;
            }
        if (v == 0) {
            add_term(out, E1Monomial{forest, std::move(t.labels)}, t.coeff);
            continue;
        }
        int u = in[v - 1];
        int a = t.labels[v - 1];
        int between = 0;
        for (int w = u + 1; w < v; ++w)
            between += h.degrees[t.labels[w - 1]];
        Scalar sign = ((h.degrees[a] & 1) && (between & 1)) ? -Scalar::one(h.field)
                                                            : Scalar::one(h.field);
        for (const auto& [k, cv] : h.multiply_basis(t.labels[u - 1], a)) {
            Item next;
            next.labels = t.labels;
            next.labels[v - 1] = h.unit;
            next.labels[u - 1] = k;
            next.coeff = t.coeff * sign * cv;
            if (!next.coeff.is_zero())
                work.push_back(std::move(next));
        }
    }
}

int label_degree_sum(const PDAlgebra& h, const std::vector<int>& labels)
{
    int t = 0;
    for (int l : labels)
        t += h.degrees[l];
    return t;
}

}  // namespace

std::map<Bidegree, std::vector<E1Monomial>> e1_basis(const PDAlgebra& h, int n)
{
    if (n < 1)
        throw GuardError("e1_basis needs n >= 1");
    check_point_guard(n);
    std::map<Bidegree, std::vector<E1Monomial>> out;
    for (int r = 0; r <= n - 1; ++r) {
        for (const auto& forest : edge_basis(n, r)) {
            auto in = incoming_map(n, forest);
            std::vector<int> roots;
            for (int v = 1; v <= n; ++v)
                if (in[v - 1] == 0)
                    roots.push_back(v);
            std::vector<int> labels(n, h.unit);
            auto rec = [&](auto&& self, size_t pos) -> void {
                if (pos == roots.size()) {
                    E1Monomial m{forest, labels};
                    out[bidegree_of(h, m)].push_back(std::move(m));
                    return;
                }
                for (int l = 0; l < h.dim(); ++l) {
                    labels[roots[pos] - 1] = l;
                    self(self, pos + 1);
                }
                labels[roots[pos] - 1] = h.unit;
            };
            rec(rec, 0);
        }
    }
    return out;
}

E1Element e1_multiply(const PDAlgebra& h, const E1Element& a, const E1Element& b)
{
    if (!a.is_zero() && !b.is_zero() && a.n != b.n)
        throw std::invalid_argument("e1_multiply: mismatched point counts");
    const int n = a.n;
    const bool even = h.even_dimensional();
    const int edge_deg = h.top_degree - 1;
    E1Element out;
    out.n = n;

    for (const auto& [ma, ca] : a.terms) {
        int a_edge_parity = (ma.forest.edge_count() * edge_deg) & 1;
        for (const auto& [mb, cb] : b.terms) {
            Scalar coeff = ca * cb;
            // A's edge block crosses B's whole label block
            if (a_edge_parity && (label_degree_sum(h, mb.labels) & 1))
                coeff = -coeff;
            // componentwise label product: b-label at v crosses a-labels after v
            int sign = 1;
            for (int v = 1; v <= n; ++v) {
                if (!(h.degrees[mb.labels[v - 1]] & 1))
                    continue;
                int later = 0;
                for (int w = v + 1; w <= n; ++w)
                    later += h.degrees[ma.labels[w - 1]];
                if (later & 1)
                    sign = -sign;
            }
            if (sign < 0)
                coeff = -coeff;

            // expand per-vertex products
            struct Partial {
                std::vector<int> labels;
                Scalar coeff;
            };
            std::vector<Partial> parts{{std::vector<int>(n, h.unit), coeff}};
            for (int v = 1; v <= n && !parts.empty(); ++v) {
                std::vector<Partial> next;
                for (const auto& p : parts) {
                    for (const auto& [k, cv] :
                         h.multiply_basis(ma.labels[v - 1], mb.labels[v - 1])) {
                        Partial q = p;
                        q.labels[v - 1] = k;
                        q.coeff *= cv;
                        if (!q.coeff.is_zero())
                            next.push_back(std::move(q));
                    }
                }
                parts = std::move(next);
            }
            if (parts.empty())
                continue;

            std::vector<std::pair<int, int>> raw = ma.forest.edges;
            raw.insert(raw.end(), mb.forest.edges.begin(), mb.forest.edges.end());
            EdgeCombo forests = straighten(n, even, std::move(raw), Scalar::one(h.field));
            for (const auto& [forest, ce] : forests)
                for (const auto& p : parts)
                    normalize_labels_into(h, n, forest, p.labels, p.coeff * ce, out);
        }
    }
    return out;
}

E1Element e1_d1(const PDAlgebra& h, const E1Element& a)
{
    const int n = a.n;
    const int edge_deg = h.top_degree - 1;
    DiagonalClass delta = diagonal_class(h);
    E1Element out;
    out.n = n;

    for (const auto& [m, c] : a.terms) {
        int tpar = label_degree_sum(h, m.labels) & 1;
        const auto& edges = m.forest.edges;
        for (size_t s = 0; s < edges.size(); ++s) {
            Scalar base = c;
            if (tpar)
                base = -base;
            if ((edge_deg & 1) && (s & 1))
                base = -base;  // Leibniz over the preceding odd edge factors

            EdgeMonomial rest;
            for (size_t k = 0; k < edges.size(); ++k)
                if (k != s)
                    rest.edges.push_back(edges[k]);
            int i = edges[s].first, j = edges[s].second;

            for (const auto& [u, v, cd] : delta.terms) {
                int sign = 1;
                if (h.degrees[u] & 1) {
                    int later = 0;
                    for (int w = i + 1; w <= n; ++w)
                        later += h.degrees[m.labels[w - 1]];
                    if (later & 1)
                        sign = -sign;
                }
                if (h.degrees[v] & 1) {
                    int later = 0;
                    for (int w = j + 1; w <= n; ++w)
                        later += h.degrees[m.labels[w - 1]];
                    if (later & 1)
                        sign = -sign;
                }
                Scalar coeff = base * cd;
                if (sign < 0)
                    coeff = -coeff;

                for (const auto& [ki, ci] : h.multiply_basis(m.labels[i - 1], u)) {
                    for (const auto& [kj, cj] : h.multiply_basis(m.labels[j - 1], v)) {
                        std::vector<int> labels = m.labels;
                        labels[i - 1] = ki;
                        labels[j - 1] = kj;
                        normalize_labels_into(h, n, rest, std::move(labels),
                                              coeff * ci * cj, out);
                    }
                }
            }
        }
    }
    return out;
}

E1Element sigma_act(const PDAlgebra& h, const std::vector<int>& perm, const E1Element& a)
{
    const int n = a.n;
    assert((int)perm.size() == n);
    const bool even = h.even_dimensional();
    E1Element out;
    out.n = n;

    for (const auto& [m, c] : a.terms) {
        std::vector<int> degs(n), pos(n);
        for (int v = 1; v <= n; ++v) {
            degs[v - 1] = h.degrees[m.labels[v - 1]];
            pos[v - 1] = perm[v - 1];
        }
        int sign = graded_rearrangement_sign(degs, pos);
        std::vector<int> labels(n, h.unit);
        for (int v = 1; v <= n; ++v)
            labels[perm[v - 1] - 1] = m.labels[v - 1];

        Scalar coeff = sign < 0 ? -c : c;
        for (const auto& [forest, ce] : act(n, even, perm, m.forest, coeff))
            normalize_labels_into(h, n, forest, labels, ce, out);
    }
    return out;
}

E1Element average_project(const PDAlgebra& h, const E1Element& a)
{
    const int n = a.n;
    check_point_guard(n);
    check_char_guard(h.field, n);
    Scalar norm = Scalar::from_mpq(mpq_class(mpz_class(1), factorial(n)), h.field);
    E1Element out;
    out.n = n;
    for (const auto& perm : permutations(n))
        out = e1_add(out, sigma_act(h, perm, a));
    return e1_scale(out, norm);
}

long InvariantBasis::total_dim() const
{
    long d = 0;
    for (const auto& b : blocks)
        d += (long)b.invariants.size();
    return d;
}

InvariantBasis invariants_basis(const PDAlgebra& h, int n)
{
    check_point_guard(n);
    check_char_guard(h.field, n);
    InvariantBasis out;
    out.n = n;
    for (auto& [bideg, monomials] : e1_basis(h, n)) {
        std::map<E1Monomial, long> index;
        for (size_t i = 0; i < monomials.size(); ++i)
            index[monomials[i]] = (long)i;
        std::vector<Vec> rows;
        for (const auto& m : monomials) {
            E1Element e;
            e.n = n;
            add_term(e, m, Scalar::one(h.field));
            E1Element avg = average_project(h, e);
            Vec row = zero_vec((long)monomials.size(), h.field);
            for (const auto& [mm, c] : avg.terms)
                row[index.at(mm)] = c;
            rows.push_back(std::move(row));
        }
        InvariantBlock block;
        block.bidegree = bideg;
        block.monomials = monomials;
        block.invariants = row_space_basis(rows, (long)monomials.size(), h.field);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

OddCheck odd_invariants_check(const PDAlgebra& h, int n)
{
    if (h.even_dimensional())
        throw std::invalid_argument("odd_invariants_check needs an odd-dimensional ring");
    check_point_guard(n);
    check_char_guard(h.field, n);

    OddCheck out;
    out.passes = true;
    for (const auto& block : invariants_basis(h, n).blocks) {
        if (block.bidegree.s == 0 || block.invariants.empty())
            continue;
        out.passes = false;
        out.failures.push_back("invariant of bidegree (" + std::to_string(block.bidegree.t) +
                               "," + std::to_string(block.bidegree.s) + ") with " +
                               std::to_string(block.invariants.size()) +
                               " dimensions survives averaging");
    }

    for (const auto& word : graded_words(h.degrees, n)) {
        int deg = 0;
        for (int l : word)
            deg += h.degrees[l];
        out.wedge_basis.push_back({word, deg});
        out.betti[deg] += 1;
    }
    return out;
}

}  // namespace ctconfig
