#include "ctconfig/arnold.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ctconfig {

bool EdgeMonomial::is_canonical() const
{
    for (size_t s = 0; s < edges.size(); ++s) {
        if (edges[s].first >= edges[s].second)
            return false;
        if (s > 0 && edges[s - 1].second >= edges[s].second)
            return false;
    }
    return true;
}

std::string EdgeMonomial::str() const
{
    if (edges.empty())
        return "1";
    std::string out;
    for (const auto& [i, j] : edges) {
        if (!out.empty())
            out += ".";
        out += "e" + std::to_string(i) + "," + std::to_string(j);
    }
    return out;
}

void add_term(EdgeCombo& combo, const EdgeMonomial& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = combo.find(m);
    if (it == combo.end()) {
        combo.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            combo.erase(it);
    }
}

namespace {

struct RawTerm {
    std::vector<std::pair<int, int>> edges;
    Scalar coeff;
};

/* Sorts edges by (target, source). For N even the generators are odd and a
 * swap contributes -1; equal edges make the term vanish. Returns false when
 * the term is zero. */
bool sort_edges(RawTerm& t, bool ambient_even)
{
    auto& e = t.edges;
    // insertion sort, counting moves
    long moves = 0;
    for (size_t i = 1; i < e.size(); ++i) {
        auto key = e[i];
        size_t j = i;
        while (j > 0 && std::pair(e[j - 1].second, e[j - 1].first) >
                            std::pair(key.second, key.first)) {
            e[j] = e[j - 1];
            --j;
            ++moves;
        }
        e[j] = key;
    }
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] == e[i])
            return false;  // e_ij^2 = 0
    if (ambient_even && (moves & 1))
        t.coeff = -t.coeff;
    return true;
}

}  // namespace

EdgeCombo straighten(int n, bool ambient_even, std::vector<std::pair<int, int>> raw,
                     Scalar coeff)
{
    EdgeCombo result;
    if (coeff.is_zero())
        return result;

    std::vector<RawTerm> work;
    work.push_back({std::move(raw), std::move(coeff)});

    while (!work.empty()) {
        RawTerm t = std::move(work.back());
        work.pop_back();

        for (auto& [a, b] : t.edges) {
            if (a < 1 || b < 1 || a > n || b > n || a == b)
                throw std::invalid_argument("edge endpoints must be distinct vertices in 1..n");
            if (a > b) {
                std::swap(a, b);
                if (!ambient_even)
                    t.coeff = -t.coeff;  // e_ji = (-1)^N e_ij
            }
        }
        if (!sort_edges(t, ambient_even))
            continue;

        // largest target with two incoming edges
        size_t clash = t.edges.size();
        for (size_t s = t.edges.size(); s-- > 1;) {
            if (t.edges[s].second == t.edges[s - 1].second) {
                clash = s - 1;
                break;
            }
        }
        if (clash == t.edges.size()) {
            add_term(result, EdgeMonomial{std::move(t.edges)}, t.coeff);
            continue;
        }

        // e_ik e_jk = e_ij e_jk - e_ij e_ik  (i < j, adjacent after sorting)
        int i = t.edges[clash].first;
        int j = t.edges[clash + 1].first;
        int k = t.edges[clash].second;
        assert(i < j);

        RawTerm t1 = t;
        t1.edges[clash] = {i, j};
        t1.edges[clash + 1] = {j, k};
        RawTerm t2 = std::move(t);
        t2.edges[clash] = {i, j};
        t2.edges[clash + 1] = {i, k};
        t2.coeff = -t2.coeff;
        work.push_back(std::move(t1));
        work.push_back(std::move(t2));
    }
    return result;
}

EdgeCombo act(int n, bool ambient_even, const std::vector<int>& perm, const EdgeMonomial& m,
              const Scalar& coeff)
{
    assert((int)perm.size() == n);
    std::vector<std::pair<int, int>> relabeled;
    relabeled.reserve(m.edges.size());
    for (const auto& [i, j] : m.edges)
        relabeled.push_back({perm[i - 1], perm[j - 1]});
    return straighten(n, ambient_even, std::move(relabeled), coeff);
}

std::vector<EdgeMonomial> edge_basis(int n, int r)
{
    std::vector<EdgeMonomial> out;
    if (r < 0 || r > n - 1) {
        return out;
    }
    if (r == 0) {
        out.push_back(EdgeMonomial{});
        return out;
    }
    // choose targets 2 <= j_1 < ... < j_r <= n, each with a source below it
    std::vector<int> targets(r);
    std::vector<std::pair<int, int>> edges(r);
    auto rec = [&](auto&& self, int pos, int min_target) -> void {
        if (pos == r) {
            out.push_back(EdgeMonomial{edges});
            return;
        }
        for (int t = min_target; t <= n - (r - 1 - pos); ++t) {
            targets[pos] = t;
            for (int s = 1; s < t; ++s) {
                edges[pos] = {s, t};
                self(self, pos + 1, t + 1);
            }
        }
    };
    rec(rec, 0, 2);
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const
{
    IntPolynomial r;
    for (const auto& [d1, c1] : coeffs)
        for (const auto& [d2, c2] : o.coeffs) {
            r.coeffs[d1 + d2] += c1 * c2;
            if (r.coeffs[d1 + d2] == 0)
                r.coeffs.erase(d1 + d2);
        }
    return r;
}

mpz_class IntPolynomial::eval_at_one() const
{
    mpz_class s = 0;
    for (const auto& [d, c] : coeffs)
        s += c;
    return s;
}

std::string IntPolynomial::str() const
{
    if (coeffs.empty())
        return "0";
    std::string out;
    for (const auto& [d, c] : coeffs) {
        if (!out.empty())
            out += " + ";
        if (d == 0)
            out += c.get_str();
        else if (c == 1)
            out += "t^" + std::to_string(d);
        else
            out += c.get_str() + " t^" + std::to_string(d);
    }
    return out;
}

IntPolynomial poincare_polynomial(int n, int N)
{
    if (n < 1 || N < 2)
        throw std::invalid_argument("poincare_polynomial needs n >= 1 and N >= 2");
    IntPolynomial p;
    p.coeffs[0] = 1;
    for (int k = 1; k <= n - 1; ++k) {
        IntPolynomial factor;
        factor.coeffs[0] = 1;
        factor.coeffs[N - 1] = k;
        p = p * factor;
    }
    return p;
}

std::vector<std::vector<int>> permutations(int n, bool fix_first)
{
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i)
        base[i] = i + 1;
    std::vector<std::vector<int>> out;
    if (fix_first && n >= 1) {
        std::vector<int> rest(base.begin() + 1, base.end());
        do {
            std::vector<int> p(1, 1);
            p.insert(p.end(), rest.begin(), rest.end());
            out.push_back(p);
        } while (std::next_permutation(rest.begin(), rest.end()));
    } else {
        do {
            out.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    return out;
}

TreeInvariants tree_invariants(int n, bool ambient_even, Subgroup g)
{
    if (n < 2)
        throw std::invalid_argument("tree_invariants needs n >= 2");
    if (n > 8)
        throw std::invalid_argument("tree_invariants guarded to n <= 8");
    const Field f = Field::rationals();
    auto trees = edge_basis(n, n - 1);
    std::map<EdgeMonomial, long> index;
    for (size_t i = 0; i < trees.size(); ++i)
        index[trees[i]] = (long)i;

    auto perms = permutations(n, g == Subgroup::stabilizer_of_1);
    Scalar norm = Scalar::integer((long)perms.size(), f).inverse();

    // rows of the averaging projector, one per basis tree
    std::vector<Vec> rows;
    for (const auto& t : trees) {
        Vec row = zero_vec((long)trees.size(), f);
        for (const auto& p : perms) {
            for (const auto& [m, c] : act(n, ambient_even, p, t, norm))
                row[index.at(m)] += c;
        }
        rows.push_back(std::move(row));
    }

    TreeInvariants out;
    auto basis = row_space_basis(rows, (long)trees.size(), f);
    out.dimension = (long)basis.size();
    for (const auto& v : basis) {
        EdgeCombo combo;
        for (size_t i = 0; i < trees.size(); ++i)
            if (!v[i].is_zero())
                combo.emplace(trees[i], v[i]);
        out.basis.push_back(std::move(combo));
    }
    return out;
}

}  // namespace ctconfig
