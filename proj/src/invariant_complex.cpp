#include "ctconfig/invariant_complex.hpp"

#include <algorithm>
#include <cassert>

#include "ctconfig/words.hpp"

namespace ctconfig {

std::string WedgeMonomial::str(const PDAlgebra& h) const
{
    std::string out;
    for (int l : xword) {
        if (!out.empty())
            out += "^";
        out += h.labels[l];
    }
    for (int l : yword) {
        if (!out.empty())
            out += "^";
        out += "s" + h.labels[l];
    }
    return out.empty() ? "1" : out;
}

void add_term(WedgeElement& e, const WedgeMonomial& m, const Scalar& c)
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

WedgeElement wedge_add(const WedgeElement& a, const WedgeElement& b)
{
    WedgeElement r = a;
    if (r.n == 0)
        r.n = b.n;
    for (const auto& [m, c] : b.terms)
        add_term(r, m, c);
    return r;
}

WedgeElement wedge_scale(const WedgeElement& a, const Scalar& c)
{
    WedgeElement r;
    r.n = a.n;
    for (const auto& [m, v] : a.terms)
        add_term(r, m, v * c);
    return r;
}

bool wedge_equal(const WedgeElement& a, const WedgeElement& b)
{
    return a.terms == b.terms;
}

std::vector<int> shifted_degrees(const PDAlgebra& h)
{
    std::vector<int> d = h.degrees;
    for (int& x : d)
        x += h.top_degree - 1;
    return d;
}

int wedge_total_degree(const PDAlgebra& h, const WedgeMonomial& m)
{
    int deg = 0;
    for (int l : m.xword)
        deg += h.degrees[l];
    for (int l : m.yword)
        deg += h.degrees[l] + h.top_degree - 1;
    return deg;
}

WedgeElement wedge_term(const PDAlgebra& h, int n, std::vector<int> xletters,
                        std::vector<int> yletters, const Scalar& coeff)
{
    if ((int)xletters.size() + 2 * (int)yletters.size() != n)
        throw std::invalid_argument("wedge_term: word lengths do not match n");
    WedgeElement out;
    out.n = n;
    auto cx = canonical_word(std::move(xletters), h.degrees);
    if (!cx)
        return out;
    auto cy = canonical_word(std::move(yletters), shifted_degrees(h));
    if (!cy)
        return out;
    Scalar c = coeff;
    if (cx->second * cy->second < 0)
        c = -c;
    add_term(out, WedgeMonomial{std::move(cx->first), std::move(cy->first)}, c);
    return out;
}

WedgeElement wedge_unit(const PDAlgebra& h, int n)
{
    Scalar c = Scalar::from_mpq(mpq_class(mpz_class(1), factorial(n)), h.field);
    return wedge_term(h, n, std::vector<int>(n, h.unit), {}, c);
}

std::map<std::pair<int, int>, std::vector<WedgeMonomial>> wedge_basis(const PDAlgebra& h,
                                                                      int n)
{
    if (!h.even_dimensional())
        throw std::invalid_argument("wedge_basis needs an even-dimensional ring");
    if (n < 0)
        throw std::invalid_argument("wedge_basis needs n >= 0");
    std::map<std::pair<int, int>, std::vector<WedgeMonomial>> out;
    auto sdeg = shifted_degrees(h);
    for (int r = 0; 2 * r <= n; ++r) {
        auto xwords = graded_words(h.degrees, n - 2 * r);
        auto ywords = graded_words(sdeg, r);
        for (const auto& xw : xwords)
            for (const auto& yw : ywords) {
                WedgeMonomial m{xw, yw};
                out[{wedge_total_degree(h, m), r}].push_back(std::move(m));
            }
    }
    return out;
}

void add_word(WordCombo& combo, const std::vector<int>& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = combo.find(w);
    if (it == combo.end()) {
        combo.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            combo.erase(it);
    }
}

namespace {

std::vector<std::vector<int>> index_permutations(int m)
{
    std::vector<int> base(m);
    for (int i = 0; i < m; ++i)
        base[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<int> word_degrees(const std::vector<int>& word, const std::vector<int>& table)
{
    std::vector<int> d(word.size());
    for (size_t i = 0; i < word.size(); ++i)
        d[i] = table[word[i]];
    return d;
}

/* Expands the letterwise ring products prods[i] (one sparse product per
 * result position) into canonically sorted words. */
void expand_products(const std::vector<const std::vector<std::pair<int, Scalar>>*>& prods,
                     const std::vector<int>& degree_table, const Scalar& coeff,
                     WordCombo& out)
{
    std::vector<int> word(prods.size());
    auto rec = [&](auto&& self, size_t pos, Scalar c) -> void {
        if (pos == prods.size()) {
            auto cw = canonical_word(word, degree_table);
            if (cw)
                add_word(out, cw->first, cw->second < 0 ? -c : c);
            return;
        }
        for (const auto& [k, cv] : *prods[pos]) {
            word[pos] = k;
            self(self, pos + 1, c * cv);
        }
    };
    rec(rec, 0, coeff);
}

}  // namespace

WordCombo rho_raw(const PDAlgebra& h, const std::vector<int>& word, bool shifted)
{
    const auto table = shifted ? shifted_degrees(h) : h.degrees;
    auto degs = word_degrees(word, table);
    WordCombo out;
    const int m = (int)word.size();
    for (const auto& arr : index_permutations(m)) {
        std::vector<int> pos(m);
        for (int p = 0; p < m; ++p)
            pos[arr[p]] = p;
        int sign = graded_rearrangement_sign(degs, pos);
        std::vector<int> w(m);
        for (int p = 0; p < m; ++p)
            w[p] = word[arr[p]];
        add_word(out, w, sign < 0 ? -Scalar::one(h.field) : Scalar::one(h.field));
    }
    return out;
}

WordCombo rho(const PDAlgebra& h, const std::vector<int>& word, bool shifted)
{
    check_char_guard(h.field, (int)word.size());
    Scalar norm =
        Scalar::from_mpq(mpq_class(mpz_class(1), factorial((long)word.size())), h.field);
    WordCombo out;
    for (const auto& [w, c] : rho_raw(h, word, shifted))
        add_word(out, w, c * norm);
    return out;
}

WordCombo red_prime(const PDAlgebra& h, const std::vector<int>& word)
{
    if (word.size() % 2 != 0)
        throw std::invalid_argument("red_prime needs a word of even length");
    const int r = (int)word.size() / 2;
    check_char_guard(h.field, 2 * r);
    auto degs = word_degrees(word, h.degrees);
    Scalar norm = Scalar::from_mpq(mpq_class(mpz_class(1), factorial(r)), h.field);

    WordCombo out;
    for (const auto& arr : index_permutations(2 * r)) {
        std::vector<int> pos(2 * r);
        for (int p = 0; p < 2 * r; ++p)
            pos[arr[p]] = p;
        int sign = graded_rearrangement_sign(degs, pos);
        std::vector<const std::vector<std::pair<int, Scalar>>*> prods;
        for (int k = 0; k < r; ++k)
            prods.push_back(&h.multiply_basis(word[arr[2 * k]], word[arr[2 * k + 1]]));
        expand_products(prods, h.degrees,
                        sign < 0 ? -norm : norm, out);
    }
    return out;
}

WordCombo nu_prime(const PDAlgebra& h, const std::vector<int>& u, const std::vector<int>& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("nu_prime needs words of equal length");
    const int m = (int)u.size();
    WordCombo out;
    if (m == 0) {
        add_word(out, {}, Scalar::one(h.field));
        return out;
    }
    std::vector<int> degs = word_degrees(u, h.degrees);
    auto dv = word_degrees(v, h.degrees);
    degs.insert(degs.end(), dv.begin(), dv.end());

    for (const auto& match : index_permutations(m)) {  // match[i] = v-letter paired with u_i
        std::vector<int> pos(2 * m);
        for (int i = 0; i < m; ++i) {
            pos[i] = 2 * i;                 // u_i
            pos[m + match[i]] = 2 * i + 1;  // its partner
        }
        int sign = graded_rearrangement_sign(degs, pos);
        std::vector<const std::vector<std::pair<int, Scalar>>*> prods;
        for (int i = 0; i < m; ++i)
            prods.push_back(&h.multiply_basis(u[i], v[match[i]]));
        expand_products(prods, h.degrees,
                        sign < 0 ? -Scalar::one(h.field) : Scalar::one(h.field), out);
    }
    return out;
}

WordCombo nu_bar_prime(const PDAlgebra& h, const std::vector<int>& u,
                       const std::vector<int>& sv)
{
    if (u.size() != sv.size())
        throw std::invalid_argument("nu_bar_prime needs words of equal length");
    const int m = (int)u.size();
    const auto sdeg = shifted_degrees(h);
    WordCombo out;
    if (m == 0) {
        add_word(out, {}, Scalar::one(h.field));
        return out;
    }
    std::vector<int> degs = word_degrees(u, h.degrees);
    auto dv = word_degrees(sv, sdeg);
    degs.insert(degs.end(), dv.begin(), dv.end());

    int ucross = 0;  // each u_i enters the suspension of its partner
    for (int i = 0; i < m; ++i)
        ucross += h.degrees[u[i]];

    for (const auto& match : index_permutations(m)) {
        std::vector<int> pos(2 * m);
        for (int i = 0; i < m; ++i) {
            pos[i] = 2 * i;
            pos[m + match[i]] = 2 * i + 1;
        }
        int sign = graded_rearrangement_sign(degs, pos);
        if (ucross & 1)
            sign = -sign;
        std::vector<const std::vector<std::pair<int, Scalar>>*> prods;
        for (int i = 0; i < m; ++i)
            prods.push_back(&h.multiply_basis(u[i], sv[match[i]]));
        expand_products(prods, sdeg,
                        sign < 0 ? -Scalar::one(h.field) : Scalar::one(h.field), out);
    }
    return out;
}

std::vector<WordSplit> delta_prime(const PDAlgebra& h, const std::vector<int>& word, int p,
                                   bool shifted)
{
    const auto table = shifted ? shifted_degrees(h) : h.degrees;
    const int m = (int)word.size();
    if (p < 0 || p > m)
        throw std::invalid_argument("delta_prime: bad split size");
    auto degs = word_degrees(word, table);

    std::vector<WordSplit> out;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)chosen.size() == p) {
            WordSplit split;
            split.sign = 1;
            std::vector<bool> in(m, false);
            for (int c : chosen)
                in[c] = true;
            // unshuffle: each unchosen letter crosses every later chosen letter
            for (int q = 0; q < m; ++q) {
                if (in[q])
                    continue;
                for (int c : chosen)
                    if (q < c && (degs[q] & 1) && (degs[c] & 1))
                        split.sign = -split.sign;
            }
            for (int q = 0; q < m; ++q)
                (in[q] ? split.left : split.right).push_back(word[q]);
            out.push_back(std::move(split));
            return;
        }
        for (int q = from; q < m - (p - (int)chosen.size()) + 1; ++q) {
            chosen.push_back(q);
            self(self, q + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

WedgeElement wedge_multiply(const PDAlgebra& h, const WedgeElement& a, const WedgeElement& b)
{
    if (!h.even_dimensional())
        throw std::invalid_argument("wedge_multiply needs an even-dimensional ring");
    if (!a.is_zero() && !b.is_zero() && a.n != b.n)
        throw std::invalid_argument("wedge_multiply: mismatched point counts");
    const int n = a.n;
    check_char_guard(h.field, n);
    const auto sdeg = shifted_degrees(h);
    WedgeElement out;
    out.n = n;

    auto block_deg = [&](const std::vector<int>& w, const std::vector<int>& table) {
        int d = 0;
        for (int l : w)
            d += table[l];
        return d;
    };

    for (const auto& [ma, ca] : a.terms) {
        const int r = ma.pair_count();
        for (const auto& [mb, cb] : b.terms) {
            const int s = mb.pair_count();
            const int l = n - 2 * r - 2 * s;
            if (l < 0)
                continue;
            const auto& X = ma.xword;
            const auto& Y = ma.yword;
            const auto& Z = mb.xword;
            const auto& T = mb.yword;
            const int dY = block_deg(Y, sdeg), dT = block_deg(T, sdeg);
            Scalar cab = ca * cb;

            for (const auto& sx : delta_prime(h, X, l, false)) {
                WordCombo bx = red_prime(h, sx.right);  // s letters
                if (bx.empty())
                    continue;
                const int dX1 = block_deg(sx.left, h.degrees);
                const int dX2 = block_deg(sx.right, h.degrees);
                for (const auto& sz : delta_prime(h, Z, l, false)) {
                    WordCombo ez = red_prime(h, sz.right);  // r letters
                    if (ez.empty())
                        continue;
                    const int dZ1 = block_deg(sz.left, h.degrees);
                    const int dZ2 = block_deg(sz.right, h.degrees);

                    // (X1, X2, sY, Z1, Z2, sT) -> (X1, Z1, Z2, sY, X2, sT)
                    int bsign = block_rearrangement_sign({dX1, dX2, dY, dZ1, dZ2, dT},
                                                         {0, 4, 3, 1, 2, 5});
                    int ssign = sx.sign * sz.sign * bsign;
                    WordCombo alpha = nu_prime(h, sx.left, sz.left);
                    if (alpha.empty())
                        continue;

                    for (const auto& [ew, cE] : ez) {
                        WordCombo ybar = nu_bar_prime(h, ew, Y);
                        for (const auto& [bw, cB] : bx) {
                            WordCombo tbar = nu_bar_prime(h, bw, T);
                            for (const auto& [aw, cA] : alpha)
                                for (const auto& [yw, cY] : ybar)
                                    for (const auto& [tw, cT] : tbar) {
                                        std::vector<int> yall = yw;
                                        yall.insert(yall.end(), tw.begin(), tw.end());
                                        auto cy = canonical_word(std::move(yall), sdeg);
                                        if (!cy)
                                            continue;
                                        Scalar coeff = cab * cE * cB * cA * cY * cT;
                                        if (ssign * cy->second < 0)
                                            coeff = -coeff;
                                        add_term(out, WedgeMonomial{aw, cy->first}, coeff);
                                    }
                        }
                    }
                }
            }
        }
    }
    return out;
}

WedgeElement wedge_differential(const PDAlgebra& h, const WedgeElement& a)
{
    if (!h.even_dimensional())
        throw std::invalid_argument("wedge_differential needs an even-dimensional ring");
    const int n = a.n;
    const auto sdeg = shifted_degrees(h);
    auto duals = dual_basis(h);
    Scalar half = Scalar::from_mpq(mpq_class(1, 2), h.field);
    WedgeElement out;
    out.n = n;

    for (const auto& [m, c] : a.terms) {
        int xpar = 0;
        for (int l : m.xword)
            xpar += h.degrees[l];
        xpar &= 1;

        int prefix = 0;  // shifted degree of the preceding suspended letters
        for (size_t i = 0; i < m.yword.size(); ++i) {
            const int yi = m.yword[i];
            int leib = xpar;
            if ((prefix & 1) && ((1 + h.degrees[yi]) & 1))
                leib ^= 1;
            Scalar base = c * half;
            if (leib)
                base = -base;

            std::vector<int> yrest;
            for (size_t j = 0; j < m.yword.size(); ++j)
                if (j != i)
                    yrest.push_back(m.yword[j]);

            for (int k = 0; k < h.dim(); ++k) {
                Scalar sk = ((h.top_degree - h.degrees[k]) & 1) ? -base : base;
                for (const auto& [u, cu] : h.multiply_basis(yi, k)) {
                    for (int w = 0; w < h.dim(); ++w) {
                        if (duals[k][w].is_zero())
                            continue;
                        std::vector<int> xnew = m.xword;
                        xnew.push_back(u);
                        xnew.push_back(w);
                        auto cx = canonical_word(std::move(xnew), h.degrees);
                        if (!cx)
                            continue;
                        Scalar coeff = sk * cu * duals[k][w];
                        if (cx->second < 0)
                            coeff = -coeff;
                        add_term(out, WedgeMonomial{cx->first, yrest}, coeff);
                    }
                }
            }
            prefix += sdeg[yi];
        }
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> pair_partitions(int n, int r)
{
    std::vector<std::vector<std::pair<int, int>>> out;
    if (r < 0 || 2 * r > n)
        return out;
    std::vector<bool> used(n + 1, false);
    std::vector<std::pair<int, int>> current;
    // first members strictly increase across pairs
    auto rec = [&](auto&& self, int min_first) -> void {
        if ((int)current.size() == r) {
            out.push_back(current);
            return;
        }
        for (int i = min_first; i <= n; ++i) {
            if (used[i])
                continue;
            used[i] = true;
            for (int j = i + 1; j <= n; ++j) {
                if (used[j])
                    continue;
                current.push_back({i, j});
                used[j] = true;
                self(self, i + 1);
                used[j] = false;
                current.pop_back();
            }
            used[i] = false;
        }
    };
    rec(rec, 1);
    return out;
}

mpz_class pair_partition_count(int n, int r)
{
    if (r < 0 || 2 * r > n)
        return 0;
    mpz_class num = factorial(n);
    mpz_class den = factorial(n - 2 * r) * factorial(r);
    mpz_class two = 1;
    for (int i = 0; i < r; ++i)
        two *= 2;
    return num / (den * two);
}

E1Element invariant_embedding(const PDAlgebra& h, const WedgeElement& a)
{
    if (!h.even_dimensional())
        throw std::invalid_argument("invariant_embedding needs an even-dimensional ring");
    const int n = a.n;
    check_point_guard(n);
    check_char_guard(h.field, n);
    const auto sdeg = shifted_degrees(h);
    E1Element out;
    out.n = n;

    for (const auto& [m, c] : a.terms) {
        const int r = m.pair_count();
        const int nx = (int)m.xword.size();
        auto xdegs = word_degrees(m.xword, h.degrees);
        auto ydegs_shifted = word_degrees(m.yword, sdeg);
        auto ydegs_raw = word_degrees(m.yword, h.degrees);

        for (const auto& pairs : pair_partitions(n, r)) {
            std::vector<bool> endpoint(n + 1, false);
            for (const auto& [i, j] : pairs)
                endpoint[i] = endpoint[j] = true;
            std::vector<int> free_slots;
            for (int v = 1; v <= n; ++v)
                if (!endpoint[v])
                    free_slots.push_back(v);

            // canonical edge order: sort by target, counting swaps (odd letters)
            std::vector<std::pair<int, int>> edges = pairs;
            int esign = 1;
            for (size_t i = 1; i < edges.size(); ++i) {
                auto key = edges[i];
                size_t j = i;
                while (j > 0 && edges[j - 1].second > key.second) {
                    edges[j] = edges[j - 1];
                    --j;
                    esign = -esign;
                }
                edges[j] = key;
            }
            EdgeMonomial forest{edges};

            for (const auto& arrX : index_permutations(nx)) {
                std::vector<int> posX(nx);
                for (int p = 0; p < nx; ++p)
                    posX[arrX[p]] = p;
                int signX = graded_rearrangement_sign(xdegs, posX);

                for (const auto& arrY : index_permutations(r)) {
                    std::vector<int> posY(r);
                    for (int p = 0; p < r; ++p)
                        posY[arrY[p]] = p;
                    int signY = graded_rearrangement_sign(ydegs_shifted, posY);

                    // suspension stripping: weight k for the k-th tensor slot
                    int expo = 0;
                    if ((h.top_degree - 1) & 1)
                        for (int k = 0; k < r; ++k)
                            expo += (k + 1) * ydegs_raw[arrY[k]];
                    int sign = signX * signY * ((expo & 1) ? -1 : 1) * esign;

                    // merge: the label on pair k crosses the x labels at
                    // later free slots
                    for (int k = 0; k < r; ++k) {
                        if (!(ydegs_raw[arrY[k]] & 1))
                            continue;
                        int later = 0;
                        for (int p = 0; p < nx; ++p)
                            if (free_slots[p] > pairs[k].first)
                                later += xdegs[arrX[p]];
                        if (later & 1)
                            sign = -sign;
                    }

                    std::vector<int> labels(n, h.unit);
                    for (int p = 0; p < nx; ++p)
                        labels[free_slots[p] - 1] = m.xword[arrX[p]];
                    for (int k = 0; k < r; ++k)
                        labels[pairs[k].first - 1] = m.yword[arrY[k]];

                    add_term(out, E1Monomial{forest, std::move(labels)},
                             sign < 0 ? -c : c);
                }
            }
        }
    }
    return out;
}

WordCombo tensor_mult(const PDAlgebra& h, const WordCombo& a, const WordCombo& b)
{
    WordCombo out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            assert(wa.size() == wb.size());
            int sign = 0;
            for (size_t j = 0; j < wb.size(); ++j) {
                if (!(h.degrees[wb[j]] & 1))
                    continue;
                for (size_t i = j + 1; i < wa.size(); ++i)
                    sign ^= h.degrees[wa[i]] & 1;
            }
            std::vector<const std::vector<std::pair<int, Scalar>>*> prods;
            for (size_t i = 0; i < wa.size(); ++i)
                prods.push_back(&h.multiply_basis(wa[i], wb[i]));
            // tensor words are position-exact: expand without sorting
            std::vector<int> word(wa.size());
            Scalar base = (sign & 1) ? -(ca * cb) : ca * cb;
            auto rec = [&](auto&& self, size_t pos, Scalar c) -> void {
                if (pos == word.size()) {
                    add_word(out, word, c);
                    return;
                }
                for (const auto& [k, cv] : *prods[pos]) {
                    word[pos] = k;
                    self(self, pos + 1, c * cv);
                }
            };
            rec(rec, 0, base);
        }
    }
    return out;
}

WordCombo tensor_action(const PDAlgebra& h, const WordCombo& a, const WordCombo& b)
{
    WordCombo out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            assert(wa.size() == wb.size());
            const int m = (int)wa.size();
            int expo = 0;
            for (int j = 1; j < m; ++j) {
                int prefix = 0;
                for (int i = 0; i < j; ++i)
                    prefix += h.degrees[wb[i]];
                expo += h.degrees[wa[j]] * prefix;
            }
            for (int i = 0; i < m; ++i)
                expo += (i + 1) * h.degrees[wa[i]];
            std::vector<const std::vector<std::pair<int, Scalar>>*> prods;
            for (int i = 0; i < m; ++i)
                prods.push_back(&h.multiply_basis(wa[i], wb[i]));
            std::vector<int> word(m);
            Scalar base = (expo & 1) ? -(ca * cb) : ca * cb;
            auto rec = [&](auto&& self, size_t pos, Scalar c) -> void {
                if (pos == word.size()) {
                    add_word(out, word, c);
                    return;
                }
                for (const auto& [k, cv] : *prods[pos]) {
                    word[pos] = k;
                    self(self, pos + 1, c * cv);
                }
            };
            rec(rec, 0, base);
        }
    }
    return out;
}

WordCombo tensor_red(const PDAlgebra& h, const WordCombo& a)
{
    WordCombo out;
    for (const auto& [w, c] : a) {
        assert(w.size() % 2 == 0);
        const int r = (int)w.size() / 2;
        std::vector<const std::vector<std::pair<int, Scalar>>*> prods;
        for (int k = 0; k < r; ++k)
            prods.push_back(&h.multiply_basis(w[2 * k], w[2 * k + 1]));
        std::vector<int> word(r);
        auto rec = [&](auto&& self, size_t pos, Scalar cc) -> void {
            if (pos == word.size()) {
                add_word(out, word, cc);
                return;
            }
            for (const auto& [k, cv] : *prods[pos]) {
                word[pos] = k;
                self(self, pos + 1, cc * cv);
            }
        };
        rec(rec, 0, c);
    }
    return out;
}

WordCombo tensor_shuffle(const PDAlgebra& h, const WordCombo& a, const WordCombo& b,
                         bool shifted)
{
    const auto table = shifted ? shifted_degrees(h) : h.degrees;
    WordCombo out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            const int p = (int)wa.size(), q = (int)wb.size();
            std::vector<int> positions;  // slots taken by wa among 0..p+q-1
            auto rec = [&](auto&& self, int from) -> void {
                if ((int)positions.size() == p) {
                    std::vector<bool> taken(p + q, false);
                    for (int t : positions)
                        taken[t] = true;
                    std::vector<int> w(p + q);
                    int ia = 0, ib = 0, sign = 0;
                    for (int t = 0; t < p + q; ++t) {
                        if (taken[t]) {
                            w[t] = wa[ia++];
                        } else {
                            // wb letter crosses the remaining wa letters
                            if (table[wb[ib]] & 1) {
                                for (int u = ia; u < p; ++u)
                                    sign ^= table[wa[u]] & 1;
                            }
                            w[t] = wb[ib++];
                        }
                    }
                    add_word(out, w, (sign & 1) ? -(ca * cb) : ca * cb);
                    return;
                }
                for (int t = from; t < p + q; ++t) {
                    positions.push_back(t);
                    self(self, t + 1);
                    positions.pop_back();
                }
            };
            rec(rec, 0);
        }
    }
    return out;
}

CombinedComplex combined_complex(const PDAlgebra& h)
{
    if (!h.even_dimensional())
        throw std::invalid_argument("combined_complex needs an even-dimensional ring");
    CombinedComplex cc;
    cc.h = &h;
    auto duals = dual_basis(h);
    Scalar half = Scalar::from_mpq(mpq_class(1, 2), h.field);
    for (int i = 0; i < h.dim(); ++i) {
        WordCombo d;
        for (int k = 0; k < h.dim(); ++k) {
            Scalar sk = ((h.top_degree - h.degrees[k]) & 1) ? -half : half;
            for (const auto& [u, cu] : h.multiply_basis(i, k)) {
                for (int w = 0; w < h.dim(); ++w) {
                    if (duals[k][w].is_zero())
                        continue;
                    auto cw = canonical_word({u, w}, h.degrees);
                    if (!cw)
                        continue;
                    Scalar c = sk * cu * duals[k][w];
                    if (cw->second < 0)
                        c = -c;
                    add_word(d, cw->first, c);
                }
            }
        }
        cc.dy.push_back(std::move(d));
    }
    return cc;
}

std::string CombinedComplex::dy_str(int i) const
{
    std::string out;
    for (const auto& [w, c] : dy[i]) {
        if (!out.empty())
            out += " + ";
        if (!(c == Scalar::one(h->field)))
            out += "(" + c.str() + ") ";
        out += h->labels[w[0]] + "^" + h->labels[w[1]];
    }
    return out.empty() ? "0" : out;
}

WedgeElement combined_differential(const CombinedComplex& cc, int n, const WedgeMonomial& m)
{
    const PDAlgebra& h = *cc.h;
    const int dim = h.dim();
    // combined alphabet: 0..dim-1 ring letters, dim..2dim-1 suspended letters
    std::vector<int> table = h.degrees;
    for (int d : shifted_degrees(h))
        table.push_back(d);

    std::vector<int> word = m.xword;
    for (int l : m.yword)
        word.push_back(dim + l);

    WedgeElement out;
    out.n = n;
    for (size_t p = 0; p < word.size(); ++p) {
        if (word[p] < dim)
            continue;  // ring letters are closed
        int before = 0;
        for (size_t q = 0; q < p; ++q)
            before += table[word[q]];
        for (const auto& [block, c] : cc.dy[word[p] - dim]) {
            std::vector<int> w;
            w.reserve(word.size() + 1);
            for (size_t q = 0; q < p; ++q)
                w.push_back(word[q]);
            w.push_back(block[0]);
            w.push_back(block[1]);
            for (size_t q = p + 1; q < word.size(); ++q)
                w.push_back(word[q]);

            // split the mixed word back into ring/suspended blocks
            std::vector<int> pos(w.size());
            int xcount = 0;
            for (int id : w)
                if (id < dim)
                    ++xcount;
            int xi = 0, yi = xcount;
            for (size_t q = 0; q < w.size(); ++q)
                pos[q] = (w[q] < dim) ? xi++ : yi++;
            auto degs = word_degrees(w, table);
            int sign = graded_rearrangement_sign(degs, pos);
            if (before & 1)
                sign = -sign;

            std::vector<int> xw, yw;
            for (int id : w)
                (id < dim ? xw : yw).push_back(id < dim ? id : id - dim);
            auto cx = canonical_word(std::move(xw), h.degrees);
            if (!cx)
                continue;
            auto cy = canonical_word(std::move(yw), shifted_degrees(h));
            if (!cy)
                continue;
            Scalar coeff = c;
            if (sign * cx->second * cy->second < 0)
                coeff = -coeff;
            add_term(out, WedgeMonomial{cx->first, cy->first}, coeff);
        }
    }
    return out;
}

}  // namespace ctconfig
