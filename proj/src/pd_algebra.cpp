#include "ctconfig/pd_algebra.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ctconfig {

HElem PDAlgebra::basis_elem(int i) const
{
    HElem e = zero_elem();
    e[i] = Scalar::one(field);
    return e;
}

HElem PDAlgebra::multiply(const HElem& a, const HElem& b) const
{
    HElem r = zero_elem();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j].is_zero())
                continue;
            Scalar c = a[i] * b[j];
            for (const auto& [k, v] : mult[i][j])
                r[k] += c * v;
        }
    }
    return r;
}

int PDAlgebra::degree_of(const HElem& a) const
{
    int deg = -1;
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero())
            continue;
        if (deg == -1)
            deg = degrees[i];
        else if (deg != degrees[i])
            return -1;
    }
    return deg;
}

int PDAlgebra::label_index(const std::string& label) const
{
    for (int i = 0; i < dim(); ++i)
        if (labels[i] == label)
            return i;
    return -1;
}

namespace {

Scalar coeff_of(const PDAlgebra& h, const std::vector<std::pair<int, Scalar>>& prod, int k)
{
    for (const auto& [i, v] : prod)
        if (i == k)
            return v;
    return Scalar::zero(h.field);
}

int parity(int d)
{
    return d & 1;
}

}  // namespace

std::vector<std::string> validate(const PDAlgebra& h)
{
    std::vector<std::string> bad;
    const int d = h.dim();
    const Field& f = h.field;

    if (d == 0)
        return {"connectivity: empty basis"};

    // grading: all degrees in [0,N], products homogeneous
    for (int i = 0; i < d; ++i)
        if (h.degrees[i] < 0 || h.degrees[i] > h.top_degree)
            bad.push_back("grading: basis element '" + h.labels[i] + "' has degree outside [0,N]");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, v] : h.mult[i][j])
                if (!v.is_zero() && h.degrees[k] != h.degrees[i] + h.degrees[j])
                    bad.push_back("grading: product " + h.labels[i] + "*" + h.labels[j] +
                                  " is not homogeneous of the expected degree");

    // connectivity: H^0 = k spanned by the unit
    int deg0 = 0;
    for (int i = 0; i < d; ++i)
        if (h.degrees[i] == 0)
            ++deg0;
    if (deg0 != 1 || h.degrees[h.unit] != 0)
        bad.push_back("connectivity: degree-0 component is not spanned by the unit alone");

    // top class: H^N = k spanned by the fundamental class
    int degN = 0;
    for (int i = 0; i < d; ++i)
        if (h.degrees[i] == h.top_degree)
            ++degN;
    if (degN != 1 || h.degrees[h.fundamental] != h.top_degree)
        bad.push_back("top-class: degree-N component is not spanned by the fundamental class alone");

    // unit law
    for (int i = 0; i < d; ++i) {
        HElem left = h.multiply(h.basis_elem(h.unit), h.basis_elem(i));
        HElem right = h.multiply(h.basis_elem(i), h.basis_elem(h.unit));
        if (left != h.basis_elem(i) || right != h.basis_elem(i)) {
            bad.push_back("unit: '" + h.labels[h.unit] + "' does not act as identity on '" +
                          h.labels[i] + "'");
        }
    }

    // graded commutativity: b_i b_j = (-1)^{|i||j|} b_j b_i
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            HElem ij = h.multiply(h.basis_elem(i), h.basis_elem(j));
            HElem ji = h.multiply(h.basis_elem(j), h.basis_elem(i));
            Scalar sign = (parity(h.degrees[i]) && parity(h.degrees[j]))
                              ? -Scalar::one(f)
                              : Scalar::one(f);
            for (int k = 0; k < d; ++k)
                if (ij[k] != sign * ji[k]) {
                    bad.push_back("graded-commutativity: " + h.labels[i] + "*" + h.labels[j] +
                                  " != +/- " + h.labels[j] + "*" + h.labels[i]);
                    break;
                }
        }
    }

    // associativity
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                HElem lhs = h.multiply(h.multiply(h.basis_elem(i), h.basis_elem(j)), h.basis_elem(k));
                HElem rhs = h.multiply(h.basis_elem(i), h.multiply(h.basis_elem(j), h.basis_elem(k)));
                if (lhs != rhs) {
                    bad.push_back("associativity: (" + h.labels[i] + "*" + h.labels[j] + ")*" +
                                  h.labels[k] + " != " + h.labels[i] + "*(" + h.labels[j] + "*" +
                                  h.labels[k] + ")");
                }
            }

    // Poincare duality: pairing <b_i, b_j> = coeff of fundamental in b_i b_j
    SparseMatrix pairing(d, d, f);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            pairing.set(i, j, coeff_of(h, h.mult[i][j], h.fundamental));
    if (rank_kernel(pairing).rank != d)
        bad.push_back("pd-nondegeneracy: multiplication pairing into the top class is singular");

    return bad;
}

std::vector<HElem> dual_basis(const PDAlgebra& h)
{
    const int d = h.dim();
    SparseMatrix pairing(d, d, h.field);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            pairing.set(i, j, coeff_of(h, h.mult[i][j], h.fundamental));

    std::vector<HElem> duals;
    for (int i = 0; i < d; ++i) {
        Vec delta = zero_vec(d, h.field);
        delta[i] = Scalar::one(h.field);
        auto x = solve(pairing, delta);  // pairing * b_i' = e_i
        if (!x)
            throw RingError("pd-nondegeneracy: pairing matrix is singular");
        duals.push_back(*x);
    }
    return duals;
}

DiagonalClass diagonal_class(const PDAlgebra& h)
{
    auto duals = dual_basis(h);
    DiagonalClass delta;
    for (int i = 0; i < h.dim(); ++i) {
        int dual_deg = h.top_degree - h.degrees[i];
        Scalar sign = (dual_deg & 1) ? -Scalar::one(h.field) : Scalar::one(h.field);
        for (int j = 0; j < h.dim(); ++j)
            if (!duals[i][j].is_zero())
                delta.terms.emplace_back(i, j, sign * duals[i][j]);
    }
    return delta;
}

namespace {

PDAlgebra empty_ring(const std::string& name, int top, const Field& f)
{
    PDAlgebra h;
    h.name = name;
    h.top_degree = top;
    h.field = f;
    return h;
}

void init_mult(PDAlgebra& h)
{
    h.mult.assign(h.dim(), std::vector<std::vector<std::pair<int, Scalar>>>(h.dim()));
}

void set_product(PDAlgebra& h, int i, int j, int k, const Scalar& c)
{
    if (!c.is_zero())
        h.mult[i][j].push_back({k, c});
}

PDAlgebra make_sphere(int n, const Field& f)
{
    if (n < 1)
        throw RingError("sphere dimension must be >= 1");
    PDAlgebra h = empty_ring("sphere:" + std::to_string(n), n, f);
    h.labels = {"1", "vol"};
    h.degrees = {0, n};
    h.unit = 0;
    h.fundamental = 1;
    init_mult(h);
    Scalar one = Scalar::one(f);
    set_product(h, 0, 0, 0, one);
    set_product(h, 0, 1, 1, one);
    set_product(h, 1, 0, 1, one);
    return h;
}

PDAlgebra make_complex_projective(int m, const Field& f)
{
    if (m < 1)
        throw RingError("cp rank must be >= 1");
    PDAlgebra h = empty_ring("cp" + std::to_string(m), 2 * m, f);
    h.labels.push_back("1");
    h.degrees.push_back(0);
    for (int i = 1; i <= m; ++i) {
        h.labels.push_back(i == 1 ? "x" : "x" + std::to_string(i));
        h.degrees.push_back(2 * i);
    }
    h.unit = 0;
    h.fundamental = m;
    init_mult(h);
    Scalar one = Scalar::one(f);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            if (i + j <= m)
                set_product(h, i, j, i + j, one);
    return h;
}

/* Exterior algebra on k degree-1 generators; basis indexed by subsets. */
PDAlgebra make_torus(int k, const Field& f)
{
    if (k < 1)
        throw RingError("torus rank must be >= 1");
    if (k > 20)
        throw RingError("torus rank too large");
    PDAlgebra h = empty_ring("torus:" + std::to_string(k), k, f);
    const int d = 1 << k;
    for (int s = 0; s < d; ++s) {
        std::string label;
        int deg = 0;
        for (int b = 0; b < k; ++b)
            if (s & (1 << b)) {
                label += (label.empty() ? "e" : "e") + std::to_string(b + 1);
                ++deg;
            }
        if (label.empty())
            label = "1";
        h.labels.push_back(label);
        h.degrees.push_back(deg);
    }
    h.unit = 0;
    h.fundamental = d - 1;
    init_mult(h);
    for (int s = 0; s < d; ++s) {
        for (int t = 0; t < d; ++t) {
            if (s & t)
                continue;  // repeated generator
            // sign: move each generator of t past the later generators of s
            int inv = 0;
            for (int b = 0; b < k; ++b)
                if (t & (1 << b))
                    for (int c = b + 1; c < k; ++c)
                        if (s & (1 << c))
                            ++inv;
            Scalar c = (inv & 1) ? -Scalar::one(f) : Scalar::one(f);
            set_product(h, s, t, s | t, c);
        }
    }
    return h;
}

/* Genus-g orientable surface: 1, a_i, b_i, vol with a_i b_i = vol = -b_i a_i. */
PDAlgebra make_surface(int g, const Field& f)
{
    if (g < 0)
        throw RingError("surface genus must be >= 0");
    if (g == 0)
        return make_sphere(2, f);
    PDAlgebra h = empty_ring("surface:" + std::to_string(g), 2, f);
    h.labels.push_back("1");
    h.degrees.push_back(0);
    for (int i = 1; i <= g; ++i) {
        h.labels.push_back("a" + std::to_string(i));
        h.degrees.push_back(1);
        h.labels.push_back("b" + std::to_string(i));
        h.degrees.push_back(1);
    }
    h.labels.push_back("vol");
    h.degrees.push_back(2);
    h.unit = 0;
    h.fundamental = h.dim() - 1;
    init_mult(h);
    Scalar one = Scalar::one(f);
    const int vol = h.fundamental;
    set_product(h, 0, 0, 0, one);
    for (int i = 1; i < h.dim(); ++i) {
        set_product(h, 0, i, i, one);
        set_product(h, i, 0, i, one);
    }
    for (int i = 1; i <= g; ++i) {
        int a = 2 * i - 1, b = 2 * i;
        set_product(h, a, b, vol, one);
        set_product(h, b, a, vol, -one);
    }
    return h;
}

}  // namespace

PDAlgebra builtin_ring(const std::string& name, const Field& f)
{
    auto colon = name.find(':');
    std::string kind = name.substr(0, colon);
    long param = -1;
    if (colon != std::string::npos) {
        try {
            param = std::stol(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw RingError("bad builtin ring parameter in '" + name + "'");
        }
    }
    if (kind == "sphere" && param >= 0)
        return make_sphere((int)param, f);
    if (kind == "cp" && param >= 0)
        return make_complex_projective((int)param, f);
    if (kind == "surface" && param >= 0)
        return make_surface((int)param, f);
    if (kind == "torus" && param >= 0)
        return make_torus((int)param, f);
    if (name == "cp2")
        return make_complex_projective(2, f);
    throw RingError("unknown builtin ring '" + name +
                    "' (expected sphere:<N>, cp:<m>, surface:<g> or torus:<k>)");
}

PDAlgebra product_ring(const PDAlgebra& a, const PDAlgebra& b)
{
    if (a.field != b.field)
        throw RingError("product of rings over different fields");
    PDAlgebra h = empty_ring(a.name + "x" + b.name, a.top_degree + b.top_degree, a.field);
    const int da = a.dim(), db = b.dim();
    auto combine = [&](const std::string& u, const std::string& v) {
        if (u == "1")
            return v;
        if (v == "1")
            return u;
        return u + "*" + v;
    };
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            std::string label = combine(a.labels[i], b.labels[j]);
            if (h.label_index(label) >= 0)  // e.g. 1 x vol and vol x 1
                label = a.labels[i] + "*" + b.labels[j];
            h.labels.push_back(label);
            h.degrees.push_back(a.degrees[i] + b.degrees[j]);
        }
    h.unit = a.unit * db + b.unit;
    h.fundamental = a.fundamental * db + b.fundamental;
    init_mult(h);
    // (u1 (x) v1)(u2 (x) v2) = (-1)^{|v1||u2|} u1 u2 (x) v1 v2
    for (int i1 = 0; i1 < da; ++i1)
        for (int j1 = 0; j1 < db; ++j1)
            for (int i2 = 0; i2 < da; ++i2)
                for (int j2 = 0; j2 < db; ++j2) {
                    Scalar sign = (parity(b.degrees[j1]) && parity(a.degrees[i2]))
                                      ? -Scalar::one(h.field)
                                      : Scalar::one(h.field);
                    for (const auto& [ka, va] : a.mult[i1][i2])
                        for (const auto& [kb, vb] : b.mult[j1][j2])
                            set_product(h, i1 * db + j1, i2 * db + j2, ka * db + kb,
                                        sign * va * vb);
                }
    return h;
}

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const auto& k : allowed)
            if (it.key() == k)
                ok = true;
        if (!ok)
            throw RingError("unknown key '" + it.key() + "' in " + where);
    }
}

}  // namespace

namespace {

PDAlgebra parse_ring_doc(const json& doc, const Field& f);

}  // namespace

PDAlgebra parse_ring_json(const std::string& text, const Field& f)
{
    try {
        json doc = json::parse(text);
        return parse_ring_doc(doc, f);
    } catch (const json::exception& e) {
        throw RingError(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

PDAlgebra parse_ring_doc(const json& doc, const Field& f)
{
    if (!doc.is_object())
        throw RingError("ring file must be a JSON object");
    reject_unknown_keys(doc, {"name", "dimension", "basis", "unit", "fundamental", "products"},
                        "ring document");
    for (const char* key : {"name", "dimension", "basis", "unit", "fundamental"})
        if (!doc.contains(key))
            throw RingError(std::string("missing key '") + key + "'");

    PDAlgebra h;
    h.field = f;
    h.name = doc["name"].get<std::string>();
    h.top_degree = doc["dimension"].get<int>();

    for (const auto& item : doc["basis"]) {
        reject_unknown_keys(item, {"label", "degree"}, "basis entry");
        if (!item.contains("label") || !item.contains("degree"))
            throw RingError("basis entry needs 'label' and 'degree'");
        std::string label = item["label"].get<std::string>();
        if (h.label_index(label) >= 0)
            throw RingError("duplicate basis label '" + label + "'");
        h.labels.push_back(label);
        h.degrees.push_back(item["degree"].get<int>());
    }
    if (h.dim() == 0)
        throw RingError("empty basis");

    h.unit = h.label_index(doc["unit"].get<std::string>());
    if (h.unit < 0)
        throw RingError("unknown unit label");
    h.fundamental = h.label_index(doc["fundamental"].get<std::string>());
    if (h.fundamental < 0)
        throw RingError("unknown fundamental label");

    init_mult(h);
    // unit products are implied
    Scalar one = Scalar::one(f);
    for (int i = 0; i < h.dim(); ++i) {
        if (i == h.unit)
            continue;
        set_product(h, h.unit, i, i, one);
        set_product(h, i, h.unit, i, one);
    }
    set_product(h, h.unit, h.unit, h.unit, one);

    std::vector<std::vector<bool>> given(h.dim(), std::vector<bool>(h.dim(), false));
    if (doc.contains("products")) {
        for (const auto& item : doc["products"]) {
            reject_unknown_keys(item, {"left", "right", "value"}, "product entry");
            for (const char* key : {"left", "right", "value"})
                if (!item.contains(key))
                    throw RingError(std::string("product entry needs '") + key + "'");
            int i = h.label_index(item["left"].get<std::string>());
            int j = h.label_index(item["right"].get<std::string>());
            if (i < 0 || j < 0)
                throw RingError("unknown basis label in product entry");
            if (given[i][j])
                throw RingError("duplicate product entry " + h.labels[i] + "*" + h.labels[j]);
            given[i][j] = true;
            h.mult[i][j].clear();
            for (const auto& term : item["value"]) {
                reject_unknown_keys(term, {"basis", "coeff"}, "product value");
                if (!term.contains("basis") || !term.contains("coeff"))
                    throw RingError("product value needs 'basis' and 'coeff'");
                int k = h.label_index(term["basis"].get<std::string>());
                if (k < 0)
                    throw RingError("unknown basis label '" +
                                    term["basis"].get<std::string>() + "' in product value");
                Scalar c = Scalar::from_string(term["coeff"].get<std::string>(), f);
                set_product(h, i, j, k, c);
            }
        }
    }
    return h;
}

}  // namespace

PDAlgebra parse_ring_file(const std::string& path, const Field& f)
{
    std::ifstream in(path);
    if (!in)
        throw RingError("cannot open ring file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ring_json(ss.str(), f);
}

bool rings_equal(const PDAlgebra& a, const PDAlgebra& b)
{
    if (a.top_degree != b.top_degree || a.labels != b.labels || a.degrees != b.degrees ||
        a.unit != b.unit || a.fundamental != b.fundamental || a.field != b.field)
        return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            HElem pa = a.multiply(a.basis_elem(i), a.basis_elem(j));
            HElem pb = b.multiply(b.basis_elem(i), b.basis_elem(j));
            if (pa != pb)
                return false;
        }
    return true;
}

}  // namespace ctconfig
