#include "ctconfig/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "ctconfig/cohomology.hpp"
#include "ctconfig/verify.hpp"

namespace ctconfig::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& s)
{
    if (s == "q")
        return Field::rationals();
    if (s.rfind("fp:", 0) == 0) {
        long p = 0;
        try {
            p = std::stol(s.substr(3));
        } catch (const std::exception&) {
            throw UsageError("bad field '" + s + "'");
        }
        try {
            return Field::prime(p);
        } catch (const FieldError& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("bad field '" + s + "' (expected q or fp:<p>)");
}

void check_field_for_n(const Field& f, int n)
{
    if (!f.is_rational() && f.characteristic() <= n)
        throw UsageError("field characteristic " + std::to_string(f.characteristic()) +
                         " must exceed n = " + std::to_string(n));
}

PDAlgebra load_ring(const std::string& spec, const Field& f)
{
    if (spec.rfind("builtin:", 0) == 0) {
        try {
            return builtin_ring(spec.substr(8), f);
        } catch (const RingError& e) {
            throw UsageError(e.what());
        }
    }
    PDAlgebra h = parse_ring_file(spec, f);
    auto bad = validate(h);
    if (!bad.empty()) {
        std::string msg = "ring file '" + spec + "' fails validation:";
        for (const auto& v : bad)
            msg += "\n  " + v;
        throw RingError(msg);
    }
    return h;
}

std::string wedge_str(const PDAlgebra& h, const WedgeElement& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : e.terms) {
        if (!out.empty())
            out += " + ";
        if (!(c == Scalar::one(h.field)))
            out += "(" + c.str() + ") ";
        out += m.str(h);
    }
    return out;
}

int cmd_validate(const std::string& path)
{
    PDAlgebra h = parse_ring_file(path, Field::rationals());
    auto bad = validate(h);
    if (bad.empty()) {
        std::cout << "ok: '" << h.name << "' is a valid Poincare-duality algebra (dim "
                  << h.dim() << ", N=" << h.top_degree << ")\n";
        return 0;
    }
    std::cout << "invalid: " << bad.size() << " violation(s)\n";
    for (const auto& v : bad)
        std::cout << "  " << v << "\n";
    return 1;
}

int cmd_betti(const std::string& ring, int n, const std::string& field, bool json)
{
    if (n < 0)
        throw UsageError("--n must be nonnegative");
    Field f = parse_field(field);
    check_field_for_n(f, n);
    PDAlgebra h = load_ring(ring, f);

    std::map<int, long> b;
    if (h.even_dimensional()) {
        auto wc = build_wedge_complex(h, n);
        b = betti(wc.complex);
    } else {
        OddCheck oc = odd_invariants_check(h, n);
        if (!oc.passes) {
            std::cerr << "odd-dimensional route failed:\n";
            for (const auto& s : oc.failures)
                std::cerr << "  " << s << "\n";
            return 1;
        }
        b = oc.betti;
    }

    long total = 0;
    for (const auto& [d, v] : b)
        total += v;
    if (json) {
        ordered_json out;
        out["ring"] = h.name;
        out["dimension"] = h.top_degree;
        out["n"] = n;
        out["field"] = f.name();
        ordered_json bt = ordered_json::object();
        for (const auto& [d, v] : b)
            bt[std::to_string(d)] = v;
        out["betti"] = bt;
        out["total"] = total;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ring " << h.name << "  N=" << h.top_degree << "  n=" << n << "  field "
                  << f.name() << "\n";
        std::cout << "degree  classes\n";
        for (const auto& [d, v] : b)
            std::cout << "  " << d << "\t" << v << "\n";
        std::cout << "total " << total << "\n";
    }
    return 0;
}

int cmd_ring_table(const std::string& ring, int n, const std::string& field, bool json)
{
    if (n < 0)
        throw UsageError("--n must be nonnegative");
    Field f = parse_field(field);
    check_field_for_n(f, n);
    PDAlgebra h = load_ring(ring, f);

    RingTable table;
    std::map<long, std::string> reprs;
    if (h.even_dimensional()) {
        auto wc = build_wedge_complex(h, n);
        auto coh = cohomology(wc.complex);
        table = ring_table(wc, coh);
        for (size_t i = 0; i < table.classes.size(); ++i) {
            const auto& ci = table.classes[i];
            reprs[(long)i] = wedge_str(
                h, wc.from_coords(ci.degree, coh.by_degree.at(ci.degree).reps[ci.index]));
        }
    } else {
        table = odd_ring_table(h, n);
        OddCheck oc = odd_invariants_check(h, n);
        std::map<int, std::vector<std::vector<int>>> by_degree;
        for (const auto& [word, deg] : oc.wedge_basis)
            by_degree[deg].push_back(word);
        for (size_t i = 0; i < table.classes.size(); ++i) {
            const auto& ci = table.classes[i];
            std::string s;
            for (int l : by_degree.at(ci.degree)[ci.index])
                s += (s.empty() ? "" : "^") + h.labels[l];
            reprs[(long)i] = s.empty() ? "1" : s;
        }
    }

    if (json) {
        ordered_json out;
        out["ring"] = h.name;
        out["n"] = n;
        out["field"] = f.name();
        ordered_json classes = ordered_json::array();
        for (size_t i = 0; i < table.classes.size(); ++i) {
            ordered_json c;
            c["name"] = table.classes[i].name;
            c["degree"] = table.classes[i].degree;
            c["representative"] = reprs[(long)i];
            classes.push_back(c);
        }
        out["classes"] = classes;
        ordered_json prods = ordered_json::array();
        for (const auto& [key, coords] : table.products) {
            ordered_json p;
            p["left"] = table.classes[key.first].name;
            p["right"] = table.classes[key.second].name;
            ordered_json value = ordered_json::array();
            int pdeg = table.classes[key.first].degree + table.classes[key.second].degree;
            long idx = 0;
            for (const auto& c : coords) {
                if (!c.is_zero()) {
                    ordered_json t;
                    t["class"] = "h" + std::to_string(pdeg) + "_" + std::to_string(idx);
                    t["coeff"] = c.str();
                    value.push_back(t);
                }
                ++idx;
            }
            p["value"] = value;
            prods.push_back(p);
        }
        out["products"] = prods;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ring " << h.name << "  n=" << n << "  field " << f.name() << "\n";
        std::cout << "classes:\n";
        for (size_t i = 0; i < table.classes.size(); ++i)
            std::cout << "  " << table.classes[i].name << "  degree "
                      << table.classes[i].degree << "  [" << reprs[(long)i] << "]\n";
        std::cout << "products (nonzero):\n";
        for (const auto& [key, coords] : table.products) {
            bool nonzero = false;
            for (const auto& c : coords)
                if (!c.is_zero())
                    nonzero = true;
            if (!nonzero)
                continue;
            int pdeg = table.classes[key.first].degree + table.classes[key.second].degree;
            std::string rhs;
            long idx = 0;
            for (const auto& c : coords) {
                if (!c.is_zero()) {
                    if (!rhs.empty())
                        rhs += " + ";
                    rhs += "(" + c.str() + ") h" + std::to_string(pdeg) + "_" +
                           std::to_string(idx);
                }
                ++idx;
            }
            std::cout << "  " << table.classes[key.first].name << " * "
                      << table.classes[key.second].name << " = " << rhs << "\n";
        }
    }
    return 0;
}

int cmd_e1(const std::string& ring, int n, const std::string& field, bool invariants,
           bool check_phi)
{
    if (n < 1)
        throw UsageError("--n must be positive");
    Field f = parse_field(field);
    check_field_for_n(f, n);
    PDAlgebra h = load_ring(ring, f);

    auto basis = e1_basis(h, n);
    std::cout << "ring " << h.name << "  n=" << n << "  field " << f.name() << "\n";
    std::cout << "bidegree (t,s)  dim" << (invariants ? "  invariant dim" : "") << "\n";
    InvariantBasis inv;
    if (invariants || check_phi)
        inv = invariants_basis(h, n);
    long total = 0, inv_total = 0;
    for (const auto& [bd, monos] : basis) {
        std::cout << "  (" << bd.t << "," << bd.s << ")\t" << monos.size();
        total += (long)monos.size();
        if (invariants) {
            long d = 0;
            for (const auto& block : inv.blocks)
                if (block.bidegree == bd)
                    d = (long)block.invariants.size();
            inv_total += d;
            std::cout << "\t" << d;
        }
        std::cout << "\n";
    }
    std::cout << "total " << total;
    if (invariants)
        std::cout << "  invariants " << inv_total;
    std::cout << "\n";

    if (check_phi) {
        if (!h.even_dimensional())
            throw UsageError("--check-phi needs an even-dimensional ring");
        SuiteResult res = verify_phi_for(h, n);
        for (const auto& c : res.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        if (!res.all_pass())
            return 1;
    }
    return 0;
}

int cmd_free(int N, int n)
{
    if (N < 2 || n < 1)
        throw UsageError("free needs --ambient-dim >= 2 and --n >= 1");
    IntPolynomial p = poincare_polynomial(n, N);
    std::cout << "configurations of " << n << " points in R^" << N << "\n";
    std::cout << "poincare polynomial: " << p.str() << "\n";
    std::string factored = "1";
    for (int k = 1; k <= n - 1; ++k)
        factored += " (1 + " + std::to_string(k) + " t^" + std::to_string(N - 1) + ")";
    std::cout << "factored: " << factored << "\n";
    std::cout << "top component dimension: " << edge_basis(n, n - 1).size() << "\n";
    if (n >= 2 && n <= 8) {
        bool even = N % 2 == 0;
        auto full = tree_invariants(n, even, Subgroup::full);
        auto stab = tree_invariants(n, even, Subgroup::stabilizer_of_1);
        std::cout << "tree invariants: full " << full.dimension << ", stabilizer of 1 "
                  << stab.dimension << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int n_max)
{
    Field f = Field::rationals();
    SuiteResult res;
    if (suite == "cp2") {
        res.merge(verify_cp2_betti(f, n_max > 0 ? n_max : 6));
        res.merge(verify_cp2_ring(f, n_max > 0 ? n_max : 6));
    } else if (suite == "odd") {
        res.merge(verify_odd_dimension(f, n_max > 0 ? n_max : 4));
    } else if (suite == "phi") {
        res.merge(verify_phi_suite(f, n_max > 0 ? n_max : 4));
    } else if (suite == "axioms") {
        res.merge(verify_ring_axioms(f));
        res.merge(verify_property_suites(f, n_max > 0 ? n_max : 4));
    } else {
        throw UsageError("unknown suite '" + suite + "' (cp2|odd|phi|axioms)");
    }
    for (const auto& c : res.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    std::cout << (res.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    return res.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args)
{
    CLI::App app{"cohomology of unordered configuration spaces from a Poincare-duality ring"};
    app.require_subcommand(1);

    std::string ring, field = "q", path, suite;
    int n = 0, n_max = 0, ambient = 0;
    bool json = false, invariants = false, check_phi = false;

    auto* c_validate = app.add_subcommand("validate", "validate a ring file");
    c_validate->add_option("ring-file", path, "JSON presentation of the ring")->required();

    auto* c_betti = app.add_subcommand("betti", "Betti numbers of C_n(M)");
    c_betti->add_option("--ring", ring, "ring file path or builtin:NAME")->required();
    c_betti->add_option("--n", n, "number of points")->required();
    c_betti->add_option("--field", field, "q or fp:<p> (default q)");
    c_betti->add_flag("--json", json, "machine-readable output");

    auto* c_table = app.add_subcommand("ring-table", "cohomology ring structure constants");
    c_table->add_option("--ring", ring, "ring file path or builtin:NAME")->required();
    c_table->add_option("--n", n, "number of points")->required();
    c_table->add_option("--field", field, "q or fp:<p> (default q)");
    c_table->add_flag("--json", json, "machine-readable output");

    auto* c_e1 = app.add_subcommand("e1", "first-page dimensions and embedding checks");
    c_e1->add_option("--ring", ring, "ring file path or builtin:NAME")->required();
    c_e1->add_option("--n", n, "number of points")->required();
    c_e1->add_option("--field", field, "q or fp:<p> (default q)");
    c_e1->add_flag("--invariants", invariants, "also report fixed-subspace dimensions");
    c_e1->add_flag("--check-phi", check_phi, "verify the embedding for this ring");

    auto* c_free = app.add_subcommand("free", "configurations of points in euclidean space");
    c_free->add_option("--ambient-dim", ambient, "dimension N of the ambient space")
        ->required();
    c_free->add_option("--n", n, "number of points")->required();

    auto* c_verify = app.add_subcommand("verify", "bundled verification suites");
    c_verify->add_option("--suite", suite, "cp2|odd|phi|axioms")->required();
    c_verify->add_option("--n-max", n_max, "cap on the number of points");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_validate->parsed())
            return cmd_validate(path);
        if (c_betti->parsed())
            return cmd_betti(ring, n, field, json);
        if (c_table->parsed())
            return cmd_ring_table(ring, n, field, json);
        if (c_e1->parsed())
            return cmd_e1(ring, n, field, invariants, check_phi);
        if (c_free->parsed())
            return cmd_free(ambient, n);
        if (c_verify->parsed())
            return cmd_verify(suite, n_max);
        std::cerr << "usage error: no command\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const FieldError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const RingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ctconfig::cli
