#include "lca/bundle.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lca/expr.hpp"

namespace lca {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &msg) {
    throw BundleError(path + ": " + msg);
}

const json &need(const json &j, const std::string &key,
                 const std::string &path) {
    auto it = j.find(key);
    if (it == j.end())
        fail(path, "missing key '" + key + "'");
    return *it;
}

std::vector<std::string> load_basis(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty())
        fail(path, "expected a non-empty array of basis names");
    std::vector<std::string> out;
    for (const auto &e : j) {
        if (!e.is_string())
            fail(path, "basis names must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<int> parse_key_tuple(const std::string &key, size_t arity,
                                 const std::vector<int> &dims,
                                 const std::string &path) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.size() != arity)
        fail(path, "key '" + key + "' has wrong arity");
    for (size_t k = 0; k < arity; ++k)
        if (out[k] < 0 || out[k] >= dims[k])
            fail(path, "key '" + key + "' index out of range");
    return out;
}

ModElem load_value(const json &j, const std::vector<std::string> &target,
                   const std::string &path) {
    if (!j.is_array() || j.size() != target.size())
        fail(path, "expected an array of " + std::to_string(target.size()) +
                       " coordinate expressions");
    ModElem v(static_cast<int>(target.size()));
    for (size_t t = 0; t < target.size(); ++t) {
        if (!j[t].is_string())
            fail(path, "coordinate expressions must be strings");
        try {
            v.coords[t] = parse_scalar(j[t].get<std::string>());
        } catch (const ParseError &e) {
            fail(path + "[" + std::to_string(t) + "]", e.what());
        }
    }
    return v;
}

// Table values may use d and l1..l_{arity-1}.
MultiTable load_table(const json &j, std::vector<int> dims,
                      const std::vector<std::string> &target, int max_lambda,
                      const std::string &path) {
    if (!j.is_object())
        fail(path, "expected an object of tuple-indexed values");
    MultiTable out(dims, static_cast<int>(target.size()));
    for (const auto &[key, val] : j.items()) {
        std::vector<int> tuple = parse_key_tuple(key, dims.size(), dims, path);
        ModElem v = load_value(val, target, path + "." + key);
        if (v.max_lambda() > max_lambda)
            fail(path + "." + key,
                 "value uses l" + std::to_string(v.max_lambda()) +
                     " but at most l" + std::to_string(max_lambda) +
                     " is allowed here");
        out.at(tuple) = v;
    }
    return out;
}

ConformalMap load_map(const json &j, int rows, int cols,
                      const std::string &path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        fail(path, "expected " + std::to_string(rows) + " rows");
    ConformalMap m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json &row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            fail(path + "[" + std::to_string(r) + "]",
                 "expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                fail(path, "entries must be expression strings");
            Poly p;
            try {
                p = parse_scalar(row[c].get<std::string>());
            } catch (const ParseError &e) {
                fail(path + "[" + std::to_string(r) + "][" +
                         std::to_string(c) + "]",
                     e.what());
            }
            if (p.max_lambda() > 0)
                fail(path + "[" + std::to_string(r) + "][" +
                         std::to_string(c) + "]",
                     "map entries must use only d (C[d]-linearity)");
            m.at(r, c) = p;
        }
    }
    return m;
}

LieConformalAlgebra load_algebra(const json &j, const std::string &path) {
    std::string name = need(j, "name", path).get<std::string>();
    std::vector<std::string> basis =
        load_basis(need(j, "basis", path), path + ".basis");
    LieConformalAlgebra A = LieConformalAlgebra::make(name, basis);
    int n = A.rank();
    A.structure = load_table(need(j, "bracket", path), {n, n}, basis, 1,
                             path + ".bracket");
    return A;
}

json save_value(const ModElem &v) {
    json arr = json::array();
    for (const auto &p : v.coords)
        arr.push_back(p.to_string());
    return arr;
}

json save_table(const MultiTable &t) {
    json obj = json::object();
    t.for_each_tuple([&](const std::vector<int> &tuple) {
        const ModElem &v = t.at(tuple);
        if (v.is_zero())
            return;
        std::string key;
        for (size_t k = 0; k < tuple.size(); ++k)
            key += (k ? "," : "") + std::to_string(tuple[k]);
        obj[key] = save_value(v);
    });
    return obj;
}

json save_map(const ConformalMap &m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c)
            row.push_back(m.at(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

json save_algebra(const LieConformalAlgebra &A) {
    json j;
    j["name"] = A.name;
    j["basis"] = A.basis;
    j["bracket"] = save_table(A.structure);
    return j;
}

AvgLca make_avg(const LieConformalAlgebra &alg, const ConformalMap &P) {
    return AvgLca{alg, P};
}

} // namespace

const ConformalMap &Bundle::map_named(const std::string &name) const {
    auto it = maps.find(name);
    if (it == maps.end())
        throw BundleError("no map named '" + name + "' in the bundle");
    return it->second;
}

Bundle load_bundle(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception &e) {
        throw BundleError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw BundleError("top level must be an object");
    if (!j.contains("format") || !j["format"].is_number_integer() ||
        j["format"].get<int>() != 1)
        throw BundleError("format: expected the integer 1");

    Bundle b;
    b.algebra = load_algebra(need(j, "algebra", "algebra"), "algebra");
    int n = b.algebra.rank();

    if (j.contains("assoc")) {
        const json &aj = j["assoc"];
        AssocConformalAlgebra B;
        B.name = need(aj, "name", "assoc").get<std::string>();
        B.basis = load_basis(need(aj, "basis", "assoc"), "assoc.basis");
        int r = B.rank();
        B.structure = load_table(need(aj, "product", "assoc"), {r, r},
                                 B.basis, 1, "assoc.product");
        b.assoc = B;
    }

    if (j.contains("fiber"))
        b.fiber = load_algebra(j["fiber"], "fiber");

    if (j.contains("maps")) {
        const json &maps = j["maps"];
        if (!maps.is_object())
            throw BundleError("maps: expected an object");
        for (const auto &[name, mj] : maps.items()) {
            if (!mj.is_array() || mj.empty() || !mj[0].is_array())
                fail("maps." + name, "expected a matrix of expressions");
            int rows = static_cast<int>(mj.size());
            int cols = static_cast<int>(mj[0].size());
            b.maps.emplace(name, load_map(mj, rows, cols, "maps." + name));
        }
    }

    if (j.contains("rep")) {
        const json &rj = j["rep"];
        BundleRep rep;
        rep.module_basis =
            load_basis(need(rj, "module_basis", "rep"), "rep.module_basis");
        int m = static_cast<int>(rep.module_basis.size());
        rep.action = load_table(need(rj, "action", "rep"), {n, m},
                                rep.module_basis, 1, "rep.action");
        if (rj.contains("phi"))
            rep.phi_name = rj["phi"].get<std::string>();
        if (rj.contains("operator"))
            rep.operator_name = rj["operator"].get<std::string>();
        b.rep = rep;
    }

    int module_rank = b.rep ? static_cast<int>(b.rep->module_basis.size()) : n;
    std::vector<std::string> module_basis =
        b.rep ? b.rep->module_basis : b.algebra.basis;

    if (j.contains("cochains")) {
        const json &cj = j["cochains"];
        if (!cj.is_object())
            throw BundleError("cochains: expected an object");
        for (const auto &[name, fj] : cj.items()) {
            std::string path = "cochains." + name;
            int degree = need(fj, "degree", path).get<int>();
            if (degree < 1 || degree > 4)
                fail(path, "degree must be between 1 and 4");
            Cochain f = Cochain::make(degree, n, module_rank);
            f.values =
                load_table(need(fj, "values", path),
                           std::vector<int>(degree, n), module_basis,
                           degree - 1, path + ".values");
            b.cochains.emplace(name, f);
        }
    }

    if (j.contains("two_term")) {
        const json &tj = j["two_term"];
        std::string path = "two_term";
        std::vector<std::string> b0 =
            load_basis(need(tj, "basis0", path), path + ".basis0");
        std::vector<std::string> b1 =
            load_basis(need(tj, "basis1", path), path + ".basis1");
        TwoTermLInf T = TwoTermLInf::make(b0, b1);
        int n0 = T.n0(), n1 = T.n1();
        T.d = load_map(need(tj, "d", path), n0, n1, path + ".d");
        T.bracket00 = load_table(need(tj, "bracket00", path), {n0, n0}, b0, 1,
                                 path + ".bracket00");
        T.bracket01 = load_table(need(tj, "bracket01", path), {n0, n1}, b1, 1,
                                 path + ".bracket01");
        T.l3 = load_table(need(tj, "l3", path), {n0, n0, n0}, b1, 2,
                          path + ".l3");
        HomotopyAvg P;
        P.P0 = load_map(need(tj, "P0", path), n0, n0, path + ".P0");
        P.P1 = load_map(need(tj, "P1", path), n1, n1, path + ".P1");
        P.P2 = load_table(need(tj, "P2", path), {n0, n0}, b1, 1, path + ".P2");
        b.two_term = TwoTermBundle{T, P};
    }

    if (j.contains("crossed")) {
        const json &cj = j["crossed"];
        std::string path = "crossed";
        CrossedModule C;
        std::vector<std::string> db =
            load_basis(need(cj, "down_basis", path), path + ".down_basis");
        C.down = LieConformalAlgebra::make("down", db);
        C.down.structure =
            load_table(need(cj, "down_bracket", path),
                       {C.down.rank(), C.down.rank()}, db, 1,
                       path + ".down_bracket");
        std::vector<std::string> ub =
            load_basis(need(cj, "up_basis", path), path + ".up_basis");
        C.up = LieConformalAlgebra::make("up", ub);
        C.up.structure = load_table(need(cj, "up_bracket", path),
                                    {C.up.rank(), C.up.rank()}, ub, 1,
                                    path + ".up_bracket");
        int n0 = C.down.rank(), n1 = C.up.rank();
        C.P0 = load_map(need(cj, "P0", path), n0, n0, path + ".P0");
        C.P1 = load_map(need(cj, "P1", path), n1, n1, path + ".P1");
        C.d = load_map(need(cj, "d", path), n0, n1, path + ".d");
        C.action = load_table(need(cj, "action", path), {n0, n1}, ub, 1,
                              path + ".action");
        b.crossed = C;
    }

    auto load_cocycle = [&](const json &cj,
                            const std::string &path) -> NonAbCocycle {
        if (!b.fiber)
            fail(path, "a cocycle needs a 'fiber' algebra in the bundle");
        int h = b.fiber->rank();
        NonAbCocycle c;
        c.base = make_avg(b.algebra,
                          load_map(need(cj, "P", path), n, n, path + ".P"));
        c.fiber = make_avg(*b.fiber,
                           load_map(need(cj, "Q", path), h, h, path + ".Q"));
        c.chi = load_table(need(cj, "chi", path), {n, n}, b.fiber->basis, 1,
                           path + ".chi");
        c.rho = load_table(need(cj, "rho", path), {n, h}, b.fiber->basis, 1,
                           path + ".rho");
        c.Phi = load_map(need(cj, "Phi", path), h, n, path + ".Phi");
        return c;
    };
    if (j.contains("cocycle"))
        b.cocycle = load_cocycle(j["cocycle"], "cocycle");
    if (j.contains("cocycle2"))
        b.cocycle2 = load_cocycle(j["cocycle2"], "cocycle2");

    if (j.contains("extension")) {
        const json &ej = j["extension"];
        std::string path = "extension";
        if (!b.fiber)
            fail(path, "an extension needs a 'fiber' algebra in the bundle");
        int h = b.fiber->rank();
        int N = n + h;
        Extension E;
        E.base = make_avg(b.algebra,
                          load_map(need(ej, "P", path), n, n, path + ".P"));
        E.fiber = make_avg(*b.fiber,
                           load_map(need(ej, "Q", path), h, h, path + ".Q"));
        std::vector<std::string> tb = b.algebra.basis;
        tb.insert(tb.end(), b.fiber->basis.begin(), b.fiber->basis.end());
        E.total.alg = LieConformalAlgebra::make(b.algebra.name + "_ext", tb);
        E.total.alg.structure =
            load_table(need(ej, "total_bracket", path), {N, N}, tb, 1,
                       path + ".total_bracket");
        E.total.P = load_map(need(ej, "R", path), N, N, path + ".R");
        E.section = load_map(need(ej, "section", path), N, n,
                             path + ".section");
        E.incl = ConformalMap(N, h);
        for (int a = 0; a < h; ++a)
            E.incl.at(n + a, a) = Poly(1);
        E.proj = ConformalMap(n, N);
        for (int i = 0; i < n; ++i)
            E.proj.at(i, i) = Poly(1);
        b.extension = E;
    }

    if (j.contains("aut_pair")) {
        const json &aj = j["aut_pair"];
        std::string path = "aut_pair";
        if (!b.fiber)
            fail(path, "an automorphism pair needs a 'fiber' algebra");
        int h = b.fiber->rank();
        AutPair ap;
        ap.alpha = load_map(need(aj, "alpha", path), h, h, path + ".alpha");
        ap.beta = load_map(need(aj, "beta", path), n, n, path + ".beta");
        b.aut_pair = ap;
    }
    return b;
}

Bundle load_bundle_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw BundleError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_bundle(ss.str());
}

std::string save_bundle(const Bundle &b) {
    json j;
    j["format"] = 1;
    j["algebra"] = save_algebra(b.algebra);
    if (b.assoc) {
        json aj;
        aj["name"] = b.assoc->name;
        aj["basis"] = b.assoc->basis;
        aj["product"] = save_table(b.assoc->structure);
        j["assoc"] = aj;
    }
    if (b.fiber)
        j["fiber"] = save_algebra(*b.fiber);
    if (!b.maps.empty()) {
        json maps = json::object();
        for (const auto &[name, m] : b.maps)
            maps[name] = save_map(m);
        j["maps"] = maps;
    }
    if (b.rep) {
        json rj;
        rj["module_basis"] = b.rep->module_basis;
        rj["action"] = save_table(b.rep->action);
        if (!b.rep->phi_name.empty())
            rj["phi"] = b.rep->phi_name;
        if (!b.rep->operator_name.empty())
            rj["operator"] = b.rep->operator_name;
        j["rep"] = rj;
    }
    if (!b.cochains.empty()) {
        json cj = json::object();
        for (const auto &[name, f] : b.cochains) {
            json fj;
            fj["degree"] = f.degree;
            fj["values"] = save_table(f.values);
            cj[name] = fj;
        }
        j["cochains"] = cj;
    }
    if (b.two_term) {
        json tj;
        tj["basis0"] = b.two_term->T.basis0;
        tj["basis1"] = b.two_term->T.basis1;
        tj["d"] = save_map(b.two_term->T.d);
        tj["bracket00"] = save_table(b.two_term->T.bracket00);
        tj["bracket01"] = save_table(b.two_term->T.bracket01);
        tj["l3"] = save_table(b.two_term->T.l3);
        tj["P0"] = save_map(b.two_term->P.P0);
        tj["P1"] = save_map(b.two_term->P.P1);
        tj["P2"] = save_table(b.two_term->P.P2);
        j["two_term"] = tj;
    }
    if (b.crossed) {
        json cj;
        cj["down_basis"] = b.crossed->down.basis;
        cj["down_bracket"] = save_table(b.crossed->down.structure);
        cj["up_basis"] = b.crossed->up.basis;
        cj["up_bracket"] = save_table(b.crossed->up.structure);
        cj["P0"] = save_map(b.crossed->P0);
        cj["P1"] = save_map(b.crossed->P1);
        cj["d"] = save_map(b.crossed->d);
        cj["action"] = save_table(b.crossed->action);
        j["crossed"] = cj;
    }
    auto save_cocycle = [](const NonAbCocycle &c) {
        json cj;
        cj["P"] = save_map(c.base.P);
        cj["Q"] = save_map(c.fiber.P);
        cj["chi"] = save_table(c.chi);
        cj["rho"] = save_table(c.rho);
        cj["Phi"] = save_map(c.Phi);
        return cj;
    };
    if (b.cocycle)
        j["cocycle"] = save_cocycle(*b.cocycle);
    if (b.cocycle2)
        j["cocycle2"] = save_cocycle(*b.cocycle2);
    if (b.extension) {
        json ej;
        ej["P"] = save_map(b.extension->base.P);
        ej["Q"] = save_map(b.extension->fiber.P);
        ej["total_bracket"] = save_table(b.extension->total.alg.structure);
        ej["R"] = save_map(b.extension->total.P);
        ej["section"] = save_map(b.extension->section);
        j["extension"] = ej;
    }
    if (b.aut_pair) {
        json aj;
        aj["alpha"] = save_map(b.aut_pair->alpha);
        aj["beta"] = save_map(b.aut_pair->beta);
        j["aut_pair"] = aj;
    }
    return j.dump(2) + "\n";
}

} // namespace lca
