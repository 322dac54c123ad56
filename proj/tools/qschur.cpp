// qschur: command line front end.
//
//   qschur dim cyc-schur --l 1 --m 2
//   qschur basis cyc-web --l 1 --source 1,1 --target 1,1
//   qschur verify affine-schur --relations all --max-thickness 2
//
// Output is JSON (default) or a fixed-width table.  Exit codes: 0 ok, 1 usage, 2 internal failure.

#include <qschur/cycschur.hpp>
#include <qschur/relations.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qschur;
using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "qschur-cli/1";

struct Options {
    std::string category;
    int ell = 1;
    int m = -1;
    std::string u;
    std::string source, target;
    std::string lambda, mu;
    std::string top, bottom;
    int dot_bound = 1;
    std::string relations = "all";
    int max_thickness = 2;
    int max_weight = 3;
    std::string format = "json";
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// internal failure carrying a witness
class check_failure : public std::runtime_error {
public:
    check_failure(const std::string& what, json witness) : std::runtime_error(what), witness(std::move(witness)) {}
    json witness;
};

std::vector<Laurent> parse_laurents(const std::string& s) {
    std::vector<Laurent> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) try {
                out.push_back(Laurent::parse(tok));
            } catch (const std::exception& e) {
                throw usage_error("bad parameter '" + tok + "': " + e.what());
            }
    return out;
}

std::vector<Laurent> cyc_parameters(const Options& o) {
    if (o.ell < 1) throw usage_error("--l must be positive");
    if (o.u.empty()) return CycHecke::default_parameters(o.ell);
    auto us = parse_laurents(o.u);
    if (static_cast<int>(us.size()) != o.ell) throw usage_error("--u needs exactly " + std::to_string(o.ell) + " parameters");
    return us;
}

HeckePtr cyc_algebra(const Options& o, int m) {
    if (m < 0) throw usage_error("weight must be nonnegative");
    return CycHecke::get(o.ell, m, cyc_parameters(o));
}

MultiComposition need(const std::string& s, const char* flag) {
    if (s.empty()) throw usage_error(std::string("missing ") + flag);
    try {
        return parse_multicomposition(s);
    } catch (const std::exception& e) {
        throw usage_error(std::string(flag) + ": " + e.what());
    }
}

// an ell-multicomposition, or a (1+ell) one with empty first component
MultiComposition schur_weight(const std::string& s, const char* flag, int ell) {
    auto c = need(s, flag);
    if (static_cast<int>(c.size()) == ell + 1) {
        if (!c[0].empty()) throw usage_error(std::string(flag) + ": black strands left of every red give a zero object");
        c.erase(c.begin());
    }
    if (static_cast<int>(c.size()) != ell) throw usage_error(std::string(flag) + ": expected " + std::to_string(ell) + " components");
    return c;
}

MultiComposition with_empty_front(const MultiComposition& c) {
    MultiComposition r{{}};
    r.insert(r.end(), c.begin(), c.end());
    return r;
}

json label_json(const BasisLabel& l) { return {{"label", l.str()}, {"matrix", l.A}, {"degree", l.degree()}}; }

// ---------------------------------------------------------------- verbs

json do_basis(const Options& o) {
    json labels = json::array();
    if (o.category == "affine-web" || o.category == "affine-schur") {
        auto src = need(o.source, "--source"), tgt = need(o.target, "--target");
        std::vector<Laurent> reds = parse_laurents(o.u);
        if (o.category == "affine-web" && (src.size() != 1 || tgt.size() != 1)) throw usage_error("affine-web objects have one component");
        if (src.size() != reds.size() + 1 || tgt.size() != reds.size() + 1) throw usage_error("component count must be one more than the number of --u values");
        auto rk = rparmat_rank(src, tgt, o.dot_bound, reds);
        if (!rk.full()) throw check_failure("labels are dependent", {{"labels", rk.labels}, {"rank", rk.rank}});
        for (auto& l : enumerate_basis_labels(LabelKind::RParMat, tgt, src, o.dot_bound)) labels.push_back(label_json(l));
        return {{"kind", "RParMat"}, {"dot_bound", o.dot_bound}, {"labels", labels}, {"count", labels.size()}};
    }
    MultiComposition src, tgt;
    LabelKind kind;
    if (o.category == "cyc-web") {
        auto s = need(o.source, "--source"), t = need(o.target, "--target");
        if (s.size() != 1 || t.size() != 1) throw usage_error("cyc-web objects are compositions");
        src = embed_web_object(s[0], o.ell);
        tgt = embed_web_object(t[0], o.ell);
        kind = LabelKind::ParMatLevel;
    } else {
        src = with_empty_front(schur_weight(o.source, "--source", o.ell));
        tgt = with_empty_front(schur_weight(o.target, "--target", o.ell));
        kind = LabelKind::ParMatFlat;
    }
    if (weight(src) != weight(tgt)) return {{"kind", kind_name(kind)}, {"labels", labels}, {"count", 0}};
    auto h = cyc_algebra(o, weight(src));
    try {
        for (auto& x : cyc_hom_basis(h, kind, src, tgt)) labels.push_back(label_json(x.label));
    } catch (const rank_error& e) {
        throw check_failure(e.what(), {{"source", to_text(src)}, {"target", to_text(tgt)}});
    }
    return {{"kind", kind_name(kind)}, {"labels", labels}, {"count", labels.size()}};
}

json do_dim(const Options& o) {
    if (o.category == "affine-web" || o.category == "affine-schur") {
        json b = do_basis(o);
        return {{"dimension", b["count"]}, {"dot_bound", o.dot_bound}, {"note", "graded piece of dot degree <= dot_bound"}};
    }
    if (o.category == "cyc-web") {
        json b = do_basis(o);
        return {{"dimension", b["count"]}};
    }
    if (!o.source.empty() || !o.target.empty()) {
        auto mu = schur_weight(o.source, "--source", o.ell), nu = schur_weight(o.target, "--target", o.ell);
        if (weight(mu) != weight(nu)) return {{"dimension", 0}};
        auto h = cyc_algebra(o, weight(mu));
        return {{"dimension", hom_dim(h, mu, nu)}};
    }
    if (o.m < 0) throw usage_error("dim cyc-schur needs --m or --source/--target");
    auto h = cyc_algebra(o, o.m);
    auto ws = schur_weights(*h);
    std::size_t sst = sst_pair_count(o.m, o.ell, ws, ws), homs = 0;
    for (auto& a : ws)
        for (auto& b : ws) homs += hom_dim(h, a, b);
    if (sst != homs) throw check_failure("dimension mismatch", {{"sst_pairs", sst}, {"hom_dims", homs}});
    return {{"dimension", sst}, {"weights", ws.size()}};
}

json do_compose(const Options& o) {
    if (o.top.empty() || o.bottom.empty()) throw usage_error("compose needs --top and --bottom");
    Term top, bottom;
    try {
        top = parse_sexpr(o.top);
        bottom = parse_sexpr(o.bottom);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
    Term t = compose(top, bottom);
    DegreeReport d = degrees(t);
    json r{{"term", to_sexpr(t)},
           {"source", object_text(t.source())},
           {"target", object_text(t.target())},
           {"crossing_degree", d.crossing_degree},
           {"dot_degree", d.dot_degree}};
    if (o.category == "cyc-web" || o.category == "cyc-schur") {
        auto h = cyc_algebra(o, black_weight(t.source()));
        CycMorphism g = apply_G(h, t);
        r["zero_object"] = g.zero_object;
        r["image"] = g.zero_object ? json("0") : json(h->text(g.map.image));
    } else {
        auto ex = expand_in_basis(LinComb(t));
        json cs = json::array();
        for (auto& [lab, c] : ex.coeffs) cs.push_back({{"label", lab.str()}, {"coefficient", c.str()}});
        r["expansion"] = cs;
    }
    return r;
}

std::vector<std::string> selected_relations(const Options& o) {
    std::vector<std::string> ids;
    if (o.relations == "all") {
        ids = relation_ids(RelationGroup::Web);
        if (o.category != "affine-web" && o.category != "cyc-web")
            for (auto& id : relation_ids(RelationGroup::Schur)) ids.push_back(id);
    } else if (o.relations == "derived") {
        ids = relation_ids(RelationGroup::Derived);
    } else {
        std::stringstream ss(o.relations);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                find_relation(tok);
            } catch (const std::exception& e) {
                throw usage_error(e.what());
            }
            ids.push_back(tok);
        }
    }
    return ids;
}

json do_verify(const Options& o) {
    if (o.max_thickness < 1) throw usage_error("--max-thickness must be positive");
    json reports = json::array(), failed = json::array();
    if (o.category == "affine-web" || o.category == "affine-schur") {
        auto us = parse_laurents(o.u);
        if (us.size() > 1) throw usage_error("affine verification takes one --u value");
        Laurent u = us.empty() ? default_red_parameter() : us[0];
        for (auto& id : selected_relations(o))
            for (auto& r : verify_relation(id, o.max_thickness, u)) {
                json j = to_json(r);
                j.erase("seconds");  // keep output deterministic
                reports.push_back(j);
                if (!r.pass) failed.push_back(j);
            }
    } else {
        for (auto& r : verify_G_relations(o.ell, selected_relations(o), o.max_thickness, o.max_weight)) {
            reports.push_back(to_json(r));
            if (!r.pass) failed.push_back(to_json(r));
        }
    }
    if (!failed.empty()) throw check_failure(std::to_string(failed.size()) + " relation instances failed", failed);
    return {{"instances", reports.size()}, {"all_pass", true}, {"reports", reports}};
}

json do_sst(const Options& o) {
    auto lam = need(o.lambda, "--lambda"), mu = need(o.mu, "--mu");
    json ts = json::array();
    for (auto& t : enumerate_sst(lam, mu)) ts.push_back(t.str());
    return {{"lambda", to_text(lam)}, {"mu", to_text(mu)}, {"tableaux", ts}, {"count", ts.size()}};
}

json do_cellular(const Options& o) {
    if (o.category != "cyc-schur") throw usage_error("cellular applies to cyc-schur");
    if (o.m < 0) throw usage_error("cellular needs --m");
    auto h = cyc_algebra(o, o.m);
    std::vector<CellularElement> b;
    try {
        b = phi_basis(h);
    } catch (const hom_error& e) {
        throw check_failure(e.what(), {{"ell", o.ell}, {"m", o.m}});
    }
    std::size_t rk = cellular_rank(b);
    if (rk != b.size()) throw check_failure("cellular elements are dependent", {{"size", b.size()}, {"rank", rk}});
    json els = json::array();
    for (auto& e : b) els.push_back(to_json(e));
    return {{"size", b.size()}, {"rank", rk}, {"elements", els}};
}

json do_check_iso(const Options& o) {
    if (o.category != "cyc-schur") throw usage_error("check-iso applies to cyc-schur");
    if (o.m < 0) throw usage_error("check-iso needs --m");
    auto cert = check_isomorphism(cyc_algebra(o, o.m));
    if (!cert.ok_scaled()) throw check_failure("G disagrees with the cellular basis", to_json(cert));
    return to_json(cert);
}

// ---------------------------------------------------------------- rendering

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_table(std::ostream& os, const json& result) {
    // the first array of records becomes the table body, scalars become a header
    std::string list_key;
    for (auto& [k, v] : result.items()) {
        if (v.is_array() && list_key.empty())
            list_key = k;
        else
            os << std::left << std::setw(16) << k << cell(v) << "\n";
    }
    if (list_key.empty()) return;
    const json& rows = result[list_key];
    os << "\n";
    if (rows.empty()) {
        os << "(empty)\n";
        return;
    }
    if (!rows[0].is_object()) {
        for (auto& r : rows) os << cell(r) << "\n";
        return;
    }
    std::vector<std::string> cols;
    for (auto& [k, v] : rows[0].items()) cols.push_back(k);
    std::vector<std::size_t> w(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        w[c] = cols[c].size();
        for (auto& r : rows) w[c] = std::max(w[c], cell(r.value(cols[c], json(""))).size());
    }
    for (std::size_t c = 0; c < cols.size(); ++c) os << std::left << std::setw(static_cast<int>(w[c] + 2)) << cols[c];
    os << "\n";
    for (auto& r : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) os << std::left << std::setw(static_cast<int>(w[c] + 2)) << cell(r.value(cols[c], json("")));
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qschur: affine and cyclotomic q-Schur categories"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> categories{"affine-web", "affine-schur", "cyc-web", "cyc-schur"};

    auto common = [&](CLI::App* sc) {
        sc->add_option("category", o.category, "affine-web | affine-schur | cyc-web | cyc-schur")->required()->check(CLI::IsMember(categories));
        sc->add_option("--l", o.ell, "level")->check(CLI::PositiveNumber);
        sc->add_option("--u", o.u, "comma separated red parameters");
        sc->add_option("--format", o.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    };
    struct Verb {
        const char* name;
        const char* help;
        json (*run)(const Options&);
    };
    const Verb verbs[] = {{"basis", "list basis labels of a Hom space", do_basis},
                          {"dim", "dimension of a Hom space or of the whole Schur algebra", do_dim},
                          {"compose", "compose two diagrams given as s-expressions", do_compose},
                          {"verify", "check relations under the polynomial functor or under G", do_verify},
                          {"sst", "enumerate semistandard multitableaux", do_sst},
                          {"cellular", "cellular basis of the cyclotomic q-Schur algebra", do_cellular},
                          {"check-iso", "compare G on double SST diagrams with the cellular basis", do_check_iso}};
    std::map<CLI::App*, const Verb*> by_app;
    for (auto& v : verbs) {
        auto* sc = app.add_subcommand(v.name, v.help);
        common(sc);
        by_app[sc] = &v;
        std::string n = v.name;
        if (n == "basis" || n == "dim") {
            sc->add_option("--source", o.source, "source object");
            sc->add_option("--target", o.target, "target object");
            sc->add_option("--dot-bound", o.dot_bound, "dot degree bound for RParMat labels")->check(CLI::NonNegativeNumber);
        }
        if (n == "dim" || n == "cellular" || n == "check-iso") sc->add_option("--m", o.m, "rank")->check(CLI::NonNegativeNumber);
        if (n == "compose") {
            sc->add_option("--top", o.top, "diagram applied second")->required();
            sc->add_option("--bottom", o.bottom, "diagram applied first")->required();
        }
        if (n == "verify") {
            sc->add_option("--relations", o.relations, "all | derived | comma separated ids");
            sc->add_option("--max-thickness", o.max_thickness, "largest strand thickness");
            sc->add_option("--max-weight", o.max_weight, "largest black weight pushed through G");
        }
        if (n == "sst") {
            sc->add_option("--lambda", o.lambda, "shape")->required();
            sc->add_option("--mu", o.mu, "type")->required();
        }
    }
    CLI11_PARSE(app, argc, argv);

    const Verb* verb = nullptr;
    for (auto* sc : app.get_subcommands()) verb = by_app.at(sc);
    json out{{"schema", kSchema}, {"command", verb->name}, {"category", o.category}};
    try {
        out["result"] = verb->run(o);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const check_failure& e) {
        out["error"] = e.what();
        out["witness"] = e.witness;
        std::cout << out.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        out["error"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 2;
    }
    if (o.format == "table") {
        std::cout << verb->name << " " << o.category << "\n";
        render_table(std::cout, out["result"]);
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}
