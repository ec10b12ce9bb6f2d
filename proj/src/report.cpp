#include "lcslab/report.hpp"

#include "lcslab/catalog.hpp"
#include "lcslab/cohomology.hpp"
#include "lcslab/construct.hpp"
#include "lcslab/errors.hpp"
#include "lcslab/exterior.hpp"
#include "lcslab/lattice.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/parse.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lcslab {

namespace {

struct Usage {
    std::string msg;
};

struct Options {
    std::string subcommand;
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> flags;
    bool json = false;

    bool has(const std::string& key) const {
        for (const auto& [k, v] : flags)
            if (k == key) return true;
        return false;
    }
    std::string get(const std::string& key) const {
        for (const auto& [k, v] : flags)
            if (k == key) return v;
        throw Usage{"missing required flag --" + key};
    }
    std::string get_or(const std::string& key, const std::string& dflt) const {
        return has(key) ? get(key) : dflt;
    }
};

const std::vector<std::string> kSubcommands = {
    "validate",       "profile",    "cohomology",  "lcs-verify",  "lcs-search",
    "kind",           "contact-verify", "contact-search", "derivations", "extend-contact",
    "double-extend",  "lattice-check",  "catalog"};

const std::vector<std::string> kValueFlags = {"algebra", "file",  "catalog", "param", "theta",
                                              "omega",   "eta",   "beta",    "derivation",
                                              "seed",    "budget", "family", "k", "t0"};

Options scan(const std::vector<std::string>& args) {
    Options opt;
    if (args.empty()) throw Usage{"no subcommand given"};
    opt.subcommand = args[0];
    bool known = false;
    for (const auto& s : kSubcommands) known |= (s == opt.subcommand);
    if (!known) throw Usage{"unknown subcommand '" + opt.subcommand + "'"};
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            opt.json = true;
            continue;
        }
        if (a.rfind("--", 0) == 0) {
            std::string key = a.substr(2);
            bool value_flag = false;
            for (const auto& f : kValueFlags) value_flag |= (f == key);
            if (!value_flag) throw Usage{"unknown flag " + a};
            if (i + 1 >= args.size()) throw Usage{"flag " + a + " needs a value"};
            opt.flags.emplace_back(key, args[++i]);
        } else {
            opt.positional.push_back(a);
        }
    }
    return opt;
}

long flag_number(const Options& opt, const std::string& key, long dflt) {
    if (!opt.has(key)) return dflt;
    try {
        std::size_t used = 0;
        long v = std::stol(opt.get(key), &used);
        if (used != opt.get(key).size()) throw Usage{"--" + key + " expects an integer"};
        return v;
    } catch (const Usage&) {
        throw;
    } catch (const std::exception&) {
        throw Usage{"--" + key + " expects an integer"};
    }
}

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.has("seed")) return static_cast<std::uint64_t>(flag_number(opt, "seed", 0));
    if (const char* env = std::getenv("LCSLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Usage{"LCSLAB_SEED must be an integer"};
        }
    }
    return 0;
}

nlohmann::json jvec(const QVec& v) {
    auto a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

nlohmann::json jmat(const QMat& m) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json jpimat(const PiMat& m) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::map<std::string, Rat> collect_params(const Options& opt) {
    std::map<std::string, Rat> params;
    for (const auto& [k, v] : opt.flags) {
        if (k != "param") continue;
        auto eq = v.find('=');
        if (eq == std::string::npos) throw Usage{"--param expects name=value, got '" + v + "'"};
        params[v.substr(0, eq)] = Rat::from_string(v.substr(eq + 1));
    }
    return params;
}

struct Loaded {
    LieAlgebra g;
    std::optional<CatalogEntry> entry;
};

Loaded load_algebra(const Options& opt) {
    int sources = (opt.has("algebra") ? 1 : 0) + (opt.has("file") ? 1 : 0) +
                  (opt.has("catalog") ? 1 : 0);
    if (sources != 1)
        throw Usage{"exactly one of --algebra, --file, --catalog selects the input"};
    if (opt.has("algebra")) return {parse_salamon(opt.get("algebra")), std::nullopt};
    if (opt.has("file")) {
        std::ifstream in(opt.get("file"));
        if (!in) throw Error("cannot read file '" + opt.get("file") + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return {algebra_from_json_text(buf.str()), std::nullopt};
    }
    CatalogEntry e = catalog_get(opt.get("catalog"), collect_params(opt));
    return {e.algebra, std::move(e)};
}

nlohmann::json algebra_echo(const LieAlgebra& g) {
    nlohmann::json j;
    j["name"] = g.name();
    j["dim"] = g.dim();
    j["basis_offset"] = g.display_offset();
    if (auto s = print_salamon(g)) j["salamon"] = *s;
    j["fingerprint"] = invariant_fingerprint(g).str();
    return j;
}

KForm form_flag(const Options& opt, const std::string& key, const LieAlgebra& g, int degree) {
    return parse_form(opt.get(key), g.dim(), degree, g.display_offset());
}

QMat matrix_flag(const Options& opt, const std::string& key, int n) {
    std::string text = opt.get(key);
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw Error("cannot read file '" + text.substr(1) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("invalid matrix JSON: ") + e.what(), 0);
    }
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SyntaxError("matrix must be a " + std::to_string(n) + "x" + std::to_string(n) +
                              " JSON array",
                          0);
    QMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw SyntaxError("matrix row " + std::to_string(i) + " has the wrong length", 0);
        for (int c = 0; c < n; ++c)
            m(i, c) = j[i][c].is_number_integer() ? Rat(j[i][c].get<long>())
                                                  : Rat::from_string(j[i][c].get<std::string>());
    }
    return m;
}

int code_for(const std::string& status) {
    if (status == "verified") return 0;
    if (status == "refuted") return 1;
    if (status == "inconclusive") return 2;
    return 65;
}

nlohmann::json profile_json(const StructuralProfile& p) {
    nlohmann::json j;
    j["unimodular"] = p.unimodular;
    j["solvable"] = p.solvable;
    j["nilpotent"] = p.nilpotent;
    if (p.type_I)
        j["type_I"] = *p.type_I;
    else
        j["type_I"] = nullptr;
    j["center_dim"] = p.center_dim;
    j["derived_series_dims"] = p.derived_series_dims;
    j["lower_central_dims"] = p.lower_central_dims;
    return j;
}

void lcs_structure_into(const LcsStructure& s, const LieAlgebra& g, Report& rep) {
    rep.results["symplectic"] = s.symplectic;
    rep.results["kind"] =
        s.symplectic ? "NotApplicable" : (s.kind == LcsKind::FirstKind ? "FirstKind" : "SecondKind");
    rep.results["exact"] = s.potential.has_value();
    rep.certificates["lee_vector"] = jvec(s.lee_vector);
    rep.certificates["pfaffian"] = pfaffian(s.omega.gram()).str();
    if (s.potential) rep.certificates["potential"] = s.potential->str(g.display_offset());
    if (s.anti_lee_vector) rep.certificates["anti_lee_vector"] = jvec(*s.anti_lee_vector);
}

void run_validate(const Options& opt, Report& rep) {
    try {
        Loaded in = load_algebra(opt);
        rep.input["algebra"] = algebra_echo(in.g);
        rep.status = "verified";
        rep.message = "Jacobi identity holds";
    } catch (const JacobiViolation& v) {
        rep.status = "refuted";
        rep.message = v.what();
        auto defects = nlohmann::json::array();
        for (const auto& [i, j, k, d] : v.defects)
            defects.push_back({{"triple", {i, j, k}}, {"defect", jvec(d)}});
        rep.certificates["jacobi_defects"] = defects;
    }
}

void run_profile(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    rep.results = profile_json(structural_profile(in.g));
    rep.status = "verified";
}

void run_cohomology(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    KForm theta = opt.has("theta") ? form_flag(opt, "theta", in.g, 1) : KForm(in.g.dim(), 1);
    rep.input["theta"] = theta.str(in.g.display_offset());
    CohomologyReport c = cohomology(in.g, theta);
    rep.results["dims"] = c.dims;
    rep.results["all_zero"] = c.all_zero();
    auto reps = nlohmann::json::array();
    for (const auto& degree : c.representatives) {
        auto level = nlohmann::json::array();
        for (const auto& f : degree) level.push_back(f.str(in.g.display_offset()));
        reps.push_back(level);
    }
    rep.certificates["representatives"] = reps;
    rep.status = "verified";
}

void run_lcs_verify(const Options& opt, Report& rep, bool kind_only) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    KForm omega = form_flag(opt, "omega", in.g, 2);
    KForm theta = form_flag(opt, "theta", in.g, 1);
    rep.input["omega"] = omega.str(in.g.display_offset());
    rep.input["theta"] = theta.str(in.g.display_offset());
    try {
        LcsStructure s = verify_lcs(in.g, omega, theta);
        rep.status = "verified";
        if (kind_only) {
            rep.results["kind"] = s.symplectic
                                      ? "NotApplicable"
                                      : (s.kind == LcsKind::FirstKind ? "FirstKind" : "SecondKind");
        } else {
            lcs_structure_into(s, in.g, rep);
        }
    } catch (const ThetaNotClosed& e) {
        rep.status = "refuted";
        rep.message = e.what();
    } catch (const NotLcs& e) {
        rep.status = "refuted";
        rep.message = e.what();
        rep.certificates["defect"] = e.defect;
    } catch (const Degenerate& e) {
        rep.status = "refuted";
        rep.message = e.what();
    }
}

void run_lcs_search(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    KForm theta = form_flag(opt, "theta", in.g, 1);
    rep.input["theta"] = theta.str(in.g.display_offset());
    int budget = static_cast<int>(flag_number(opt, "budget", 512));
    LcsSearchResult res = lcs_search(in.g, theta, rep.seed, budget);
    rep.results["solution_space_dim"] = static_cast<int>(res.solution_basis.size());
    rep.results["samples"] = res.samples;
    auto basis = nlohmann::json::array();
    for (const auto& f : res.solution_basis) basis.push_back(f.str(in.g.display_offset()));
    rep.certificates["solution_basis"] = basis;
    if (res.witness) {
        rep.status = "verified";
        rep.certificates["witness"] = res.witness->str(in.g.display_offset());
        rep.certificates["pfaffian"] = pfaffian(res.witness->gram()).str();
        rep.message = "nondegenerate solution found";
    } else if (res.solution_basis.empty()) {
        rep.status = "refuted";
        rep.message = "the LCS equation has no nonzero solutions for this theta";
    } else if (in.g.dim() % 2 != 0) {
        rep.status = "refuted";
        rep.message = "odd dimension admits no nondegenerate 2-form";
    } else {
        rep.status = "inconclusive";
        rep.message = "omega degenerate on every sampled point of the solution space";
    }
}

void run_contact_verify(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    KForm eta = form_flag(opt, "eta", in.g, 1);
    rep.input["eta"] = eta.str(in.g.display_offset());
    try {
        ContactStructure c = verify_contact(in.g, eta);
        rep.status = "verified";
        rep.certificates["reeb_vector"] = jvec(c.reeb_vector);
        int half = (in.g.dim() - 1) / 2;
        rep.certificates["top_form"] =
            wedge(eta, wedge_power(cediff(in.g, eta), half)).str(in.g.display_offset());
    } catch (const NotContact& e) {
        rep.status = "refuted";
        rep.message = e.what();
    }
}

void run_contact_search(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    int budget = static_cast<int>(flag_number(opt, "budget", 512));
    auto c = contact_search(in.g, rep.seed, budget);
    if (c) {
        rep.status = "verified";
        rep.certificates["eta"] = c->eta.str(in.g.display_offset());
        rep.certificates["reeb_vector"] = jvec(c->reeb_vector);
    } else {
        rep.status = "inconclusive";
        rep.message = "no contact form found within the sample budget";
    }
}

void run_derivations(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    DerivationSpace d = derivation_space(in.g);
    rep.results["dim"] = d.dim();
    auto basis = nlohmann::json::array();
    for (const auto& m : d.basis) basis.push_back(jmat(m));
    rep.certificates["basis"] = basis;
    rep.status = "verified";
}

void run_extend_contact(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    KForm eta = form_flag(opt, "eta", in.g, 1);
    QMat d = matrix_flag(opt, "derivation", in.g.dim());
    rep.input["eta"] = eta.str(in.g.display_offset());
    rep.input["derivation"] = jmat(d);
    LcsTriple t = lcs_from_contact(in.g, eta, d);
    rep.results["algebra"] = algebra_echo(t.algebra);
    rep.results["omega"] = t.structure.omega.str(t.algebra.display_offset());
    rep.results["theta"] = t.structure.theta.str(t.algebra.display_offset());
    rep.results["profile"] = profile_json(structural_profile(t.algebra));
    lcs_structure_into(t.structure, t.algebra, rep);
    rep.status = "verified";
}

void run_double_extend(const Options& opt, Report& rep) {
    Loaded in = load_algebra(opt);
    rep.input["algebra"] = algebra_echo(in.g);
    KForm beta = form_flag(opt, "beta", in.g, 2);
    QMat e = matrix_flag(opt, "derivation", in.g.dim());
    rep.input["beta"] = beta.str(in.g.display_offset());
    rep.input["derivation"] = jmat(e);
    LcsTriple t = double_extension(in.g, beta, e);
    rep.results["algebra"] = algebra_echo(t.algebra);
    rep.results["omega"] = t.structure.omega.str(t.algebra.display_offset());
    rep.results["theta"] = t.structure.theta.str(t.algebra.display_offset());
    rep.results["profile"] = profile_json(structural_profile(t.algebra));
    lcs_structure_into(t.structure, t.algebra, rep);
    rep.status = "verified";
}

void run_lattice_check(const Options& opt, Report& rep) {
    std::string family = opt.get("family");
    if (family != "g1" && family != "g2") throw Usage{"--family must be g1 or g2"};
    if (!opt.has("k")) throw Usage{"missing required flag --k"};
    int k = static_cast<int>(flag_number(opt, "k", 1));
    PiScalar t0;
    if (family == "g1") {
        std::string t = opt.get_or("t0", "pi");
        if (t == "pi/2")
            t0 = PiScalar::monomial(Rat(1, 2), 1);
        else if (t == "pi")
            t0 = PiScalar::pi();
        else if (t == "2pi" || t == "2*pi")
            t0 = PiScalar::monomial(Rat(2), 1);
        else
            throw UnsupportedT0();
    }
    rep.input["family"] = family;
    rep.input["k"] = k;
    LatticeReport lr =
        check_reference_lattices(family == "g1" ? LatticeFamily::G1 : LatticeFamily::G2, k, t0, rep.seed);
    if (family == "g1") rep.input["t0"] = lr.t0.str();
    rep.results["preserved"] = lr.preserved;
    rep.results["closure_sample_ok"] = lr.closure_ok;
    auto levels = nlohmann::json::array();
    for (const auto& lvl : lr.levels) {
        nlohmann::json j;
        j["description"] = lvl.description;
        j["preserved"] = lvl.check.preserved;
        j["conjugated"] = jpimat(lvl.check.conjugated);
        j["conjugated_inverse"] = jpimat(lvl.check.conjugated_inv);
        if (lvl.check.offending_entry)
            j["offending_entry"] = {lvl.check.offending_entry->first,
                                    lvl.check.offending_entry->second};
        levels.push_back(j);
    }
    rep.certificates["levels"] = levels;
    rep.status = lr.preserved ? "verified" : "refuted";
    rep.message = lr.preserved ? "lattice preserved at every level" : "integrality fails";
}

void run_catalog(const Options& opt, Report& rep) {
    if (opt.positional.empty()) throw Usage{"catalog needs 'list' or 'show <name>'"};
    const std::string& action = opt.positional[0];
    if (action == "list") {
        rep.results["names"] = catalog_names();
        rep.status = "verified";
        return;
    }
    if (action != "show" || opt.positional.size() != 2)
        throw Usage{"catalog needs 'list' or 'show <name>'"};
    CatalogEntry e = catalog_get(opt.positional[1], collect_params(opt));
    rep.input["algebra"] = algebra_echo(e.algebra);
    rep.results["reference"] = e.reference;
    rep.results["profile"] = profile_json(structural_profile(e.algebra));
    int off = e.algebra.display_offset();
    if (e.lcs) {
        LcsStructure s = verify_lcs(e.algebra, e.lcs->first, e.lcs->second);
        rep.results["lcs"] = {{"omega", e.lcs->first.str(off)},
                              {"theta", e.lcs->second.str(off)},
                              {"kind", s.symplectic ? "NotApplicable"
                                                    : (s.kind == LcsKind::FirstKind ? "FirstKind"
                                                                                    : "SecondKind")}};
    }
    if (e.contact) {
        ContactStructure c = verify_contact(e.algebra, *e.contact);
        rep.results["contact"] = {{"eta", e.contact->str(off)},
                                  {"reeb_vector", jvec(c.reeb_vector)}};
    }
    if (!e.noted_nonverifying.empty()) {
        auto noted = nlohmann::json::array();
        for (const auto& [w, th] : e.noted_nonverifying) {
            KForm defect = cediff(e.algebra, w) - wedge(th, w);
            noted.push_back({{"omega", w.str(off)},
                             {"theta", th.str(off)},
                             {"eq_lcs_defect", defect.str(off)},
                             {"remark", "known displayed variant; fails d(omega) = theta^omega "
                                        "under the fixed sign convention"}});
        }
        rep.results["noted_nonverifying"] = noted;
    }
    rep.status = "verified";
}

} // namespace

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["status"] = status;
    j["message"] = message;
    j["seed"] = seed;
    j["input"] = input;
    j["results"] = results;
    j["certificates"] = certificates;
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "status: " << status << "\n";
    if (!message.empty()) os << "message: " << message << "\n";
    os << "seed: " << seed << "\n";
    if (!input.empty()) os << "input: " << input.dump(2) << "\n";
    if (!results.empty()) os << "results: " << results.dump(2) << "\n";
    if (!certificates.empty()) os << "certificates: " << certificates.dump(2) << "\n";
    return os.str();
}

RunResult run_command(const std::vector<std::string>& args) {
    Report rep;
    rep.command = args;
    try {
        Options opt = scan(args);
        rep.seed = resolve_seed(opt);
        if (opt.subcommand == "validate")
            run_validate(opt, rep);
        else if (opt.subcommand == "profile")
            run_profile(opt, rep);
        else if (opt.subcommand == "cohomology")
            run_cohomology(opt, rep);
        else if (opt.subcommand == "lcs-verify")
            run_lcs_verify(opt, rep, false);
        else if (opt.subcommand == "kind")
            run_lcs_verify(opt, rep, true);
        else if (opt.subcommand == "lcs-search")
            run_lcs_search(opt, rep);
        else if (opt.subcommand == "contact-verify")
            run_contact_verify(opt, rep);
        else if (opt.subcommand == "contact-search")
            run_contact_search(opt, rep);
        else if (opt.subcommand == "derivations")
            run_derivations(opt, rep);
        else if (opt.subcommand == "extend-contact")
            run_extend_contact(opt, rep);
        else if (opt.subcommand == "double-extend")
            run_double_extend(opt, rep);
        else if (opt.subcommand == "lattice-check")
            run_lattice_check(opt, rep);
        else
            run_catalog(opt, rep);
        return {rep, code_for(rep.status)};
    } catch (const Usage& u) {
        rep.status = "error";
        rep.message = "usage: " + u.msg;
        return {rep, 64};
    } catch (const UnsupportedT0& e) {
        rep.status = "error";
        rep.message = e.what();
        return {rep, 64};
    } catch (const UnsupportedAngle& e) {
        rep.status = "error";
        rep.message = e.what();
        return {rep, 64};
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.message = e.what();
        return {rep, 65};
    }
}

} // namespace lcslab
