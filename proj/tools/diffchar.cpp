// diffchar <command> <file> [--json] [--check] [--no-precheck] [--prune]
//
// Exit codes: 0 success, 1 mathematical failure, 2 unreadable or
// malformed input.

#include "diffchar/canonical.hpp"
#include "diffchar/decompose.hpp"
#include "diffchar/errors.hpp"
#include "diffchar/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace diffchar;
using nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::string file;
    bool json = false;
    bool check = false;
    bool no_precheck = false;
    bool prune = false;
};

// Failure of an invariant requested by --check.
struct CheckFailed : MathError {
    using MathError::MathError;
};

class Output {
public:
    Output(const RankedRing& ctx, bool as_json) : ctx_(ctx), json_(as_json) {}

    void line(const std::string& key, const std::string& text) {
        if (json_)
            doc_[key.empty() ? "result" : key] = text;
        else
            text_ << (key.empty() ? "" : key + ": ") << text << "\n";
    }
    void flag(const std::string& key, bool v) {
        if (json_)
            doc_[key.empty() ? "result" : key] = v;
        else
            text_ << (key.empty() ? "" : key + ": ") << (v ? "true" : "false") << "\n";
    }
    void elements(const std::string& key, const std::vector<Poly>& polys, bool collected = true) {
        if (json_) {
            json a = json::array();
            for (const auto& f : polys)
                a.push_back(to_json(ctx_, f));
            doc_[key] = a;
            return;
        }
        for (const auto& f : polys)
            text_ << (collected ? format_element(ctx_, f) : format_poly(ctx_, f)) << "\n";
    }
    void poly(const std::string& key, const Poly& f) {
        if (json_)
            doc_[key] = to_json(ctx_, f);
        else
            text_ << key << ": " << format_poly(ctx_, f) << "\n";
    }
    json& doc() { return doc_; }
    std::ostringstream& text() { return text_; }

    void flush(const std::string& command) {
        if (json_) {
            doc_["command"] = command;
            std::cout << doc_.dump(2) << "\n";
        } else {
            std::cout << text_.str();
        }
    }

private:
    const RankedRing& ctx_;
    bool json_;
    json doc_ = json::object();
    std::ostringstream text_;
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw CheckFailed("check failed: " + what);
}

TriangularSet as_set(const ProblemFile& pf, const std::vector<Poly>& polys) {
    try {
        return TriangularSet(pf.ctx, polys);
    } catch (const std::invalid_argument& e) {
        throw NotCharacterizing(e.what());
    }
}

void run_canonical(const ProblemFile& pf, const Options& o, Output& out) {
    TriangularSet A = as_set(pf, pf.system);
    auto C = canonical_via_gb(A, {!o.no_precheck});
    out.elements("elements", C.elements.elements());
    if (!o.check)
        return;
    auto D = canonical_via_invert(A, {false});
    bool agree = D.elements == C.elements;
    auto rep = is_canonical(C.elements);
    bool same = equal_ideals(A, C.elements);
    bool idem = canonical_via_gb(C.elements).elements == C.elements;
    if (!o.json)
        out.text() << "# checks\n";
    out.flag("invert route agrees", agree);
    out.flag("canonical form", rep.ok());
    out.flag("same ideal", same);
    out.flag("idempotent", idem);
    bool bound_ok = true;
    if (pf.bound && pf.ctx.ring().ordinary()) {
        bound_ok = order_bound_check(C.elements, *pf.bound);
        out.flag("order bound", bound_ok);
    }
    require(rep.ok(), rep.detail);
    require(agree && same && idem && bound_ok, "canonical set fails an invariant");
}

void run_from_gens(const ProblemFile& pf, const Options& o, Output& out) {
    auto r = canonical_from_generators(pf.ctx, pf.system, {o.prune});
    out.elements("elements", r.canonical.elements.elements());
    if (!o.check)
        return;
    if (!o.json)
        out.text() << "# checks\n";
    out.line("selected components", std::to_string(r.selected.size()) + " of " +
                                        std::to_string(r.decomposition.components.size()));
    bool via_gb = canonical_via_gb(r.canonical.elements).elements == r.canonical.elements;
    out.flag("canonical form", is_canonical(r.canonical.elements).ok());
    out.flag("fixed by canonicalization", via_gb);
    require(via_gb && is_canonical(r.canonical.elements).ok(), "output is not a canonical characterizing set");
}

void run_decompose(const ProblemFile& pf, const Options& o, Output& out) {
    auto D = rosenfeld_groebner(pf.ctx, pf.system, {o.prune});
    if (o.json) {
        json comps = json::array();
        for (const auto& c : D.components) {
            json e = json::array();
            for (const auto& f : c.charset.elements())
                e.push_back(to_json(pf.ctx, f));
            comps.push_back({{"charset", e}, {"path", c.path}});
        }
        out.doc()["components"] = comps;
        out.doc()["pruned"] = D.pruned;
    } else {
        if (D.components.empty())
            out.text() << "no components: 1 lies in the ideal\n";
        for (std::size_t i = 0; i < D.components.size(); ++i) {
            const auto& c = D.components[i];
            out.text() << "component " << i + 1 << "\n";
            for (const auto& f : c.charset.elements())
                out.text() << "  " << format_element(pf.ctx, f) << "\n";
            std::string path;
            for (const auto& s : c.path)
                path += (path.empty() ? "" : ", ") + s;
            if (!path.empty())
                out.text() << "  # " << path << "\n";
        }
    }
    if (!o.check)
        return;
    bool sound = true;
    for (const auto& c : D.components) {
        check_characterizing(c.charset);
        for (const auto& f : pf.system)
            sound = sound && member(f, c.charset);
    }
    if (!o.json)
        out.text() << "# checks\n";
    out.flag("generators reduce to zero in every component", sound);
    require(sound, "a generator does not reduce to zero");
}

void run_member(const ProblemFile& pf, const Options& o, Output& out) {
    if (!pf.probe)
        throw ParseError(1, 1, "member needs a probe block");
    TriangularSet A = as_set(pf, pf.system);
    if (!o.no_precheck)
        check_characterizing(A);
    out.flag("", member(*pf.probe, A));
}

void run_equal(const ProblemFile& pf, const Options& o, Output& out) {
    TriangularSet A = as_set(pf, pf.system), B = as_set(pf, pf.system2);
    if (!o.no_precheck) {
        check_characterizing(A);
        check_characterizing(B);
    }
    bool eq = equal_ideals(A, B);
    auto k = kolchin_equality(A, B);
    if (eq != k.equal())
        throw NotCharacterizing("equality tests disagree: an input set does not characterize its ideal");
    out.flag("", eq);
    if (!o.check)
        return;
    if (!o.json)
        out.text() << "# checks\n";
    out.flag("A in J", k.a_in_j);
    out.flag("B in I", k.b_in_i);
    out.flag("H_A not in J", k.ha_not_in_j);
    out.flag("H_B not in I", k.hb_not_in_i);
}

void run_invert(const ProblemFile& pf, const Options& o, Output& out) {
    if (!pf.probe)
        throw ParseError(1, 1, "invert needs a probe block");
    TriangularSet A = as_set(pf, pf.system);
    if (!o.no_precheck)
        check_characterizing(A);
    auto r = invert(*pf.probe, A);
    out.flag("invertible", r.invertible);
    out.poly("g", r.g);
    out.poly("h", r.h);
    out.poly("P", r.P);
    if (!o.check)
        return;
    Poly lhs = *pf.probe * r.g - r.h;
    bool ok = r.invertible ? full_remainder(lhs, A, false).remainder.is_zero()
                           : full_remainder(*pf.probe * r.g, A, false).remainder.is_zero();
    if (!o.json)
        out.text() << "# checks\n";
    out.flag("identity holds", ok);
    require(ok, "f*g - h does not reduce to zero");
}

void run_gb(const ProblemFile& pf, const Options& o, Output& out) {
    std::set<VarId> vars;
    for (const auto& f : pf.system)
        for (VarId v : f.variables())
            vars.insert(v);
    MonomialOrder ord(pf.ctx.sorted_desc(std::vector<VarId>(vars.begin(), vars.end())));
    auto gb = groebner_basis(pf.system, ord);
    out.elements("basis", gb, false);
    if (!o.check)
        return;
    if (!o.json)
        out.text() << "# checks\n";
    bool ok = audit(gb, ord);
    out.flag("audit", ok);
    require(ok, "basis fails the S-polynomial audit");
}

void run_coherent(const ProblemFile& pf, const Options&, Output& out) {
    TriangularSet A = as_set(pf, pf.system);
    auto r = is_coherent(A);
    out.flag("", r.coherent);
    if (!r.coherent) {
        out.line("pair", format_element(pf.ctx, A[r.witness->first]) + " ; " + format_element(pf.ctx, A[r.witness->second]));
        out.poly("remainder", r.remainder);
    }
}

int run(const Options& o) {
    std::ifstream in(o.file);
    if (!in) {
        std::cerr << "error: cannot read " << o.file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        ProblemFile pf = parse_problem(buf.str());
        Output out(pf.ctx, o.json);
        try {
            if (o.command == "canonical")
                run_canonical(pf, o, out);
            else if (o.command == "canonical-from-gens")
                run_from_gens(pf, o, out);
            else if (o.command == "decompose")
                run_decompose(pf, o, out);
            else if (o.command == "member")
                run_member(pf, o, out);
            else if (o.command == "equal")
                run_equal(pf, o, out);
            else if (o.command == "invert")
                run_invert(pf, o, out);
            else if (o.command == "gb")
                run_gb(pf, o, out);
            else
                run_coherent(pf, o, out);
        } catch (const CheckFailed& e) {
            // The report is still printed.
            out.flush(o.command);
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        out.flush(o.command);
        return 0;
    } catch (const ParseError& e) {
        std::cerr << o.file << ":" << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic sets of characterizable differential ideals"};
    Options o;
    app.add_option("command", o.command, "Command to run")
        ->required()
        ->check(CLI::IsMember({"canonical", "canonical-from-gens", "decompose", "member", "equal", "invert", "gb",
                               "coherent"}));
    app.add_option("file", o.file, "Problem file")->required();
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_flag("--check", o.check, "Run the invariant checks and report them");
    app.add_flag("--no-precheck", o.no_precheck, "Skip the characterizing-set precheck");
    app.add_flag("--prune", o.prune, "Drop certified redundant components");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return run(o);
}
