#include "CLI11.hpp"
#include "qglue/decompose.hpp"
#include "qglue/endomorphism.hpp"
#include "qglue/gluing.hpp"
#include "qglue/io.hpp"
#include "qglue/reproduce.hpp"
#include "qglue/treemod.hpp"

#include <iostream>
#include <sstream>

using namespace qglue;

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> files;
    Oracle oracle;
    long bound = 0;
};

Workspace load(const Options& o) {
    Workspace ws;
    for (const auto& f : o.files) ws.load_file(f);
    return ws;
}

void print_oracle(const Options& o) {
    std::cout << "oracle: samples=" << o.oracle.samples << " prime=" << o.oracle.prime << " seed=" << o.oracle.seed
              << '\n';
}

std::vector<Representation> sequence(const Workspace& ws, const std::vector<std::string>& names) {
    std::vector<Representation> m;
    for (const auto& n : names.empty() ? ws.rep_order() : names) m.push_back(ws.rep(n));
    return m;
}

// Reps over Q(M) are kept out of the default sequence.
std::vector<Representation> base_sequence(const Workspace& ws, const std::vector<std::string>& names,
                                          const std::string& skip) {
    if (!names.empty()) return sequence(ws, names);
    std::vector<Representation> m;
    for (const auto& n : ws.rep_order())
        if (n != skip) m.push_back(ws.rep(n));
    return m;
}

GluingData gluing(const Workspace& ws, const std::vector<Representation>& m) {
    return build_gluing(m, to_ext_basis(ws.bases(), m.front().quiver()));
}

std::string verdict_line(const Representation& x) {
    IndecResult r = indecomposable(x);
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << '\n';
    os << "end dim: " << r.end_dim << '\n';
    if (r.verdict != Verdict::unknown) os << "radical dim: " << r.radical_dim << '\n';
    if (r.witness) {
        bool ok = is_nontrivial_idempotent(x, *r.witness) && split_by_idempotent(x, *r.witness).verified;
        if (!ok) throw VerificationFailure("witness idempotent failed verification");
        os << "witness: verified\n";
    }
    if (!r.note.empty()) os << "note: " << r.note << '\n';
    return os.str();
}

void print_report(const ConditionReport& r) {
    std::cout << r.to_string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qglue: quiver representations, gluing functors and exceptional sequences"};
    Options opt;
    app.add_option("--samples", opt.oracle.samples, "Monte-Carlo samples")->check(CLI::PositiveNumber);
    app.add_option("--prime", opt.oracle.prime, "prime for sampling");
    app.add_option("--seed", opt.oracle.seed, "sampling seed");
    app.add_option("--bound", opt.bound, "total-dimension bound for the perpendicular search");
    app.require_subcommand(1);

    auto files = [&](CLI::App* c) {
        c->add_option("-f,--file,-q,--quiver", opt.files, "input files (quivers, reps, bases, morphisms, fragments)")
            ->required()
            ->allow_extra_args(false);
    };

    std::string s1, s2, side = "right", xname, mname, id;
    std::vector<std::string> names, vectors;
    std::vector<long> scalars;
    bool dot = false, dual = false;

    auto* euler = app.add_subcommand("euler", "Euler form of two dimension vectors");
    files(euler);
    euler->add_option("a", s1)->required();
    euler->add_option("b", s2)->required();
    euler->callback([&] {
        Workspace ws = load(opt);
        const Quiver& q = ws.single_quiver();
        std::cout << euler_form(q, parse_dim_vector(s1), parse_dim_vector(s2)) << '\n';
    });

    auto* classify = app.add_subcommand("classify", "classify a dimension vector as a root");
    files(classify);
    classify->add_option("a", s1)->required();
    classify->callback([&] {
        Workspace ws = load(opt);
        RootClass r = classify_root(ws.single_quiver(), parse_dim_vector(s1));
        std::cout << "tag: " << to_string(r.tag) << "\nword:";
        for (std::size_t v : r.word) std::cout << ' ' << ws.single_quiver().vertex(v);
        std::cout << "\nterminal: " << to_string(r.terminal) << '\n';
    });

    auto* homext = app.add_subcommand("homext", "dimensions of Hom and Ext between two representations");
    files(homext);
    homext->add_option("X", s1)->required();
    homext->add_option("Y", s2)->required();
    homext->callback([&] {
        Workspace ws = load(opt);
        const Representation &x = ws.rep(s1), &y = ws.rep(s2);
        std::size_t h = hom_dim(x, y), e = ext_dim(x, y);
        long eu = euler_form(x.quiver(), x.dims(), y.dims());
        std::cout << "hom: " << h << "\next: " << e << "\neuler: " << eu << '\n';
        if (static_cast<long>(h) - static_cast<long>(e) != eu) throw VerificationFailure("Euler identity violated");
    });

    auto* extbasis = app.add_subcommand("extbasis", "tree-shaped basis of Ext(X, Y)");
    files(extbasis);
    extbasis->add_option("X", s1)->required();
    extbasis->add_option("Y", s2)->required();
    extbasis->callback([&] {
        Workspace ws = load(opt);
        const Representation &x = ws.rep(s1), &y = ws.rep(s2);
        for (const auto& e : tree_shaped_ext_basis(x, y)) {
            std::cout << "extbasis 1 2 " << e.label + 1 << ' ' << x.quiver().arrow(e.arrow).name << ' ' << e.row + 1
                      << ' ' << e.col + 1 << '\n';
        }
    });

    auto* qm = app.add_subcommand("qm", "the quiver Q(M) of a sequence with its Ext bases");
    files(qm);
    qm->add_option("reps", names, "sequence (default: all representations in file order)");
    qm->callback([&] {
        Workspace ws = load(opt);
        std::cout << print_gluing(gluing(ws, sequence(ws, names)));
    });

    auto* glue = app.add_subcommand("glue", "apply F_M to a representation of Q(M)");
    files(glue);
    glue->add_option("--seq", names, "sequence M")->delimiter(',');
    glue->add_option("-x,--rep", xname, "representation of Q(M)")->required();
    glue->callback([&] {
        Workspace ws = load(opt);
        GluingData g = gluing(ws, base_sequence(ws, names, xname));
        Representation fx = apply_F(g, ws.rep(xname));
        std::cout << "dims: " << to_string(fx.dims()) << '\n' << print_rep(fx, "F" + xname);
    });

    auto* gluemor = app.add_subcommand("glue-mor", "apply F_M to a morphism of Q(M)-representations");
    files(gluemor);
    gluemor->add_option("--seq", names, "sequence M")->delimiter(',');
    gluemor->add_option("-m,--morphism", mname, "morphism over Q(M)")->required();
    gluemor->callback([&] {
        Workspace ws = load(opt);
        const NamedMorphism& f = ws.morphism(mname);
        std::vector<Representation> m;
        if (names.empty()) {
            for (const auto& n : ws.rep_order())
                if (n != f.source && n != f.target) m.push_back(ws.rep(n));
        } else {
            m = sequence(ws, names);
        }
        GluingData g = gluing(ws, m);
        const Representation &x = ws.rep(f.source), &y = ws.rep(f.target);
        Morphism ff = apply_F_mor(g, x, y, f.morphism);
        std::cout << print_morphism(ff, apply_F(g, x), apply_F(g, y), "F" + mname, "F" + f.source, "F" + f.target);
    });

    auto* loopglue = app.add_subcommand("loopglue", "the self-extension functor on L(n)");
    files(loopglue);
    loopglue->add_option("-r,--base", mname, "Schurian representation M")->required();
    auto* sc = loopglue->add_option("--scalars", scalars, "loop scalars for a one-dimensional X")->delimiter(',');
    loopglue->add_option("-x,--rep", xname, "representation of L(n)")->excludes(sc);
    loopglue->callback([&] {
        Workspace ws = load(opt);
        const Representation& m = ws.rep(mname);
        LoopGluingData l = build_loop_gluing(m, to_ext_basis(ws.bases(), m.quiver()));
        Representation x = xname.empty() ? loop_scalars(l, scalars) : ws.rep(xname);
        Representation fx = apply_loop_F(l, x);
        std::cout << "loops: " << l.basis.size() << '\n' << print_rep(fx, "F" + mname);
        std::cout << verdict_line(fx);
    });

    auto* indec = app.add_subcommand("indec", "indecomposability verdict");
    files(indec);
    indec->add_option("X", s1)->required();
    indec->callback([&] {
        Workspace ws = load(opt);
        std::cout << verdict_line(ws.rep(s1));
    });

    auto* schur = app.add_subcommand("schur", "Schurian test for a representation or a generic one of a vector");
    files(schur);
    schur->add_option("target", s1, "representation name or dimension vector")->required();
    schur->callback([&] {
        Workspace ws = load(opt);
        if (!s1.empty() && s1.front() == '(') {
            print_oracle(opt);
            std::cout << "schur: " << (generically_schurian(ws.single_quiver(), parse_dim_vector(s1), opt.oracle) ? "yes" : "no")
                      << '\n';
        } else {
            std::cout << "schur: " << (is_schurian(ws.rep(s1)) ? "yes" : "no") << '\n';
        }
    });

    auto* candecomp = app.add_subcommand("candecomp", "canonical decomposition of a dimension vector");
    files(candecomp);
    candecomp->add_option("a", s1)->required();
    candecomp->callback([&] {
        Workspace ws = load(opt);
        print_oracle(opt);
        CanonicalDecomposition c = canonical_decomposition(ws.single_quiver(), parse_dim_vector(s1), opt.oracle);
        for (const auto& [r, m] : c.summands) std::cout << "summand " << to_string(r) << " x" << m << '\n';
    });

    auto* excdecomp = app.add_subcommand("excdecomp", "reduced exceptional sequence decomposition of a root");
    files(excdecomp);
    excdecomp->add_option("a", s1)->required();
    excdecomp->callback([&] {
        Workspace ws = load(opt);
        print_oracle(opt);
        DecompositionReport r =
            exceptional_sequence_decomposition(ws.single_quiver(), parse_dim_vector(s1), opt.oracle, opt.bound);
        std::cout << r.to_string();
        if (!r.verified) throw VerificationFailure("sequence verification failed");
    });

    auto* perps = app.add_subcommand("perpsimples", "simple objects of a perpendicular category");
    files(perps);
    perps->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    perps->add_option("roots", vectors, "exceptional roots");
    perps->callback([&] {
        Workspace ws = load(opt);
        print_oracle(opt);
        std::vector<DimVector> e;
        for (const auto& v : vectors) e.push_back(parse_dim_vector(v));
        auto s = perp_simples(ws.single_quiver(), e, side == "left" ? PerpSide::left : PerpSide::right, opt.oracle,
                              opt.bound);
        for (const auto& v : s) std::cout << "simple " << to_string(v) << '\n';
    });

    auto* coeff = app.add_subcommand("coeffquiver", "coefficient quiver in the standard basis");
    files(coeff);
    coeff->add_option("X", s1)->required();
    coeff->add_flag("--dot", dot, "emit DOT text");
    coeff->callback([&] {
        Workspace ws = load(opt);
        const Representation& x = ws.rep(s1);
        CoefficientQuiver c = coefficient_quiver(x);
        if (dot) {
            std::cout << to_dot(c, x);
            return;
        }
        std::cout << "vertices: " << c.vertices.size() << "\narrows: " << c.arrows.size()
                  << "\ntree: " << (is_tree(c) ? "yes" : "no") << '\n';
    });

    auto* pushdown = app.add_subcommand("pushdown", "push a cover fragment down to the base quiver");
    files(pushdown);
    pushdown->add_option("fragment", s1)->required();
    pushdown->callback([&] {
        Workspace ws = load(opt);
        std::cout << print_rep(push_down(ws.fragment(s1)), s1 + "_down");
    });

    auto* checkseq = app.add_subcommand("check-seq", "elementary-sequence and gluing conditions");
    files(checkseq);
    checkseq->add_option("reps", names, "sequence (default: all representations in file order)");
    checkseq->add_flag("--dual", dual, "evaluate the variant on the opposite quiver");
    checkseq->callback([&] {
        Workspace ws = load(opt);
        auto m = sequence(ws, names);
        std::cout << "[elementary]\n";
        print_report(check_elementary(m));
        std::cout << "[gluing conditions]\n";
        print_report(dual ? check_gluing_conditions_dual(m) : check_gluing_conditions(m));
    });

    auto* theta = app.add_subcommand("check-theta", "rank check of the Theta isomorphism");
    files(theta);
    theta->add_option("--seq", names, "sequence M")->delimiter(',');
    theta->add_option("-x,--rep", xname, "representation of Q(M) with dim X_m1 = 1")->required();
    theta->callback([&] {
        Workspace ws = load(opt);
        GluingData g = gluing(ws, base_sequence(ws, names, xname));
        ThetaCheck t = check_theta_iso(g, ws.rep(xname));
        std::cout << "source dim: " << t.source_dim << "\nimage rank: " << t.image_rank << "\next dim: " << t.ext_dim
                  << "\niso: " << (t.iso ? "yes" : "no") << '\n';
    });

    auto* repro = app.add_subcommand("reproduce", "rerun a worked example");
    repro->add_option("id", id)->required()->check(CLI::IsMember(reproduce_ids()));

    int code = 0;
    repro->callback([&] { code = reproduce(id, opt.oracle, std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 2;
    } catch (const OracleError& e) {
        std::cerr << "oracle: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return code;
}
