// qsl2 command line tool.
//
// Every subcommand prints a deterministic text rendering of its result, or a
// JSON document {"command":..., "inputs":{...}, "value":..., "routes":[...]}
// when --json is given.  Exit codes: 0 success, 1 route disagreement,
// 2 usage or input-format error, 3 admissibility error.

#include <CLI11.hpp>

#include <qsl2/bases.hpp>
#include <qsl2/eulerchar.hpp>
#include <qsl2/laurent.hpp>
#include <qsl2/networks.hpp>
#include <qsl2/resolutions.hpp>
#include <qsl2/tensor.hpp>
#include <qsl2/threej.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using qsl2::Int;
using qsl2::Json;
using qsl2::LaurentPoly;
using qsl2::LaurentSeries;
using qsl2::MultiIndex;
using qsl2::RationalQ;
using qsl2::TensorVector;

// Thrown when --route all detects two routes with different values.
struct route_disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(bool json, const std::string& command, const Json& inputs,
          const Json& value, const std::string& text,
          const Json& routes = Json::array()) {
    if (json) {
        Json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["value"] = value;
        doc["routes"] = routes;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

// Multi-line library renderings carry a trailing newline; emit adds its own.
std::string chomp(std::string text) {
    while (!text.empty() && text.back() == '\n')
        text.pop_back();
    return text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void setup_qnum(CLI::App& app) {
    auto* qnum = app.add_subcommand("qnum", "quantum integers, factorials and binomials");
    qnum->require_subcommand(1);

    struct Opts {
        long n = 0;
        long k = 0;
        bool renorm = false;
        bool json = false;
    };
    auto opts = std::make_shared<Opts>();

    auto* qint = qnum->add_subcommand("int", "quantum integer [n]");
    qint->add_option("--n", opts->n, "argument n")->required();
    qint->add_flag("--renorm", opts->renorm, "renormalized variant q^(n-1)[n]");
    qint->add_flag("--json", opts->json, "JSON output");
    qint->callback([opts] {
        LaurentPoly v = opts->renorm ? qsl2::qint_renorm(opts->n) : qsl2::qint(opts->n);
        emit(opts->json, "qnum",
             Json{{"kind", "int"}, {"n", opts->n}, {"renorm", opts->renorm}},
             v.to_json(), v.str());
    });

    auto* qfact = qnum->add_subcommand("fact", "quantum factorial [n]!");
    qfact->add_option("--n", opts->n, "argument n")->required();
    qfact->add_flag("--renorm", opts->renorm, "renormalized variant");
    qfact->add_flag("--json", opts->json, "JSON output");
    qfact->callback([opts] {
        LaurentPoly v = opts->renorm ? qsl2::qfact_renorm(opts->n) : qsl2::qfact(opts->n);
        emit(opts->json, "qnum",
             Json{{"kind", "fact"}, {"n", opts->n}, {"renorm", opts->renorm}},
             v.to_json(), v.str());
    });

    auto* qbinom = qnum->add_subcommand("binom", "balanced quantum binomial [n over k]");
    qbinom->add_option("--n", opts->n, "upper argument")->required();
    qbinom->add_option("--k", opts->k, "lower argument")->required();
    qbinom->add_flag("--renorm", opts->renorm, "renormalized variant q^(k(n-k))*[n over k]");
    qbinom->add_flag("--json", opts->json, "JSON output");
    qbinom->callback([opts] {
        LaurentPoly v = qsl2::qbinom(opts->n, opts->k);
        if (opts->renorm) v = v.shifted(opts->k * (opts->n - opts->k));
        emit(opts->json, "qnum",
             Json{{"kind", "binom"}, {"n", opts->n}, {"k", opts->k}, {"renorm", opts->renorm}},
             v.to_json(), v.str());
    });
}

struct SymbolOpts {
    int i = 0, j = 0, k = 0, r = 0, s = 0, t = 0;
    std::string route = "direct";
    bool list = false;
    bool json = false;
};

void add_symbol_options(CLI::App* cmd, const std::shared_ptr<SymbolOpts>& o) {
    cmd->add_option("--i", o->i, "color i")->required();
    cmd->add_option("--j", o->j, "color j")->required();
    cmd->add_option("--k", o->k, "color k")->required();
    cmd->add_option("--r", o->r, "index r in V_i")->required();
    cmd->add_option("--s", o->s, "index s in V_j")->required();
    cmd->add_option("--t", o->t, "index t in V_k")->required();
}

void setup_threej(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "threej", "3j-symbol coefficient of A_{i,j}^k by independent routes");
    auto o = std::make_shared<SymbolOpts>();
    add_symbol_options(cmd, o);
    cmd->add_option("--route", o->route, "route (default direct)")
        ->check(CLI::IsMember({"direct", "sum", "classical", "twisted",
                               "positivity", "alternating", "all"}));
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->callback([o] {
        const Json inputs{{"i", o->i}, {"j", o->j}, {"k", o->k},
                          {"r", o->r}, {"s", o->s}, {"t", o->t},
                          {"route", o->route}};
        const int i = o->i, j = o->j, k = o->k, r = o->r, s = o->s, t = o->t;
        if (o->route != "all") {
            Json value;
            std::string text;
            if (o->route == "direct") {
                RationalQ v = qsl2::threej_direct(i, j, k, r, s, t);
                value = v.to_json();
                text = v.str();
            } else if (o->route == "sum") {
                LaurentPoly v = qsl2::threej_quantum_sum(i, j, k, r, s, t);
                value = v.to_json();
                text = v.str();
            } else if (o->route == "classical") {
                Int v = qsl2::threej_classical(i, j, k, r, s, t);
                text = v.str();
                value = text;
            } else if (o->route == "twisted") {
                LaurentPoly v = qsl2::threej_twisted(i, j, k, r, s, t);
                value = v.to_json();
                text = v.str();
            } else if (o->route == "positivity") {
                LaurentPoly v = qsl2::threej_positivity(i, j, k, r, s, t);
                value = v.to_json();
                text = v.str();
            } else {
                LaurentPoly v = qsl2::threej_alternating(i, j, k, r, s, t);
                value = v.to_json();
                text = v.str();
            }
            emit(o->json, "threej", inputs, value, text, Json::array({o->route}));
            return;
        }
        const RationalQ direct = qsl2::threej_direct(i, j, k, r, s, t);
        const LaurentPoly sum = qsl2::threej_quantum_sum(i, j, k, r, s, t);
        const LaurentPoly alternating = qsl2::threej_alternating(i, j, k, r, s, t);
        const Int classical = qsl2::threej_classical(i, j, k, r, s, t);
        const LaurentPoly twisted = qsl2::threej_twisted(i, j, k, r, s, t);
        const LaurentPoly positivity = qsl2::threej_positivity(i, j, k, r, s, t);
        // direct = sum = alternating (the symbol), twisted = positivity (its
        // twisted-basis companion), classical = the symbol at q = 1.
        std::string failure;
        if (direct != RationalQ(sum))
            failure = "direct vs sum";
        else if (sum != alternating)
            failure = "sum vs alternating";
        else if (classical != sum.at_one())
            failure = "classical vs sum at q=1";
        else if (twisted != positivity)
            failure = "twisted vs positivity";
        std::ostringstream text;
        text << "direct: " << direct.str() << "\n"
             << "sum: " << sum.str() << "\n"
             << "alternating: " << alternating.str() << "\n"
             << "classical: " << classical.str() << "\n"
             << "twisted: " << twisted.str() << "\n"
             << "positivity: " << positivity.str() << "\n"
             << "agreement: " << (failure.empty() ? "ok" : "FAILED " + failure);
        const Json routes = Json::array(
            {"direct", "sum", "alternating", "classical", "twisted", "positivity"});
        emit(o->json, "threej", inputs, direct.to_json(), text.str(), routes);
        if (!failure.empty())
            throw route_disagreement(failure);
    });
}

void setup_arrangements(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "arrangements", "signed weighted triangle line arrangement classes");
    auto o = std::make_shared<SymbolOpts>();
    add_symbol_options(cmd, o);
    cmd->add_flag("--list", o->list, "print one line per class");
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->callback([o] {
        const Json inputs{{"i", o->i}, {"j", o->j}, {"k", o->k},
                          {"r", o->r}, {"s", o->s}, {"t", o->t}};
        const auto classes = qsl2::arrangements(o->i, o->j, o->k, o->r, o->s, o->t);
        Int raw = 0;
        Int total = 0;
        Json class_json = Json::array();
        std::ostringstream text;
        for (const auto& c : classes) {
            raw += c.multiplicity;
            total += c.sign * c.multiplicity;
            if (o->list)
                text << "a=" << c.a << " mult=" << c.multiplicity
                     << " sign=" << c.sign << " gamma=" << c.weight << "\n";
            class_json.push_back(Json{{"a", c.a},
                                      {"multiplicity", c.multiplicity.str()},
                                      {"sign", c.sign},
                                      {"gamma", c.weight}});
        }
        const Int classical =
            qsl2::threej_classical(o->i, o->j, o->k, o->r, o->s, o->t);
        text << "classes: " << classes.size() << "\n"
             << "raw: " << raw.str() << "\n"
             << "signed: " << total.str() << "\n"
             << "classical: " << classical.str();
        const Json value{{"classes", class_json},
                         {"raw", raw.str()},
                         {"signed", total.str()},
                         {"classical", classical.str()}};
        emit(o->json, "arrangements", inputs, value, text.str());
    });
}

void setup_network(CLI::App& app) {
    auto* net = app.add_subcommand("network", "planar network evaluation");
    net->require_subcommand(1);
    auto* cmd = net->add_subcommand("eval", "evaluate a network description file");

    struct Opts {
        std::string file;
        std::vector<int> apply;
        std::vector<int> pair;
        bool json = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("file", o->file, "network file")->required();
    auto* apply_opt =
        cmd->add_option("--apply", o->apply, "input basis index a1,a2,...")
            ->delimiter(',');
    auto* pair_opt =
        cmd->add_option("--pair", o->pair, "pair the output with this basis index")
            ->delimiter(',');
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->callback([o, apply_opt, pair_opt] {
        const qsl2::NetworkExpr expr = qsl2::parse_network(read_file(o->file));
        const qsl2::Intertwiner m = qsl2::eval_network(expr);
        Json inputs{{"file", o->file}};
        inputs["apply"] = apply_opt->count() ? Json(o->apply) : Json();
        inputs["pair"] = pair_opt->count() ? Json(o->pair) : Json();

        // With no --apply a closed-from-below network is applied to the empty
        // basis vector, so `network eval circle.net` prints the circle value.
        const bool do_apply = apply_opt->count() > 0 || expr.input_shape.empty();
        if (!do_apply) {
            std::ostringstream text;
            Json entries = Json::array();
            for (const auto& [in, column] : m.columns())
                for (const auto& [out, c] : column) {
                    text << Json(in).dump() << " -> " << Json(out).dump()
                         << ": " << c.str() << "\n";
                    entries.push_back(
                        Json{{"in", in}, {"out", out}, {"coeff", c.to_json()}});
                }
            if (entries.empty())
                text << "0";
            emit(o->json, "network", inputs, Json{{"entries", entries}},
                 chomp(text.str()));
            return;
        }
        const TensorVector result =
            m.apply(TensorVector::basis(expr.input_shape, MultiIndex(o->apply)));
        if (pair_opt->count() > 0) {
            const RationalQ v = qsl2::form_eval_bilinear(
                TensorVector::basis(expr.output_shape, MultiIndex(o->pair)), result);
            emit(o->json, "network", inputs, v.to_json(), v.str());
        } else if (expr.output_shape.empty()) {
            const RationalQ v = result.coeff({});
            emit(o->json, "network", inputs, v.to_json(), v.str());
        } else {
            emit(o->json, "network", inputs, result.to_json(), result.str());
        }
    });
}

void setup_theta(CLI::App& app) {
    auto* cmd = app.add_subcommand("theta", "theta network value");
    struct Opts {
        int i = 0, j = 0, k = 0;
        std::string route = "both";
        bool json = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--i", o->i, "color i")->required();
    cmd->add_option("--j", o->j, "color j")->required();
    cmd->add_option("--k", o->k, "color k")->required();
    cmd->add_option("--route", o->route, "formula|network|both (default both)")
        ->check(CLI::IsMember({"formula", "network", "both"}));
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->callback([o] {
        const Json inputs{{"i", o->i}, {"j", o->j}, {"k", o->k}, {"route", o->route}};
        if (o->route == "formula") {
            RationalQ v = qsl2::theta_formula(o->i, o->j, o->k);
            emit(o->json, "theta", inputs, v.to_json(), v.str(),
                 Json::array({"formula"}));
            return;
        }
        if (o->route == "network") {
            RationalQ v = qsl2::theta_network(o->i, o->j, o->k);
            emit(o->json, "theta", inputs, v.to_json(), v.str(),
                 Json::array({"network"}));
            return;
        }
        const RationalQ formula = qsl2::theta_formula(o->i, o->j, o->k);
        const RationalQ network = qsl2::theta_network(o->i, o->j, o->k);
        // The two normalizations differ by a monomial; it is reported, not
        // asserted.
        const RationalQ ratio = network / formula;
        std::ostringstream text;
        text << "formula: " << formula.str() << "\n"
             << "network: " << network.str() << "\n"
             << "ratio: " << ratio.str();
        const Json value{{"formula", formula.to_json()},
                         {"network", network.to_json()},
                         {"ratio", ratio.to_json()}};
        emit(o->json, "theta", inputs, value, text.str(),
             Json::array({"formula", "network"}));
    });
}

void setup_unknot(CLI::App& app) {
    auto* cmd = app.add_subcommand("unknot", "colored unknot value");
    struct Opts {
        int n = 0;
        bool ext = false;
        bool json = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--n", o->n, "color n")->required();
    cmd->add_flag("--ext", o->ext, "graded Euler characteristic [[n+1]]");
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->callback([o] {
        const Json inputs{{"n", o->n}, {"ext", o->ext}};
        if (o->ext) {
            LaurentPoly v = qsl2::unknot_ext_euler(o->n);
            emit(o->json, "unknot", inputs, v.to_json(), v.str());
        } else {
            RationalQ v = qsl2::unknot_value(o->n);
            emit(o->json, "unknot", inputs, v.to_json(), v.str());
        }
    });
}

void setup_euler(CLI::App& app) {
    auto* euler = app.add_subcommand(
        "euler", "graded Poincare series and fractional Euler characteristics");
    euler->require_subcommand(1);

    struct Opts {
        int n = 0;
        int k = 0;
        int t_order = 20;
        int q_order = 40;
        bool inverse = false;
        bool json = false;
        std::string series;
    };
    auto o = std::make_shared<Opts>();

    auto emit_presentation = [o](const std::string& kind, const Json& inputs,
                                 const qsl2::CIPresentation& p) {
        if (o->inverse) {
            LaurentSeries v =
                qsl2::euler_inverse(p.gen_degrees, p.rel_degrees, o->q_order);
            emit(o->json, "euler", inputs, v.to_json(), v.str());
        } else {
            qsl2::BigradedSeries v =
                qsl2::ci_poincare(p.gen_degrees, p.rel_degrees, o->t_order);
            emit(o->json, "euler", inputs, v.to_json(), chomp(v.str()));
        }
        (void)kind;
    };

    auto* flag = euler->add_subcommand("flag", "coinvariant algebra of sl_n");
    flag->add_option("--n", o->n, "rank parameter n")->required();
    flag->add_option("--t-order", o->t_order, "t truncation order (default 20)");
    flag->add_option("--q-order", o->q_order, "q truncation order (default 40)");
    flag->add_flag("--inverse", o->inverse, "print the t = -1 Euler characteristic");
    flag->add_flag("--json", o->json, "JSON output");
    flag->callback([o, emit_presentation] {
        const Json inputs{{"kind", "flag"}, {"n", o->n},
                          {"t_order", o->t_order}, {"q_order", o->q_order},
                          {"inverse", o->inverse}};
        emit_presentation("flag", inputs, qsl2::flag_presentation(o->n));
    });

    auto* gr = euler->add_subcommand("grassmannian", "cohomology of Gr(k, n)");
    gr->add_option("--k", o->k, "subspace dimension k")->required();
    gr->add_option("--n", o->n, "ambient dimension n")->required();
    gr->add_option("--t-order", o->t_order, "t truncation order (default 20)");
    gr->add_option("--q-order", o->q_order, "q truncation order (default 40)");
    gr->add_flag("--inverse", o->inverse, "print the t = -1 Euler characteristic");
    gr->add_flag("--json", o->json, "JSON output");
    gr->callback([o, emit_presentation] {
        const Json inputs{{"kind", "grassmannian"}, {"k", o->k}, {"n", o->n},
                          {"t_order", o->t_order}, {"q_order", o->q_order},
                          {"inverse", o->inverse}};
        emit_presentation("grassmannian", inputs,
                          qsl2::grassmannian_presentation(o->k, o->n));
    });

    auto* dev = euler->add_subcommand("deviations", "deviation profile of a series");
    dev->add_option("--series", o->series, "file with a polynomial in t")->required();
    dev->add_option("--t-order", o->t_order, "number of deviations (default 20)");
    dev->add_flag("--json", o->json, "JSON output");
    dev->callback([o] {
        std::string text = read_file(o->series);
        for (char& ch : text)
            if (ch == 't') ch = 'q';
        const LaurentPoly p = LaurentPoly::parse(text);
        const qsl2::DeviationProfile prof =
            qsl2::deviations(LaurentSeries(p, o->t_order + 1), o->t_order);
        const Json inputs{{"kind", "deviations"}, {"series", o->series},
                          {"t_order", o->t_order}};
        std::ostringstream out;
        Json values = Json::array();
        for (std::size_t m = 0; m < prof.c.size(); ++m) {
            out << "c_" << (m + 1) << ": " << prof.c[m].str() << "\n";
            values.push_back(prof.c[m].str());
        }
        emit(o->json, "euler", inputs, values, chomp(out.str()));
    });
}

void setup_resolution(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "resolution", "projective resolution of a standard module (q = 1)");
    struct Opts {
        int r = 0, s = 0, i = 0, j = 0;
        bool json = false;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--r", o->r, "index r")->required();
    cmd->add_option("--s", o->s, "index s")->required();
    cmd->add_option("--i", o->i, "highest weight i")->required();
    cmd->add_option("--j", o->j, "highest weight j")->required();
    cmd->add_flag("--json", o->json, "JSON output");
    cmd->callback([o] {
        const Json inputs{{"r", o->r}, {"s", o->s}, {"i", o->i}, {"j", o->j}};
        const qsl2::ResolutionTable table =
            qsl2::resolution_table(o->r, o->s, o->i, o->j);
        const qsl2::BasisExpansion delta =
            qsl2::delta_in_projectives(o->r, o->s, o->i, o->j);
        const Json value{{"table", table.to_json()}, {"delta", delta.to_json()}};
        emit(o->json, "resolution", inputs, value,
             table.str() + "delta: " + delta.str());
    });
}

void setup_basis(CLI::App& app) {
    auto* basis = app.add_subcommand("basis", "twisted canonical basis and class expansions");
    basis->require_subcommand(1);

    struct Opts {
        int r = 0, s = 0, i = 0, j = 0;
        std::vector<int> kd;
        bool json = false;
    };
    auto o = std::make_shared<Opts>();

    auto add_weight_options = [o](CLI::App* cmd) {
        cmd->add_option("--r", o->r, "index r")->required();
        cmd->add_option("--s", o->s, "index s")->required();
        cmd->add_option("--i", o->i, "highest weight i")->required();
        cmd->add_option("--j", o->j, "highest weight j")->required();
        cmd->add_flag("--json", o->json, "JSON output");
    };

    auto* twisted = basis->add_subcommand(
        "twisted", "v_r spadesuit v_s in the standard basis");
    add_weight_options(twisted);
    twisted->callback([o] {
        TensorVector v = qsl2::twisted_canonical(o->r, o->s, o->i, o->j);
        emit(o->json, "basis",
             Json{{"kind", "twisted"}, {"r", o->r}, {"s", o->s}, {"i", o->i}, {"j", o->j}},
             v.to_json(), v.str());
    });

    auto* standard = basis->add_subcommand(
        "standard", "v_r (x) v_s in the twisted canonical basis");
    add_weight_options(standard);
    standard->callback([o] {
        qsl2::BasisExpansion e = qsl2::standard_in_twisted(o->r, o->s, o->i, o->j);
        emit(o->json, "basis",
             Json{{"kind", "standard"}, {"r", o->r}, {"s", o->s}, {"i", o->i}, {"j", o->j}},
             e.to_json(), e.str());
    });

    auto* projective = basis->add_subcommand(
        "projective", "[P-hat(r,i|s,j)] in standard classes");
    add_weight_options(projective);
    projective->callback([o] {
        qsl2::BasisExpansion e = qsl2::projective_class_in_standard(o->r, o->s, o->i, o->j);
        emit(o->json, "basis",
             Json{{"kind", "projective"}, {"r", o->r}, {"s", o->s}, {"i", o->i}, {"j", o->j}},
             e.to_json(), e.str());
    });

    auto* proper = basis->add_subcommand(
        "proper", "[Delta-hat] over [proper-standard-hat]: product of quantum binomials");
    proper->add_option("--kd", o->kd, "flat list k1,d1,k2,d2,...")
        ->required()
        ->delimiter(',');
    proper->add_flag("--json", o->json, "JSON output");
    proper->callback([o] {
        if (o->kd.size() % 2 != 0)
            throw std::runtime_error("--kd needs k,d pairs (even number of entries)");
        std::vector<std::pair<int, int>> kd;
        for (std::size_t p = 0; p + 1 < o->kd.size(); p += 2)
            kd.emplace_back(o->kd[p], o->kd[p + 1]);
        LaurentPoly v = qsl2::standard_class_in_proper(kd);
        emit(o->json, "basis", Json{{"kind", "proper"}, {"kd", o->kd}},
             v.to_json(), v.str());
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the graphical calculus of quantum sl2"};
    app.require_subcommand(1);

    setup_qnum(app);
    setup_threej(app);
    setup_arrangements(app);
    setup_network(app);
    setup_theta(app);
    setup_unknot(app);
    setup_euler(app);
    setup_resolution(app);
    setup_basis(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qsl2::admissibility_error& e) {
        std::cerr << "admissibility error: " << e.what() << "\n";
        return 3;
    } catch (const route_disagreement& e) {
        std::cerr << "route disagreement: " << e.what() << "\n";
        return 1;
    } catch (const qsl2::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "admissibility error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "admissibility error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "route disagreement: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
