#include "palf/cli.hpp"

#include "palf/error.hpp"
#include "palf/factor.hpp"
#include "palf/kirby.hpp"
#include "palf/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace palf {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

struct Options {
    bool as_json = false;
    std::string file;
    int page = 4;
    int64_t max_height = 3;
    size_t max_conjugator = 2;
    size_t length = 3;
    size_t budget = BfsBudget{}.max_states;
    size_t max_states = 50;
    std::string total_of;
    std::string first_input;
    std::string second_input;
};

struct Report {
    int exit_code = kExitOk;
    json doc;
    std::string text;
};

json to_json(const MappingClass& g) {
    return {{"delta", g.boundary_exp()}, {"word", word_to_string(g.word())}, {"normal_form", g.to_string()}};
}

json to_json(const MoveCertificate& cert) {
    json steps = json::array();
    for (const auto& step : cert.steps) {
        if (auto* h = std::get_if<HurwitzMove>(&step))
            steps.push_back({{"hurwitz", h->index}, {"direction", h->direction == Direction::Forward ? "fwd" : "inv"}});
        else
            steps.push_back({{"conjugate", std::get<Conjugate>(step).psi.to_string()}});
    }
    return steps;
}

json to_json(const AbelianGroup& g) {
    return {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inputs come from positionals or, with --file, one per non-empty line.
std::vector<std::string> gather_inputs(const Options& opt) {
    if (opt.file.empty()) {
        std::vector<std::string> in;
        for (const auto* s : {&opt.first_input, &opt.second_input})
            if (!s->empty()) in.push_back(*s);
        return in;
    }
    std::vector<std::string> lines;
    std::istringstream in(read_file(opt.file));
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    return lines;
}

const std::string& input_at(const std::vector<std::string>& in, size_t i, const char* what) {
    if (i >= in.size()) throw Error(ErrorKind::InvalidArgument, std::string("missing input: ") + what);
    return in[i];
}

Report cmd_check_hs(const Options& opt, const std::vector<std::string>& in) {
    const Surface page(opt.page);
    const TwistTuple t = parse_tuple(input_at(in, 0, "tuple"), page);
    const auto e = is_homology_sphere(t, opt.page);
    const auto chain = chain_from_tuple(t, opt.page);
    Report r;
    r.exit_code = e.is_homology_sphere ? kExitOk : kExitNegative;
    r.doc = {{"page", opt.page},
             {"tuple", t.to_string()},
             {"n", chain.n},
             {"m", chain.m},
             {"handle_counts_agree", e.handle_counts_agree},
             {"det_a", e.det_a ? json(*e.det_a) : json(nullptr)},
             {"h1_total", to_json(e.h1_total)},
             {"h1_boundary", to_json(e.h1_boundary)},
             {"homology_sphere", e.is_homology_sphere},
             {"consistent", e.consistent}};
    std::ostringstream os;
    os << "homology sphere: " << (e.is_homology_sphere ? "true" : "false") << "\n"
       << "n=" << chain.n << " m=" << chain.m;
    if (e.det_a) os << " det A=" << *e.det_a;
    os << "\nH1(X)=" << e.h1_total.to_string() << "  H1(boundary)=" << e.h1_boundary.to_string() << "\n";
    r.text = os.str();
    return r;
}

Report cmd_h1(const Options& opt, const std::vector<std::string>& in) {
    const TwistTuple t = parse_tuple(input_at(in, 0, "tuple"), Surface(opt.page));
    const auto chain = chain_from_tuple(t, opt.page);
    const auto q = block_form(chain).q;
    const auto total = h1_total_space(chain);
    const auto bdry = boundary_h1(chain);
    Report r;
    r.doc = {{"page", opt.page},
             {"tuple", t.to_string()},
             {"n", chain.n},
             {"m", chain.m},
             {"a", chain.a.to_rows()},
             {"q", q.to_rows()},
             {"smith_a", smith_normal_form(chain.a).divisors},
             {"smith_q", smith_normal_form(q).divisors},
             {"euler_char", euler_char(chain)},
             {"h1_total", to_json(total)},
             {"h1_boundary", to_json(bdry)}};
    std::ostringstream os;
    os << "A=" << chain.a.to_string() << "\nQ=" << q.to_string() << "\nchi(X)=" << euler_char(chain)
       << "\nH1(X)=" << total.to_string() << "\nH1(boundary)=" << bdry.to_string() << "\n";
    r.text = os.str();
    return r;
}

Report cmd_verdict(const Options&, const std::vector<std::string>& in) {
    const TwistTuple t = parse_tuple(input_at(in, 0, "tuple"));
    Report r;
    try {
        const FillingReport f = filling_verdict(t);
        json cancels = json::array();
        for (const auto& c : f.cancellations)
            cancels.push_back({{"one_handle", c.one_handle}, {"two_handle", c.two_handle}, {"slides", c.slides}});
        r.doc = {{"tuple", t.to_string()},
                 {"n", f.chain.n},
                 {"m", f.chain.m},
                 {"det_a", f.det_a},
                 {"smith_a", f.smith_a},
                 {"smith_q", f.smith_q},
                 {"h1_total", to_json(f.h1_total)},
                 {"h1_boundary", to_json(f.h1_boundary)},
                 {"euler_char", f.euler},
                 {"boundary_cycles", f.boundary_cycles},
                 {"cancellations", cancels},
                 {"remaining_handles", {1, f.remaining_one_handles, f.remaining_two_handles}},
                 {"verdict", "D4-or-Mazur"},
                 {"conclusion", f.conclusion}};
        std::ostringstream os;
        os << "verdict: D4-or-Mazur\n" << f.conclusion << "\n"
           << "det A=" << f.det_a << " chi(X)=" << f.euler << " boundary cycles=" << f.boundary_cycles << "\n";
        for (const auto& c : f.cancellations)
            os << "cancel 1-handle " << c.one_handle << " with 2-handle " << c.two_handle << " (" << c.slides
               << " slides)\n";
        r.text = os.str();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionFailed) throw;
        r.exit_code = kExitNegative;
        r.doc = {{"tuple", t.to_string()}, {"verdict", "precondition-failed"}, {"reason", e.what()}};
        r.text = std::string("verdict: precondition failed\n") + e.what() + "\n";
    }
    return r;
}

Report cmd_total(const Options&, const std::vector<std::string>& in) {
    const TwistTuple t = parse_tuple(input_at(in, 0, "tuple"));
    const MappingClass total = total_monodromy(t);
    Report r;
    r.doc = {{"tuple", t.to_string()}, {"total", to_json(total)}, {"central", is_central(total)}};
    r.text = total.to_string() + "\n";
    return r;
}

Report cmd_equiv(const Options& opt, const std::vector<std::string>& in) {
    const TwistTuple t1 = parse_tuple(input_at(in, 0, "first tuple"));
    const TwistTuple t2 = parse_tuple(input_at(in, 1, "second tuple"));
    const auto res = equivalence_bfs(t1, t2, BfsBudget{opt.budget});
    Report r;
    r.exit_code = res.verdict == Verdict::Equivalent ? kExitOk : kExitNegative;
    r.doc = {{"first", t1.to_string()},
             {"second", t2.to_string()},
             {"verdict", to_string(res.verdict)},
             {"reason", res.reason},
             {"states_explored", res.states_explored},
             {"certificate", to_json(res.certificate)}};
    r.text = std::string(to_string(res.verdict)) + " (" + res.reason + ")\n";
    if (res.verdict == Verdict::Equivalent) r.text += "certificate: " + res.certificate.to_string() + "\n";
    return r;
}

Report cmd_classify(const Options&, const std::vector<std::string>& in) {
    const TwistTuple t1 = parse_tuple(input_at(in, 0, "first tuple"));
    const TwistTuple t2 = parse_tuple(input_at(in, 1, "second tuple"));
    const auto res = classify_length3(t1, t2);
    Report r;
    r.exit_code = res.equivalent ? kExitOk : kExitNegative;
    r.doc = {{"first", t1.to_string()},
             {"second", t2.to_string()},
             {"verdict", res.equivalent ? "equivalent" : "not-applicable"},
             {"reason", res.reason},
             {"proven_inequivalent", res.proven_inequivalent},
             {"certificate", to_json(res.certificate)}};
    if (res.trace.shape_case == 2) {
        const auto& tr = res.trace;
        r.doc["trace"] = {{"z", tr.z},
                          {"psi1", tr.psi1.to_string()},
                          {"psi2", tr.psi2.to_string()},
                          {"conjugators_in_subgroup", tr.conjugators_in_subgroup},
                          {"quotient_in_subgroup", tr.quotient_in_subgroup},
                          {"quotient_image", tr.quotient_image ? json(tr.quotient_image->to_string()) : json(nullptr)},
                          {"beta_power", tr.beta_power}};
    }
    r.text = res.equivalent ? "equivalent\ncertificate: " + res.certificate.to_string() + "\n"
                            : std::string(res.proven_inequivalent ? "not equivalent: " : "not applicable: ") +
                                  res.reason + "\n";
    return r;
}

Report cmd_enum(const Options& opt, const std::vector<std::string>& in) {
    MappingClass phi;
    if (!opt.total_of.empty())
        phi = total_monodromy(parse_tuple(opt.total_of));
    else
        phi = parse_word(input_at(in, 0, "monodromy word"));
    const EnumBounds bounds{opt.max_height, opt.max_conjugator};
    const auto found = enumerate_factorizations(phi, opt.length, bounds);
    Report r;
    r.exit_code = found.empty() ? kExitNegative : kExitOk;
    json list = json::array();
    std::string text;
    for (const auto& t : found) {
        list.push_back(t.to_string());
        text += t.to_string() + "\n";
    }
    r.doc = {{"monodromy", to_json(phi)},
             {"length", opt.length},
             {"max_height", opt.max_height},
             {"max_conjugator", opt.max_conjugator},
             {"count", found.size()},
             {"factorizations", list}};
    r.text = std::to_string(found.size()) + " factorization(s)\n" + text;
    return r;
}

Report cmd_snf(const Options&, const std::vector<std::string>& in) {
    const IntMatrix m = parse_matrix(input_at(in, 0, "matrix"));
    const SmithForm s = smith_normal_form(m);
    const AbelianGroup coker = cokernel(m);
    Report r;
    r.doc = {{"matrix", m.to_rows()},
             {"divisors", s.divisors},
             {"rank", s.rank},
             {"left", s.left.to_rows()},
             {"right", s.right.to_rows()},
             {"cokernel", to_json(coker)}};
    std::string div;
    for (size_t i = 0; i < s.divisors.size(); ++i) div += (i ? "," : "") + std::to_string(s.divisors[i]);
    r.text = "divisors=(" + div + ") cokernel=" + coker.to_string() + "\n";
    return r;
}

Report cmd_orbit(const Options& opt, const std::vector<std::string>& in) {
    const TwistTuple t = parse_tuple(input_at(in, 0, "tuple"));
    const auto orbit = hurwitz_orbit(t, opt.max_states);
    Report r;
    json list = json::array();
    std::string text;
    for (const auto& s : orbit) {
        list.push_back(s.to_string());
        text += s.to_string() + "\n";
    }
    r.doc = {{"tuple", t.to_string()}, {"max_states", opt.max_states}, {"count", orbit.size()}, {"orbit", list}};
    r.text = text;
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planar Lefschetz fibration toolkit: twist factorizations on the 4-holed sphere, "
                 "Hurwitz equivalence, and integral homology of PALF total spaces"};
    app.require_subcommand(1);
    Options opt;

    using Handler = Report (*)(const Options&, const std::vector<std::string>&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler h, const char* input_help, bool two_inputs = false) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", opt.as_json, "Emit machine-readable JSON");
        sub->add_option("--file", opt.file, "Read inputs from a file, one per line");
        sub->add_option("input", opt.first_input, input_help);
        if (two_inputs) sub->add_option("second", opt.second_input, "Second tuple");
        commands.emplace_back(sub, h);
        return sub;
    };
    add("check-hs", "Decide whether the boundary is an integral homology sphere", cmd_check_hs, "Tuple")
        ->add_option("--page", opt.page, "Number of holes of the planar page")
        ->capture_default_str();
    add("h1", "Homology of the total space and of its boundary", cmd_h1, "Tuple")
        ->add_option("--page", opt.page, "Number of holes of the planar page")
        ->capture_default_str();
    add("verdict", "D4-or-Mazur filling verdict for a length-3 factorization", cmd_verdict, "Tuple");
    add("total", "Total monodromy in normal form", cmd_total, "Tuple");
    add("equiv", "Search for Hurwitz/conjugation equivalence", cmd_equiv, "First tuple", true)
        ->add_option("--budget", opt.budget, "Maximum number of search states")
        ->capture_default_str();
    add("classify", "Certifying classifier for length-3 factorizations", cmd_classify, "First tuple", true);
    CLI::App* en = add("enum", "Enumerate positive factorizations", cmd_enum, "Monodromy word, e.g. \"t(1/0) t(d1)\"");
    en->add_option("--total-of", opt.total_of, "Use the total monodromy of this tuple");
    en->add_option("--length", opt.length, "Number of twists")->capture_default_str();
    en->add_option("-H,--height", opt.max_height, "Slope height bound")->capture_default_str();
    en->add_option("-L,--conjugator-length", opt.max_conjugator, "Conjugator word length bound")->capture_default_str();
    add("snf", "Smith normal form of an integer matrix", cmd_snf, "Matrix, e.g. \"[[2,0],[0,3]]\"");
    add("orbit", "Bounded Hurwitz orbit", cmd_orbit, "Tuple")
        ->add_option("--max", opt.max_states, "Maximum number of tuples listed")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    for (auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        try {
            Report r = handler(opt, gather_inputs(opt));
            if (opt.as_json) {
                r.doc["schema"] = kSchema;
                r.doc["command"] = sub->get_name();
                r.doc["exit_code"] = r.exit_code;
                out << r.doc.dump(2) << "\n";
            } else {
                out << r.text;
            }
            return r.exit_code;
        } catch (const Error& e) {
            if (opt.as_json) {
                json doc = {{"schema", kSchema},
                            {"command", sub->get_name()},
                            {"error", to_string(e.kind())},
                            {"message", e.what()},
                            {"exit_code", kExitError}};
                out << doc.dump(2) << "\n";
            }
            err << "error: " << e.what() << "\n";
            return kExitError;
        }
    }
    return kExitError;
}

} // namespace palf
