// File-driven command line for the extensor calculus: parse a workspace
// document, run one operation, print a result document. Exit codes: 0
// success, 1 usage or malformed input, 2 singular domain errors, 3 property
// suite failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "exta/basis_change.hpp"
#include "exta/check.hpp"
#include "exta/determinant.hpp"
#include "exta/operators.hpp"
#include "exta/workspace.hpp"

namespace {

using namespace exta;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSingular = 2;
constexpr int kExitCheckFailed = 3;

struct UnknownName : Error {
    explicit UnknownName(const std::string& name)
        : Error("unknown name '" + name + "' in the workspace") {}
};

Workspace load(const std::string& path) {
    if (path.empty()) throw Error("this subcommand needs --input FILE");
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

const WorkspaceEntry& lookup(const Workspace& w, const std::string& name) {
    const WorkspaceEntry* e = w.find(name);
    if (e == nullptr) throw UnknownName(name);
    return *e;
}

const PqExtensor& as_operator(const WorkspaceEntry& e) {
    const auto* t = std::get_if<PqExtensor>(&e.value);
    if (t == nullptr || t->p() != 1 || t->q() != 1) {
        throw Error("'" + e.name + "' must be a (1,1)-extensor");
    }
    return *t;
}

const Frame& as_frame(const WorkspaceEntry& e) {
    const auto* f = std::get_if<Frame>(&e.value);
    if (f == nullptr) throw Error("'" + e.name + "' must be a frame");
    return *f;
}

const Multivector& as_mv(const WorkspaceEntry& e) {
    const auto* x = std::get_if<Multivector>(&e.value);
    if (x == nullptr) throw Error("'" + e.name + "' must be a multivector");
    return *x;
}

std::string document_for(int dim, WorkspaceEntry entry) {
    Workspace out;
    out.dim = dim;
    out.add(std::move(entry));
    return print_workspace(out);
}

int cmd_det(const std::string& input, const std::string& name) {
    const Workspace w = load(input);
    std::cout << ws_detail::fmt_num(det(as_operator(lookup(w, name)))) << "\n";
    return kExitOk;
}

int cmd_invert(const std::string& input, const std::string& name) {
    const Workspace w = load(input);
    const PqExtensor inv = invert(as_operator(lookup(w, name)));
    std::cout << document_for(w.dim, {name + "_inv", inv, {}});
    return kExitOk;
}

int cmd_adjoint(const std::string& input, const std::string& name) {
    const Workspace w = load(input);
    const WorkspaceEntry& e = lookup(w, name);
    if (const auto* t = std::get_if<PqExtensor>(&e.value)) {
        std::cout << document_for(w.dim, {name + "_adj", adjoint(*t), {}});
        return kExitOk;
    }
    if (const auto* g = std::get_if<GeneralExtensor>(&e.value)) {
        std::cout << document_for(w.dim, {name + "_adj", adjoint(*g), {}});
        return kExitOk;
    }
    throw Error("'" + name + "' must be an extensor");
}

int cmd_extend(const std::string& input, const std::string& name, const std::string& arg) {
    const Workspace w = load(input);
    const PqExtensor& t = as_operator(lookup(w, name));
    if (arg.empty()) {
        std::cout << document_for(w.dim, {name + "_ext", extend_matrix(t), {}});
    } else {
        const Multivector r = extend_apply(t, as_mv(lookup(w, arg)));
        std::cout << document_for(w.dim, {"result", r, {}});
    }
    return kExitOk;
}

int cmd_generalize(const std::string& input, const std::string& name, const std::string& arg) {
    const Workspace w = load(input);
    const PqExtensor& t = as_operator(lookup(w, name));
    if (arg.empty()) {
        std::cout << document_for(w.dim, {name + "_gen", generalize_matrix(t), {}});
    } else {
        const Multivector r = generalize_apply(t, as_mv(lookup(w, arg)));
        std::cout << document_for(w.dim, {"result", r, {}});
    }
    return kExitOk;
}

int cmd_biv(const std::string& input, const std::string& name) {
    const Workspace w = load(input);
    std::cout << document_for(w.dim, {name + "_biv", biv(as_operator(lookup(w, name))), {}});
    return kExitOk;
}

int cmd_components(const std::string& input, const std::string& name,
                   const std::string& frame_name, const std::string& variance_word) {
    const Workspace w = load(input);
    const WorkspaceEntry& e = lookup(w, name);
    const Frame& f = as_frame(lookup(w, frame_name));
    Variance variance;
    if (variance_word == "covariant") {
        variance = Variance::covariant;
    } else if (variance_word == "contravariant") {
        variance = Variance::contravariant;
    } else {
        throw Error("--variance must be covariant or contravariant");
    }

    ComponentSet cs = [&] {
        if (const auto* t = std::get_if<PqExtensor>(&e.value)) return components(*t, f, variance);
        if (const auto* g = std::get_if<GeneralExtensor>(&e.value)) {
            return components(*g, f, variance);
        }
        if (const auto* l = std::get_if<ElementaryKExtensor>(&e.value)) {
            return components(*l, f, variance);
        }
        throw Error("'" + name + "' must be an extensor");
    }();

    Workspace out;
    out.dim = w.dim;
    out.add({frame_name, f, {}});
    out.add({name + "_components", std::move(cs), frame_name});
    std::cout << print_workspace(out);
    return kExitOk;
}

int cmd_reconstruct(const std::string& input, const std::string& name) {
    const Workspace w = load(input);
    const WorkspaceEntry& e = lookup(w, name);
    const auto* cs = std::get_if<ComponentSet>(&e.value);
    if (cs == nullptr) throw Error("'" + name + "' must be a components object");
    const AnyExtensor rebuilt = reconstruct(*cs);
    WorkspaceEntry entry{name + "_reconstructed", Multivector(1), {}};
    if (const auto* t = std::get_if<PqExtensor>(&rebuilt)) entry.value = *t;
    if (const auto* g = std::get_if<GeneralExtensor>(&rebuilt)) entry.value = *g;
    if (const auto* l = std::get_if<ElementaryKExtensor>(&rebuilt)) entry.value = *l;
    std::cout << document_for(w.dim, std::move(entry));
    return kExitOk;
}

int cmd_change_basis(const std::string& input, const std::string& from,
                     const std::string& to) {
    const Workspace w = load(input);
    const PqExtensor eps = changing_basis(as_frame(lookup(w, from)), as_frame(lookup(w, to)));
    std::cout << document_for(w.dim, {"change_" + from + "_" + to, eps, {}});
    return kExitOk;
}

int cmd_transport(const std::string& input, const std::string& op_name,
                  const std::string& frame_name) {
    const Workspace w = load(input);
    const auto [e, r] =
        frame_transport(as_operator(lookup(w, op_name)), as_frame(lookup(w, frame_name)));
    Workspace out;
    out.dim = w.dim;
    out.add({"transported", e, {}});
    out.add({"transported_reciprocal", r, {}});
    std::cout << print_workspace(out);
    return kExitOk;
}

int cmd_dims(const std::string& input, int dim_flag, const std::string& kind,
             const std::vector<int>& params) {
    int n = dim_flag;
    if (n == 0 && !input.empty()) n = load(input).dim;
    if (n == 0) throw Error("dims needs --dim N or --input FILE");

    std::uint64_t result = 0;
    if (kind == "pq") {
        if (params.size() != 2) throw Error("dims pq needs grades P Q");
        result = dim_of(SpaceKind::pq, n, params[0], params[1]);
    } else if (kind == "general") {
        if (!params.empty()) throw Error("dims general takes no grades");
        result = dim_of(SpaceKind::general, n);
    } else if (kind == "elementary") {
        if (params.size() != 2) throw Error("dims elementary needs K Q");
        result = dim_of(SpaceKind::elementary, n, params[0], params[1]);
    } else if (kind == "exform") {
        if (params.size() != 2) throw Error("dims exform needs K P");
        result = dim_of(SpaceKind::exform, n, params[0], params[1]);
    } else {
        throw Error("dims kind must be pq, general, elementary or exform");
    }
    std::cout << result << "\n";
    return kExitOk;
}

int cmd_check(std::uint64_t seed, int dim, double tolerance) {
    const CheckReport report = run_check_suite(dim, seed, tolerance);
    std::cout << format_report(report);
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_print(const std::string& input) {
    std::cout << print_workspace(load(input));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"euclidean exterior/Clifford algebra and extensor calculus"};
    app.require_subcommand(1);

    std::string input;
    std::string name, arg, frame_name, second;
    std::string variance = "covariant";
    std::string kind;
    std::vector<int> params;
    std::uint64_t seed = 0;
    int dim = 0;
    double tolerance = exta::kRelTol;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", input, "workspace document")->required();
    };

    auto* det_cmd = app.add_subcommand("det", "determinant of a (1,1)-extensor");
    det_cmd->add_option("name", name)->required();
    add_input(det_cmd);

    auto* invert_cmd = app.add_subcommand("invert", "pseudoscalar-formula inverse");
    invert_cmd->add_option("name", name)->required();
    add_input(invert_cmd);

    auto* adjoint_cmd = app.add_subcommand("adjoint", "standard adjoint");
    adjoint_cmd->add_option("name", name)->required();
    add_input(adjoint_cmd);

    auto* extend_cmd = app.add_subcommand("extend", "outermorphism: materialize or apply");
    extend_cmd->add_option("name", name)->required();
    extend_cmd->add_option("multivector", arg);
    add_input(extend_cmd);

    auto* generalize_cmd =
        app.add_subcommand("generalize", "derivation extension: materialize or apply");
    generalize_cmd->add_option("name", name)->required();
    generalize_cmd->add_option("multivector", arg);
    add_input(generalize_cmd);

    auto* biv_cmd = app.add_subcommand("biv", "characteristic bivector");
    biv_cmd->add_option("name", name)->required();
    add_input(biv_cmd);

    auto* components_cmd = app.add_subcommand("components", "components in a frame");
    components_cmd->add_option("name", name)->required();
    components_cmd->add_option("frame", frame_name)->required();
    components_cmd->add_option("--variance", variance, "covariant | contravariant");
    add_input(components_cmd);

    auto* reconstruct_cmd =
        app.add_subcommand("reconstruct", "rebuild an extensor from components");
    reconstruct_cmd->add_option("name", name)->required();
    add_input(reconstruct_cmd);

    auto* change_cmd = app.add_subcommand("change-basis", "changing-basis extensor");
    change_cmd->add_option("from", name)->required();
    change_cmd->add_option("to", second)->required();
    add_input(change_cmd);

    auto* transport_cmd = app.add_subcommand("transport", "carry a frame by an extensor");
    transport_cmd->add_option("name", name)->required();
    transport_cmd->add_option("frame", frame_name)->required();
    add_input(transport_cmd);

    auto* dims_cmd = app.add_subcommand("dims", "dimension of an extensor space");
    dims_cmd->add_option("kind", kind, "pq | general | elementary | exform")->required();
    dims_cmd->add_option("params", params, "grades for the kind");
    dims_cmd->add_option("--dim", dim, "vector space dimension");
    dims_cmd->add_option("--input", input, "workspace document supplying the dimension");

    auto* check_cmd = app.add_subcommand("check", "run the property suite");
    check_cmd->add_option("--seed", seed, "PRNG seed (splitmix64)");
    check_cmd->add_option("--dim", dim, "dimension, 2..6")->default_val(4);
    check_cmd->add_option("--tolerance", tolerance, "relative comparison tolerance");

    auto* print_cmd = app.add_subcommand("print", "reprint a document in canonical form");
    add_input(print_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (det_cmd->parsed()) return cmd_det(input, name);
        if (invert_cmd->parsed()) return cmd_invert(input, name);
        if (adjoint_cmd->parsed()) return cmd_adjoint(input, name);
        if (extend_cmd->parsed()) return cmd_extend(input, name, arg);
        if (generalize_cmd->parsed()) return cmd_generalize(input, name, arg);
        if (biv_cmd->parsed()) return cmd_biv(input, name);
        if (components_cmd->parsed()) return cmd_components(input, name, frame_name, variance);
        if (reconstruct_cmd->parsed()) return cmd_reconstruct(input, name);
        if (change_cmd->parsed()) return cmd_change_basis(input, name, second);
        if (transport_cmd->parsed()) return cmd_transport(input, name, frame_name);
        if (dims_cmd->parsed()) return cmd_dims(input, dim, kind, params);
        if (check_cmd->parsed()) return cmd_check(seed, dim, tolerance);
        if (print_cmd->parsed()) return cmd_print(input);
    } catch (const exta::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.singular ? kExitSingular : kExitUsage;
    } catch (const exta::SingularFrame& e) {
        std::cerr << "error: SingularFrame: " << e.what() << "\n";
        return kExitSingular;
    } catch (const exta::SingularExtensor& e) {
        std::cerr << "error: SingularExtensor: " << e.what() << "\n";
        return kExitSingular;
    } catch (const exta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
