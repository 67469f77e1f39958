#include "cepd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cepd/classify.hpp"
#include "cepd/decomp.hpp"
#include "cepd/inverses.hpp"
#include "cepd/io.hpp"
#include "cepd/randgen.hpp"
#include "cepd/solvers.hpp"

namespace cepd {

namespace {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NonFiniteEntry:
    case ErrorKind::InvalidTolerance:
        return 2;
    default:
        return 1;
    }
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::ParseError, "cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

Matrix load_matrix(const std::string& path, MatrixFormat format) {
    return parse_matrix(read_source(path), format);
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    ordered_json data = ordered_json::array();
    for (const cx& e : m.entries())
        data.push_back({{"re", e.real()}, {"im", e.imag()}});
    doc["data"] = std::move(data);
    return doc;
}

ordered_json identity_rows_json(const IdentityReport& report) {
    ordered_json rows = ordered_json::array();
    for (const IdentityRow& row : report.rows) {
        ordered_json r;
        r["label"] = row.label;
        r["evaluated"] = row.evaluated;
        if (row.evaluated) {
            r["residual"] = row.residual;
            r["pass"] = row.pass;
        }
        if (!row.note.empty()) r["note"] = row.note;
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json flag_json(const ClassFlag& flag) {
    return {{"holds", flag.holds}, {"residual", flag.residual}};
}

struct GlobalOptions {
    double tol_rank = 1e-10;
    double tol_eq = 1e-9;
    std::string format = "text";
    std::uint64_t seed = 0;

    Tolerance tolerance() const { return Tolerance(tol_rank, tol_eq); }
    MatrixFormat matrix_format() const {
        return format == "json" ? MatrixFormat::Json : MatrixFormat::Text;
    }
};

ordered_json report_head(const std::string& command, const ordered_json& arguments,
                         const Tolerance& tol) {
    ordered_json doc;
    doc["command"] = command;
    doc["arguments"] = arguments;
    doc["tolerance"] = {{"rank_rtol", tol.rank_rtol}, {"eq_atol", tol.eq_atol}};
    return doc;
}

void emit(std::ostream& out, ordered_json doc) {
    doc["exit_status"] = 0;
    out << doc.dump(2) << "\n";
}

void run_inv(const GlobalOptions& global, const std::string& kind, const std::string& file,
             std::ostream& out) {
    Tolerance tol = global.tolerance();
    Matrix a = load_matrix(file, global.matrix_format());
    // mp is the only kind defined for rectangular input; index exists only
    // for square matrices and is omitted from the report otherwise
    const bool square = a.is_square();
    unsigned k = kind == "mp" && !square ? 0 : index(a, tol);
    Matrix x;
    ordered_json residuals;
    if (kind == "mp") {
        x = moore_penrose(a, tol);
        Matrix ax = a * x;
        Matrix xa = x * a;
        residuals["XAX=X"] = rel_residual(x * a * x, x);
        residuals["AXA=A"] = rel_residual(a * x * a, a);
        residuals["(AX)*=AX"] = rel_residual(conj_transpose(ax), ax);
        residuals["(XA)*=XA"] = rel_residual(conj_transpose(xa), xa);
    } else if (kind == "drazin" || kind == "group") {
        x = kind == "group" ? group_inverse(a, tol) : drazin(a, tol);
        residuals["AX=XA"] = rel_residual(a * x, x * a);
        residuals["XAX=X"] = rel_residual(x * a * x, x);
        residuals["XA^{k+1}=A^k"] =
            rel_residual(x * matrix_power(a, k + 1), matrix_power(a, k));
    } else if (kind == "cep") {
        x = core_ep(a, tol);
        Matrix ak = matrix_power(a, k);
        Matrix proj = ak * moore_penrose(ak, tol);
        Matrix x_mp = moore_penrose(x, tol);
        residuals["XAX=X"] = rel_residual(x * a * x, x);
        residuals["XX^+=A^k(A^k)^+"] = rel_residual(x * x_mp, proj);
        residuals["X^+X=A^k(A^k)^+"] = rel_residual(x_mp * x, proj);
    } else if (kind == "dmp") {
        x = dmp(a, tol);
        Matrix ak = matrix_power(a, k);
        residuals["XA=A^DA"] = rel_residual(x * a, drazin(a, tol) * a);
        residuals["XAX=X"] = rel_residual(x * a * x, x);
        residuals["A^kX=A^kA^+"] = rel_residual(ak * x, ak * moore_penrose(a, tol));
    } else if (kind == "mpd") {
        x = mpd(a, tol);
        Matrix ak = matrix_power(a, k);
        residuals["AX=AA^D"] = rel_residual(a * x, a * drazin(a, tol));
        residuals["XAX=X"] = rel_residual(x * a * x, x);
        residuals["XA^k=A^+A^k"] = rel_residual(x * ak, moore_penrose(a, tol) * ak);
    } else if (kind == "cmp") {
        x = cmp(a, tol);
        Matrix d = drazin(a, tol);
        Matrix mp = moore_penrose(a, tol);
        Matrix core = a * d * a;
        residuals["AXA=A_1"] = rel_residual(a * x * a, core);
        residuals["XAX=X"] = rel_residual(x * a * x, x);
        residuals["XA=A^+A_1"] = rel_residual(x * a, mp * core);
        residuals["AX=A_1A^+"] = rel_residual(a * x, core * mp);
    } else { // dstar
        x = drazin_star(a, tol);
        residuals["X=A^DAA^*"] = rel_residual(x, drazin(a, tol) * a * conj_transpose(a));
    }

    bool ok = true;
    for (const auto& item : residuals.items())
        if (item.value().get<double>() > tol.eq_atol) ok = false;

    ordered_json doc = report_head("inv", {{"kind", kind}, {"file", file}}, tol);
    if (square) doc["index"] = k;
    doc["result"] = matrix_json(x);
    doc["defining_residuals"] = std::move(residuals);
    doc["definitions_satisfied"] = ok;
    emit(out, std::move(doc));
}

void run_classify(const GlobalOptions& global, const std::string& file, std::ostream& out) {
    Tolerance tol = global.tolerance();
    Matrix a = load_matrix(file, global.matrix_format());
    ClassificationReport rep = classify(a, tol);
    ordered_json doc = report_head("classify", {{"file", file}}, tol);
    doc["index"] = rep.index;
    ordered_json flags;
    flags["hermitian"] = flag_json(rep.hermitian);
    flags["normal"] = flag_json(rep.normal);
    flags["ep"] = flag_json(rep.ep);
    flags["k_ep"] = flag_json(rep.k_ep);
    flags["core_ep_matrix"] = flag_json(rep.core_ep_matrix);
    flags["sd"] = flag_json(rep.sd);
    flags["partial_isometry"] = flag_json(rep.partial_isometry);
    flags["cepd"] = flag_json(rep.cepd);
    doc["flags"] = std::move(flags);
    doc["moore_penrose"] = matrix_json(rep.mp);
    doc["drazin"] = matrix_json(rep.drazin);
    doc["core_ep"] = matrix_json(rep.core_ep_inverse);
    doc["core_part"] = matrix_json(rep.core_part);
    emit(out, std::move(doc));
}

void run_decompose(const GlobalOptions& global, const std::string& kind, const std::string& file,
                   std::ostream& out) {
    Tolerance tol = global.tolerance();
    Matrix a = load_matrix(file, global.matrix_format());
    ordered_json doc = report_head("decompose", {{"kind", kind}, {"file", file}}, tol);
    if (kind == "svd") {
        SvdResult dec = svd(a);
        Matrix sigma(a.rows(), a.cols());
        for (std::size_t i = 0; i < dec.sigma.size(); ++i) sigma(i, i) = dec.sigma[i];
        doc["u"] = matrix_json(dec.u);
        doc["sigma"] = dec.sigma;
        doc["v"] = matrix_json(dec.v);
        doc["reconstruction_residual"] =
            rel_residual(dec.u * sigma * conj_transpose(dec.v), a);
    } else if (kind == "hs") {
        HsDecomposition hs = hs_decompose(a, tol);
        doc["r"] = hs.r;
        ordered_json blocks = ordered_json::array();
        for (const SigmaBlock& b : hs.sigma_blocks)
            blocks.push_back({{"value", b.value}, {"multiplicity", b.multiplicity}});
        doc["sigma_blocks"] = std::move(blocks);
        doc["u"] = matrix_json(hs.u);
        doc["k_block"] = matrix_json(hs.k_block);
        doc["l_block"] = matrix_json(hs.l_block);
        Matrix kk_ll = hs.k_block * conj_transpose(hs.k_block) +
                       hs.l_block * conj_transpose(hs.l_block);
        doc["invariant_residuals"] = {
            {"KK*+LL*=I", rel_residual(kk_ll, Matrix::identity(hs.r))},
            {"reconstruction", rel_residual(hs.reconstruct(), a)},
        };
    } else { // corenil
        CoreNilpotentParts parts = core_nilpotent(a, tol);
        doc["core"] = matrix_json(parts.core);
        doc["nilpotent"] = matrix_json(parts.nilpotent);
        doc["index_of_nilpotent"] = parts.index_of_nilpotent;
        Matrix zero(a.rows(), a.cols());
        doc["invariant_residuals"] = {
            {"core+nilpotent=A", rel_residual(parts.core + parts.nilpotent, a)},
            {"core*nilpotent=0", rel_residual(parts.core * parts.nilpotent, zero)},
            {"nilpotent*core=0", rel_residual(parts.nilpotent * parts.core, zero)},
        };
    }
    emit(out, std::move(doc));
}

void run_solve(const GlobalOptions& global, const std::string& method, const std::string& file,
               const std::string& rhs_file, std::ostream& out) {
    Tolerance tol = global.tolerance();
    Matrix a = load_matrix(file, global.matrix_format());
    Matrix b = load_matrix(rhs_file, global.matrix_format());
    SolveResult result;
    if (method == "cmp") result = solve_cmp_system(a, b, tol);
    else if (method == "drazin") result = solve_drazin_system(a, b, tol);
    else if (method == "corange") result = solve_in_corange(a, b, tol);
    else if (method == "pi") result = solve_pi(a, b, tol);
    else result = solve_drazin_star(a, b, tol);

    ordered_json doc =
        report_head("solve", {{"method", method}, {"file", file}, {"rhs", rhs_file}}, tol);
    doc["particular"] = matrix_json(result.particular);
    doc["homogeneous_projector"] = matrix_json(result.homogeneous_projector);
    doc["residual"] = result.residual;
    doc["solution_space_note"] = result.solution_space_note;
    emit(out, std::move(doc));
}

void run_check(const GlobalOptions& global, const std::string& file, std::ostream& out) {
    Tolerance tol = global.tolerance();
    Matrix a = load_matrix(file, global.matrix_format());
    IdentityReport identities = verify_identities(a, tol);
    CepdEquivalenceReport equivalences = cepd_equivalences(a, tol);
    IdentityReport pi_rows = check_pi_theorems(a, tol);

    ordered_json doc = report_head("check", {{"file", file}}, tol);
    doc["identities"] = identity_rows_json(identities);
    ordered_json conds = ordered_json::array();
    for (const CepdCondition& cond : equivalences.conditions) {
        ordered_json c;
        c["label"] = cond.label;
        c["evaluated"] = cond.evaluated;
        if (cond.evaluated) {
            c["holds"] = cond.holds;
            c["residual"] = cond.residual;
        }
        if (!cond.note.empty()) c["note"] = cond.note;
        conds.push_back(std::move(c));
    }
    doc["cepd_equivalences"] = {{"conditions", std::move(conds)},
                                {"is_cepd", equivalences.is_cepd},
                                {"all_agree", equivalences.all_agree}};
    doc["pi_theorems"] = identity_rows_json(pi_rows);
    doc["all_identities_pass"] = identities.all_passed() && pi_rows.all_passed();
    emit(out, std::move(doc));
}

void run_gen(const GlobalOptions& global, const std::string& klass, std::size_t n, std::size_t r,
             std::size_t k, double floor, std::ostream& out) {
    GenSpec spec(n, r, k, global.seed, floor);
    Matrix m;
    if (klass == "index") m = gen_with_index(spec);
    else if (klass == "pi") m = gen_partial_isometry(spec);
    else m = gen_cepd(spec);
    out << format_matrix(m, global.matrix_format());
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized-inverse toolkit for dense complex matrices"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--tol-rank", global.tol_rank, "relative singular-value threshold for rank");
    app.add_option("--tol-eq", global.tol_eq, "normalized Frobenius equality threshold");
    app.add_option("--format", global.format, "matrix file format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", global.seed, "seed for gen");

    std::string inv_kind, inv_file;
    CLI::App* inv = app.add_subcommand("inv", "compute a generalized inverse");
    inv->add_option("--kind", inv_kind, "inverse kind")
        ->required()
        ->check(CLI::IsMember({"mp", "group", "drazin", "cep", "dmp", "mpd", "cmp", "dstar"}));
    inv->add_option("file", inv_file, "matrix file ('-' for stdin)")->required();

    std::string classify_file;
    CLI::App* cls = app.add_subcommand("classify", "matrix class predicates");
    cls->add_option("file", classify_file, "matrix file ('-' for stdin)")->required();

    std::string dec_kind, dec_file;
    CLI::App* dec = app.add_subcommand("decompose", "matrix decompositions");
    dec->add_option("--kind", dec_kind, "decomposition kind")
        ->required()
        ->check(CLI::IsMember({"svd", "hs", "corenil"}));
    dec->add_option("file", dec_file, "matrix file ('-' for stdin)")->required();

    std::string solve_method, solve_file, solve_rhs;
    CLI::App* solve = app.add_subcommand("solve", "generalized-inverse linear solvers");
    solve->add_option("--method", solve_method, "solver")
        ->required()
        ->check(CLI::IsMember({"cmp", "drazin", "corange", "pi", "dstar"}));
    solve->add_option("--rhs", solve_rhs, "right-hand side file (n x 1)")->required();
    solve->add_option("file", solve_file, "matrix file ('-' for stdin)")->required();

    std::string check_file;
    CLI::App* check = app.add_subcommand("check", "identity, equivalence and theorem suites");
    check->add_option("file", check_file, "matrix file ('-' for stdin)")->required();

    std::string gen_class = "index";
    std::size_t gen_n = 0, gen_r = 0, gen_k = 0;
    double gen_floor = 0.1;
    CLI::App* gen = app.add_subcommand("gen", "generate a structured random matrix");
    gen->add_option("--class", gen_class, "generator")
        ->check(CLI::IsMember({"index", "pi", "cepd"}));
    gen->add_option("--n", gen_n, "dimension")->required();
    gen->add_option("--r", gen_r, "rank of the invertible block");
    gen->add_option("--k", gen_k, "target index");
    gen->add_option("--spectrum-floor", gen_floor, "minimum retained singular value");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cepd");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) run_inv(global, inv_kind, inv_file, out);
        else if (cls->parsed()) run_classify(global, classify_file, out);
        else if (dec->parsed()) run_decompose(global, dec_kind, dec_file, out);
        else if (solve->parsed()) run_solve(global, solve_method, solve_file, solve_rhs, out);
        else if (check->parsed()) run_check(global, check_file, out);
        else if (gen->parsed()) run_gen(global, gen_class, gen_n, gen_r, gen_k, gen_floor, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}

} // namespace cepd
