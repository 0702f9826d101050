#include "ptorder/asm_permute.hpp"
#include "ptorder/int_matrix.hpp"
#include "ptorder/int_poly.hpp"
#include "ptorder/io.hpp"
#include "ptorder/order_engine.hpp"
#include "ptorder/pt_graph.hpp"
#include "ptorder/theorems.hpp"
#include "ptorder/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace ptorder;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDiscrepancy = 3;

double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from).count();
}

std::vector<std::string> param_names(GraphType t) {
    switch (t) {
        case GraphType::Type1: return {"n", "d", "j1", "j2"};
        case GraphType::Type2b: return {"m1", "m2", "k1", "k2"};
        case GraphType::Type2c: return {"p", "q", "h", "l"};
        case GraphType::Type2d: return {"p", "q", "i1", "i2"};
        case GraphType::Type3c: return {"p", "q", "m", "i"};
        default: return {};
    }
}

std::string params_text(const Classification& c) {
    const auto names = param_names(c.type);
    std::ostringstream os;
    for (std::size_t i = 0; i < c.params.size(); ++i)
        os << (i ? " " : "") << (i < names.size() ? names[i] : "?") << "=" << c.params[i];
    return os.str();
}

std::string cycles_text(const Permutation& p) {
    std::ostringstream os;
    for (const auto& cyc : p.cycles()) {
        os << "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
        os << ")";
    }
    return os.str();
}

std::string ordering_text(const Permutation& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? " " : "") << p.image(i);
    return os.str();
}

Json json_classification(const Classification& c) {
    Json j;
    j["type"] = to_string(c.type);
    j["transposed"] = c.transposed;
    j["cycle_lengths"] = c.cycle_lengths;
    if (!c.params.empty()) {
        Json params;
        const auto names = param_names(c.type);
        for (std::size_t i = 0; i < c.params.size(); ++i) params[names[i]] = c.params[i];
        j["params"] = std::move(params);
    }
    if (!c.detail.empty()) j["reason"] = c.detail;
    if (c.type == GraphType::NonElementary) {
        j["core_vertices"] = c.core_vertices;
        j["satellite_cycles"] = c.satellite_cycles;
    }
    return j;
}

struct AnalyzeOptions {
    bool brute_force = false;
    bool json = false;
};

// Classification of the whole matrix; non-elementary inputs additionally get
// their core component classified.
std::pair<Classification, std::optional<Classification>> classify_matrix(const IntMatrix& a) {
    Classification c = classify(build_graph(a));
    if (c.type != GraphType::NonElementary) return {std::move(c), std::nullopt};
    Classification core = classify(induced_subgraph(build_graph(a), c.core_vertices));
    return {std::move(c), std::move(core)};
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& opt) {
    const IntMatrix a = read_matrix_file(path);
    const int n = a.size();
    Json out;
    std::map<std::string, double> timings;

    out["input"] = path;
    out["n"] = n;
    const bool sign = a.is_sign_matrix();

    auto t0 = std::chrono::steady_clock::now();
    std::optional<PTDecomposition> dec;
    std::optional<Classification> cls, core;
    if (sign) {
        dec = decompose_pt(a);
        auto pair = classify_matrix(a);
        cls = std::move(pair.first);
        core = std::move(pair.second);
    }
    timings["classify_ms"] = elapsed_ms(t0);

    t0 = std::chrono::steady_clock::now();
    const OrderResult ord = finite_order(a);
    timings["order_ms"] = elapsed_ms(t0);

    std::optional<unsigned long long> brute;
    if (opt.brute_force) {
        t0 = std::chrono::steady_clock::now();
        brute = brute_force_order(a, default_order_bound(n));
        timings["brute_force_ms"] = elapsed_ms(t0);
    }

    t0 = std::chrono::steady_clock::now();
    std::string asm_status;
    std::optional<Permutation> witness;
    if (!sign) {
        asm_status = "skipped: entries outside {-1,0,1}";
    } else if (is_asm(a)) {
        asm_status = "already an ASM";
    } else if (n <= 10) {
        witness = find_asm_ordering(a);
        asm_status = witness ? "permutation similar to an ASM" : "not permutation similar to any ASM";
    } else {
        asm_status = "search skipped (n > 10)";
        if (cls && ord.finite &&
            (cls->type == GraphType::Type1 || cls->type == GraphType::Type2c ||
             cls->type == GraphType::Type2d || cls->type == GraphType::Type3c))
            asm_status = asm_permutable_theorem(*cls) ? "permutation similar to an ASM (by theorem)"
                                                      : "not permutation similar to any ASM (by theorem)";
    }
    timings["asm_ms"] = elapsed_ms(t0);

    if (opt.json) {
        if (sign) {
            if (dec) {
                Json d;
                d["permutation"] = dec->p.images();
                if (dec->t) d["t_block"] = {dec->t->i1, dec->t->j1, dec->t->i2, dec->t->j2};
                out["pt_decomposition"] = std::move(d);
            } else {
                out["pt_decomposition"] = nullptr;
            }
            out["classification"] = json_classification(*cls);
            if (core) out["core_classification"] = json_classification(*core);
        }
        out["order"] = json_order_result(ord);
        if (opt.brute_force) out["brute_force_order"] = brute ? Json(*brute) : Json(nullptr);
        out["asm"] = asm_status;
        if (witness) {
            out["asm_witness_ordering"] = witness->images();
            out["asm_witness"] = json_matrix(conjugate(a, *witness));
        }
        out["timings_ms"] = timings;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "matrix: " << n << "x" << n << " from " << path << "\n";
    if (!sign) {
        std::cout << "structure: entries outside {-1,0,1}; classification and ASM analysis skipped\n";
    } else if (dec) {
        std::cout << "structure: P + T with P = " << cycles_text(dec->p);
        if (dec->t)
            std::cout << ", T = T(" << dec->t->i1 << "," << dec->t->j1 << "," << dec->t->i2 << "," << dec->t->j2
                      << ")";
        else
            std::cout << " (permutation matrix, no T-block)";
        std::cout << "\n";
    } else {
        std::cout << "structure: not a PT-matrix";
        if (cls && !cls->detail.empty()) std::cout << " (" << cls->detail << ")";
        std::cout << "\n";
    }
    if (cls) {
        std::cout << "classification: " << to_string(cls->type);
        if (!cls->params.empty()) std::cout << " [" << params_text(*cls) << "]";
        if (cls->transposed) std::cout << " (parameters describe the transpose)";
        if (core) {
            std::cout << "; core " << to_string(core->type);
            if (!core->params.empty()) std::cout << " [" << params_text(*core) << "]";
            std::cout << ", satellite cycles";
            for (int s : cls->satellite_cycles) std::cout << " " << s;
        }
        std::cout << "\n";
    }
    if (ord.finite)
        std::cout << "order: " << *ord.order << "\n";
    else
        std::cout << "order: not of finite order\n";
    std::cout << "char poly: " << polynomial_pretty(ord.characteristic) << "\n";
    if (ord.min_poly) std::cout << "min poly: " << polynomial_pretty(*ord.min_poly) << "\n";
    if (ord.char_factors) {
        std::cout << "char factors:";
        for (const auto& [d, mult] : ord.char_factors->factors) {
            std::cout << " Phi_" << d;
            if (mult > 1) std::cout << "^" << mult;
        }
        std::cout << "\n";
    }
    if (opt.brute_force)
        std::cout << "brute force: " << (brute ? std::to_string(*brute) : std::string("no power <= bound is I"))
                  << "\n";
    std::cout << "asm: " << asm_status << "\n";
    if (witness) std::cout << "asm ordering: " << ordering_text(*witness) << "\n";
    std::cout << "timings:";
    for (const auto& [k, v] : timings) std::cout << " " << k << "=" << v;
    std::cout << "\n";
    return kExitOk;
}

int cmd_enumerate(int n, bool exotic_only, const std::string& format) {
    auto records = enumerate_finite_order(n);
    if (exotic_only) std::erase_if(records, [](const FiniteOrderRecord& r) { return !r.exotic; });
    if (format == "csv") {
        std::cout << "type,n,params,order,exotic,asm_permutable\n";
        for (const auto& r : records) {
            std::cout << to_string(r.type) << "," << n << ",";
            for (std::size_t i = 0; i < r.params.size(); ++i) std::cout << (i ? " " : "") << r.params[i];
            std::cout << "," << r.order << "," << (r.exotic ? 1 : 0) << "," << (r.asm_permutable ? 1 : 0) << "\n";
        }
    } else {
        Json arr = Json::array();
        for (const auto& r : records) {
            Json j;
            j["type"] = to_string(r.type);
            const auto names = param_names(r.type);
            Json params;
            for (std::size_t i = 0; i < r.params.size(); ++i) params[names[i]] = r.params[i];
            j["params"] = std::move(params);
            j["order"] = r.order;
            j["exotic"] = r.exotic;
            j["asm_permutable"] = r.asm_permutable;
            j["matrix"] = json_matrix(r.standard);
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_asm_perm(const std::string& path) {
    const IntMatrix a = read_matrix_file(path);
    if (!a.is_sign_matrix()) {
        std::cerr << "asm-perm: entries outside {-1,0,1}\n";
        return kExitParse;
    }
    Json out;
    const auto witness = find_asm_ordering(a);
    out["permutable"] = witness.has_value();
    if (witness) {
        out["witness_order"] = witness->images();
        out["witness_asm"] = json_matrix(conjugate(a, *witness));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(int max_n, int jobs) {
    const auto results = run_verification(max_n, jobs);
    bool all_pass = true;
    for (const auto& r : results) {
        if (r.pass)
            std::cout << "ok   " << r.name << " (" << r.cases << " cases)\n";
        else
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitDiscrepancy;
}

int cmd_examples(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, matrix] : paper_fixtures()) {
        const auto path = std::filesystem::path(dir) / (name + ".txt");
        std::ofstream out(path);
        out << matrix_to_text(matrix);
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic analysis of PT-matrices: finite multiplicative order and ASM-permutability"};
    app.require_subcommand(1);

    std::string analyze_path;
    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "Classify one matrix and decide its order");
    analyze->add_option("file", analyze_path, "matrix file (line 1: n; then n rows)")->required();
    analyze->add_flag("--brute-force", analyze_opt.brute_force, "cross-check with the brute-force order oracle");
    analyze->add_flag("--json", analyze_opt.json, "JSON output");

    int enum_n = 0;
    bool exotic_only = false;
    std::string format = "csv";
    auto* enumerate = app.add_subcommand("enumerate", "List finite-order elementary PT-matrices of size n");
    enumerate->add_option("--n", enum_n, "matrix size (2..14)")->required()->check(CLI::Range(2, 14));
    enumerate->add_flag("--exotic-only", exotic_only, "only orders no permutation of the same size attains");
    enumerate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string asm_path;
    auto* asmperm = app.add_subcommand("asm-perm", "Search for an ASM-ordering of a (0,1,-1)-matrix");
    asmperm->add_option("file", asm_path, "matrix file")->required();

    int max_n = 10, jobs = 1;
    auto* verify = app.add_subcommand("verify", "Run every theorem/oracle agreement sweep");
    verify->add_option("--max-n", max_n, "sweep matrices up to this size")->check(CLI::Range(2, 10));
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

    std::string out_dir = "fixtures";
    auto* examples = app.add_subcommand("examples", "Write the bundled example matrices as fixture files");
    examples->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_path, analyze_opt);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, exotic_only, format);
        if (asmperm->parsed()) return cmd_asm_perm(asm_path);
        if (verify->parsed()) return cmd_verify(max_n, jobs);
        if (examples->parsed()) return cmd_examples(out_dir);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
