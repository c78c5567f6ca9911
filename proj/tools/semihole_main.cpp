#include "semihole/errors.hpp"
#include "semihole/oracle.hpp"
#include "semihole/report.hpp"
#include "semihole/tables.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace semihole;

Mat load_matrix(const std::string& path) {
    if (path == "-") return parse_matrix_text(std::cin);
    return parse_matrix_file(path);
}

int env_threads() {
    const char* v = std::getenv("SEMIHOLE_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

Vec parse_int_list(const std::vector<std::string>& toks) {
    Vec out;
    for (const auto& t : toks) out.push_back(Int(t));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine semigroup hole and saturation analysis"};
    app.require_subcommand(1);

    std::string matrix_path, stages = "all", bound_str;
    bool as_json = false, no_timings = false;
    int threads = env_threads();

    auto* analyze = app.add_subcommand("analyze", "full hole/saturation analysis of a generator matrix");
    analyze->add_option("matrix", matrix_path, "matrix file (or - for stdin)")->required();
    analyze->add_option("--stages", stages, "comma list: hilbert,fundamental,finiteness,holes,saturation,minsets,all");
    analyze->add_option("--bound", bound_str, "degree bound for min-set search when the hole set is infinite");
    analyze->add_flag("--json", as_json, "machine-readable output");
    analyze->add_flag("--no-timings", no_timings, "omit timing lines");
    analyze->add_option("--threads", threads, "worker threads (default SEMIHOLE_THREADS or 1)");

    std::string sizes, margins;
    bool keep_redundant = false;
    auto* table = app.add_subcommand("table", "print the marginal matrix of a contingency table model");
    table->add_option("--sizes", sizes, "table sizes, e.g. 2x2x2x2")->required();
    table->add_option("--margins", margins, "margin subsets, e.g. 12,13,14,234")->required();
    table->add_flag("--keep-redundant", keep_redundant, "do not drop linearly dependent rows");

    std::vector<std::string> frob_args;
    auto* frob = app.add_subcommand("frobenius", "largest non-representable integer of coprime generators");
    frob->add_option("numbers", frob_args, "positive coprime integers")->required()->expected(-2);

    std::string hb_path;
    int hb_threads = env_threads();
    auto* hb = app.add_subcommand("hilbert", "Hilbert basis of the saturation of a generator matrix");
    hb->add_option("matrix", hb_path, "matrix file (or - for stdin)")->required();
    hb->add_option("--threads", hb_threads, "worker threads");

    std::string or_path;
    std::vector<std::string> lo_toks, hi_toks;
    auto* orc = app.add_subcommand("oracle", "brute-force census of a coordinate box");
    orc->add_option("matrix", or_path, "matrix file (or - for stdin)")->required();
    orc->add_option("--lo", lo_toks, "lower corner")->required()->expected(-1);
    orc->add_option("--hi", hi_toks, "upper corner")->required()->expected(-1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            RunOptions opt;
            opt.stages = parse_stages(stages);
            if (!bound_str.empty()) opt.bound = Int(bound_str);
            opt.threads = threads >= 1 ? threads : 1;
            SaturationReport rep = run_analysis(load_matrix(matrix_path), opt);
            std::cout << (as_json ? render_report_json(rep, !no_timings) : render_report_text(rep, !no_timings));
            return report_exit_code(rep);
        }
        if (*table) {
            Mat A = marginal_matrix(parse_model(sizes, margins));
            if (!keep_redundant) A = remove_redundant_rows(A);
            std::cout << render_matrix_text(A);
            return 0;
        }
        if (*frob) {
            std::vector<Int> nums;
            for (const auto& t : frob_args) nums.push_back(Int(t));
            std::cout << frobenius_number(nums) << "\n";
            return 0;
        }
        if (*hb) {
            SemigroupContext ctx = make_context(load_matrix(hb_path), hb_threads >= 1 ? hb_threads : 1);
            for (const auto& e : hilbert_basis_of_cone(ctx)) {
                std::cout << format_vec(e.v);
                if (e.is_generator) std::cout << " generator";
                if (e.is_hole) std::cout << " hole";
                std::cout << "\n";
            }
            return 0;
        }
        if (*orc) {
            Mat A = load_matrix(or_path);
            SemigroupContext ctx = make_context(A);
            Vec lo = parse_int_list(lo_toks), hi = parse_int_list(hi_toks);
            if (lo.size() != A.rows || hi.size() != A.rows) throw UsageError("box corners must have one entry per row");
            BoxCensus c = census(ctx, lo, hi);
            for (const auto& [p, cls] : c.classification) {
                std::cout << format_vec(p) << " ";
                switch (cls) {
                    case BoxCensus::Cls::IN_Q: std::cout << (c.sat.at(p) ? "IN_Q SAT" : "IN_Q NONSAT"); break;
                    case BoxCensus::Cls::HOLE: std::cout << "HOLE"; break;
                    default: std::cout << "OUTSIDE_QSAT";
                }
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const NotPointedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfiniteHolesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
