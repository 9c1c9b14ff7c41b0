#include <curvjet/cli.hpp>
#include <curvjet/errors.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw curvjet::InvalidSpec("cannot read spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOptions {
    std::string spec_path;
    int order = 4;
    std::string xi_range;
    std::string point_list;
    std::string format = "csv";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_points) {
    cmd->add_option("--spec", opts.spec_path, "JSON curve description")->required();
    cmd->add_option("--order", opts.order, "highest derivative order N")->check(CLI::Range(0, 8));
    auto* xi = cmd->add_option("--xi", opts.xi_range, "evaluation points as a:b:count");
    auto* pts = cmd->add_option("--points", opts.point_list, "comma-separated evaluation points");
    xi->excludes(pts);
    if (needs_points) {
        // exactly one of the two
        cmd->callback([xi, pts]() {
            if (xi->count() == 0 && pts->count() == 0)
                throw CLI::ValidationError("one of --xi or --points is required");
        });
    }
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "output path (stdout when omitted)");
}

curvjet::cli::JobConfig make_job(const CommonOptions& opts) {
    curvjet::cli::JobConfig job;
    job.order = opts.order;
    job.format = opts.format == "json" ? curvjet::cli::Format::Json : curvjet::cli::Format::Csv;
    job.out_path = opts.out_path;
    job.spec_text = read_file(opts.spec_path);
    if (!opts.xi_range.empty())
        job.points = curvjet::cli::parse_xi_range(opts.xi_range);
    else
        job.points = curvjet::cli::parse_point_list(opts.point_list);
    return job;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature derivative stacks of framed space curves"};
    app.require_subcommand(1);

    CommonOptions eval_opts;
    CLI::App* eval = app.add_subcommand("eval", "curvature, material and co-rotational stacks");
    add_common(eval, eval_opts, true);

    CommonOptions update_opts;
    bool update_verify = false;
    CLI::App* update = app.add_subcommand("update", "compose an incremental rotation field");
    add_common(update, update_opts, true);
    update->add_flag("--verify", update_verify, "append finite-difference error columns");

    int max_m = 6;
    CLI::App* tables = app.add_subcommand("tables", "print the pair-derivative coefficient tables");
    tables->add_option("max_m", max_m, "largest order (<= 12)");

    CommonOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "closed forms against the finite-difference oracle");
    add_common(verify, verify_opts, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables->parsed()) return curvjet::cli::run_tables(max_m, std::cout, std::cerr);
        if (eval->parsed()) {
            return curvjet::cli::run_to_destination(curvjet::cli::run_eval, make_job(eval_opts),
                                                    std::cerr);
        }
        if (update->parsed()) {
            curvjet::cli::JobConfig job = make_job(update_opts);
            job.verify = update_verify;
            return curvjet::cli::run_to_destination(curvjet::cli::run_update, job, std::cerr);
        }
        if (verify->parsed()) {
            return curvjet::cli::run_to_destination(curvjet::cli::run_verify, make_job(verify_opts),
                                                    std::cerr);
        }
    } catch (const curvjet::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
