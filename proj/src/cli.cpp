#include "neatflow/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "neatflow/errors.hpp"
#include "neatflow/outputs.hpp"

namespace neatflow {

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonFlags {
    std::string config_path;
    std::string task;
    std::string measure;
    double pressure = 0.15;
    std::size_t pop = 0;
    std::size_t gens = 0;
    std::size_t runs = 0;
    std::uint64_t seed = 0;
    std::string data;
    std::string out;
    int threads = 1;
    bool full_scale = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override it");
    cmd->add_option("--task", f.task, "cartpole, iris or wdbc");
    cmd->add_option("--measure", f.measure,
                    "perf, le_cost, le_ratio, ge_cost, ge_ratio, dc_cost, dc_ratio, "
                    "ec_cost, ec_ratio, ent_cost or ent_ratio");
    cmd->add_option("--pressure", f.pressure, "secondary-objective probability p");
    cmd->add_option("--pop", f.pop, "population size");
    cmd->add_option("--gens", f.gens, "generations per run");
    cmd->add_option("--runs", f.runs, "independent runs");
    cmd->add_option("--seed", f.seed, "base seed");
    cmd->add_option("--data", f.data, "dataset file (iris/wdbc tasks)");
    cmd->add_option("--out", f.out, "output directory")->required();
    cmd->add_option("--threads", f.threads, "evaluation threads");
    cmd->add_flag("--full-scale", f.full_scale,
                  "cart-pole at full scale (population 150, 5000 generations)");
}

ExperimentConfig assemble_config(const CLI::App* cmd, const CommonFlags& f) {
    ExperimentConfig cfg;
    if (!f.config_path.empty()) cfg = config_from_json(read_text_file(f.config_path));

    if (cmd->count("--task")) {
        const auto t = parse_task(f.task);
        if (!t) throw ConfigError("unknown task: " + f.task);
        cfg.task = *t;
    }
    if (cmd->count("--measure")) {
        const auto v = MeasureVariant::parse(f.measure);
        if (!v) throw ConfigError("unknown measure: " + f.measure);
        cfg.variant = *v;
    }
    if (cmd->count("--pressure")) cfg.pressure = f.pressure;
    if (cmd->count("--seed")) cfg.base_seed = f.seed;
    if (cmd->count("--runs")) cfg.runs = f.runs;
    if (cmd->count("--threads")) cfg.threads = f.threads;

    // task-scale defaults unless pinned by flag or config file
    const bool cfg_file = !f.config_path.empty();
    if (cmd->count("--pop"))
        cfg.population_size = f.pop;
    else if (!cfg_file)
        cfg.population_size =
            cfg.task == Task::cartpole ? (f.full_scale ? 150 : 50) : 10;
    if (cmd->count("--gens"))
        cfg.generations = f.gens;
    else if (!cfg_file)
        cfg.generations = cfg.task == Task::cartpole ? (f.full_scale ? 5000 : 500) : 1000;

    if (cmd->count("--data"))
        cfg.data_path = f.data;
    else if (cfg.data_path.empty())
        cfg.data_path = cfg.task == Task::wdbc ? "data/breast-cancer-wisconsin.data"
                                               : "data/iris.data";
    cfg.validate();
    return cfg;
}

void print_summary(std::ostream& os, const std::vector<SummaryRow>& rows) {
    os << "measure,pressure,mean_train,mean_test,mean_connections,mean_nodes,runs\n";
    for (const auto& r : rows)
        os << r.measure << ',' << format_double(r.pressure) << ','
           << format_double(r.mean_train) << ',' << format_double(r.mean_test) << ','
           << format_double(r.mean_connections) << ',' << format_double(r.mean_nodes)
           << ',' << r.runs << '\n';
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Evolves feed-forward networks under selection pressure toward "
                 "a balance of information flow and connection cost"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "run one measure configuration");
    add_common(run_cmd, run_flags);

    CommonFlags sweep_flags;
    std::vector<double> p_values{0.0, 0.15, 0.5};
    auto* sweep_cmd = app.add_subcommand("sweep", "run a selection-pressure sweep");
    add_common(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--p", p_values, "pressure values")->delimiter(',');

    std::string report_dir;
    auto* report_cmd =
        app.add_subcommand("report", "re-aggregate per-run files into summary.csv");
    report_cmd->add_option("dir", report_dir, "output directory of a previous run")
        ->required();

    std::string trace_dir;
    auto* trace_cmd =
        app.add_subcommand("trace", "concatenate trace files with a run column");
    trace_cmd->add_option("dir", trace_dir, "output directory of a previous run")
        ->required();

    // CLI11 wants argv-style reversed input
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run_cmd->parsed()) {
        const ExperimentConfig cfg = assemble_config(run_cmd, run_flags);
        const BatchResult batch = run_batch(cfg);
        write_outputs(batch, run_flags.out);
        print_summary(std::cout, {batch.summary()});
        std::cout << "wrote " << run_flags.out << "\n";
    } else if (sweep_cmd->parsed()) {
        const ExperimentConfig cfg = assemble_config(sweep_cmd, sweep_flags);
        const auto batches = pressure_sweep(cfg, p_values);
        write_sweep_outputs(batches, sweep_flags.out);
        std::vector<SummaryRow> rows;
        for (const auto& b : batches) rows.push_back(b.summary());
        print_summary(std::cout, rows);
        std::cout << "wrote " << sweep_flags.out << "\n";
    } else if (report_cmd->parsed()) {
        reaggregate(report_dir);
        std::cout << "rewrote " << (std::filesystem::path(report_dir) / "summary.csv").string()
                  << "\n";
    } else if (trace_cmd->parsed()) {
        concat_traces(trace_dir, std::cout);
    }
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    try {
        return dispatch(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args);
}

} // namespace neatflow
