#include "neatflow/outputs.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "neatflow/errors.hpp"

namespace neatflow {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

namespace {

double parse_csv_double(const std::string& s, const std::string& file) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw IoError("bad number '" + s + "' in " + file);
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr const char* kSummaryHeader =
    "measure,pressure,mean_train,mean_test,mean_connections,mean_nodes,runs";
constexpr const char* kTraceHeader =
    "generation,best_train,global_efficiency,local_efficiency,"
    "eigenvector_centrality,entropy,connections,nodes";

std::string summary_line(const SummaryRow& row) {
    std::ostringstream os;
    os << row.measure << ',' << format_double(row.pressure) << ','
       << format_double(row.mean_train) << ',' << format_double(row.mean_test) << ','
       << format_double(row.mean_connections) << ',' << format_double(row.mean_nodes)
       << ',' << row.runs;
    return os.str();
}

std::string trace_line(const TraceRow& row) {
    std::ostringstream os;
    os << row.generation << ',' << format_double(row.best_train) << ','
       << format_double(row.global_efficiency) << ','
       << format_double(row.local_efficiency) << ','
       << format_double(row.eigenvector_centrality) << ','
       << format_double(row.entropy) << ',' << row.connections << ',' << row.nodes;
    return os.str();
}

void write_summary_csv(const fs::path& path, const std::vector<SummaryRow>& rows) {
    auto out = open_out(path);
    out << kSummaryHeader << '\n';
    for (const auto& row : rows) out << summary_line(row) << '\n';
}

void write_batch_files(const BatchResult& batch, const fs::path& dir,
                       const std::string& config_json) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    write_summary_csv(dir / "summary.csv", {batch.summary()});
    for (std::size_t k = 0; k < batch.runs.size(); ++k) {
        const auto& run = batch.runs[k];
        auto trace = open_out(dir / ("trace_run" + std::to_string(k) + ".csv"));
        trace << kTraceHeader << '\n';
        for (const auto& row : run.trace) trace << trace_line(row) << '\n';
        auto genome =
            open_out(dir / ("best_run" + std::to_string(k) + ".genome.json"));
        genome << genome_to_json(run.best, 2) << '\n';
    }
    auto cfg = open_out(dir / "config.json");
    cfg << config_json << '\n';
}

json cartpole_to_json(const ExperimentConfig& cfg) {
    return {{"gravity", cfg.cartpole.gravity},
            {"cart_mass", cfg.cartpole.cart_mass},
            {"pole_mass", cfg.cartpole.pole_mass},
            {"half_pole_length", cfg.cartpole.half_pole_length},
            {"force_magnitude", cfg.cartpole.force_magnitude},
            {"dt", cfg.cartpole.dt},
            {"angle_limit", cfg.cartpole.angle_limit},
            {"position_limit", cfg.cartpole.position_limit},
            {"episode_seconds", cfg.cartpole.episode_seconds},
            {"train_episodes", cfg.cartpole_train_episodes},
            {"test_episodes", cfg.cartpole_test_episodes}};
}

} // namespace

std::string config_to_json(const ExperimentConfig& cfg, bool pretty) {
    json j;
    j["task"] = task_name(cfg.task);
    j["measure"] = cfg.variant.name();
    j["pressure"] = cfg.pressure;
    j["population"] = cfg.population_size;
    j["generations"] = cfg.generations;
    j["runs"] = cfg.runs;
    j["seed"] = cfg.base_seed;
    j["data"] = cfg.data_path;
    j["initial_hidden"] = cfg.initial_hidden;
    j["mutation"] = {{"add_connection", cfg.mutation.p_add_connection},
                     {"delete_connection", cfg.mutation.p_delete_connection},
                     {"add_node", cfg.mutation.p_add_node},
                     {"delete_node", cfg.mutation.p_delete_node},
                     {"weight", cfg.mutation.p_weight},
                     {"bias", cfg.mutation.p_bias},
                     {"step", cfg.mutation.step},
                     {"weight_min", cfg.mutation.weight_min},
                     {"weight_max", cfg.mutation.weight_max}};
    j["speciation"] = {{"excess_disjoint_coeff", cfg.speciation.c_excess_disjoint},
                       {"weight_coeff", cfg.speciation.c_weight},
                       {"threshold", cfg.speciation.threshold}};
    j["reproduction"] = {{"survival_fraction", cfg.survival_fraction},
                         {"elite_count", cfg.elite_count}};
    j["selection"] = {{"tie_epsilon", cfg.tie_epsilon}};
    j["metrics"] = {{"ec_tolerance", cfg.metrics.ec_tolerance},
                    {"ec_max_iterations", cfg.metrics.ec_max_iterations}};
    j["cartpole"] = cartpole_to_json(cfg);
    j["split"] = {{"train_fraction", cfg.split_fraction},
                  {"stratified", cfg.split_stratified}};
    return j.dump(pretty ? 2 : -1);
}

ExperimentConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config json: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        if (j.contains("task")) {
            const auto t = parse_task(j["task"].get<std::string>());
            if (!t) throw ConfigError("unknown task: " + j["task"].get<std::string>());
            cfg.task = *t;
        }
        if (j.contains("measure")) {
            const auto v = MeasureVariant::parse(j["measure"].get<std::string>());
            if (!v)
                throw ConfigError("unknown measure: " + j["measure"].get<std::string>());
            cfg.variant = *v;
        }
        if (j.contains("pressure")) cfg.pressure = j["pressure"].get<double>();
        if (j.contains("population"))
            cfg.population_size = j["population"].get<std::size_t>();
        if (j.contains("generations"))
            cfg.generations = j["generations"].get<std::size_t>();
        if (j.contains("runs")) cfg.runs = j["runs"].get<std::size_t>();
        if (j.contains("seed")) cfg.base_seed = j["seed"].get<std::uint64_t>();
        if (j.contains("data")) cfg.data_path = j["data"].get<std::string>();
        if (j.contains("initial_hidden"))
            cfg.initial_hidden = j["initial_hidden"].get<int>();
        if (j.contains("mutation")) {
            const auto& m = j["mutation"];
            if (m.contains("add_connection"))
                cfg.mutation.p_add_connection = m["add_connection"].get<double>();
            if (m.contains("delete_connection"))
                cfg.mutation.p_delete_connection = m["delete_connection"].get<double>();
            if (m.contains("add_node"))
                cfg.mutation.p_add_node = m["add_node"].get<double>();
            if (m.contains("delete_node"))
                cfg.mutation.p_delete_node = m["delete_node"].get<double>();
            if (m.contains("weight")) cfg.mutation.p_weight = m["weight"].get<double>();
            if (m.contains("bias")) cfg.mutation.p_bias = m["bias"].get<double>();
            if (m.contains("step")) cfg.mutation.step = m["step"].get<double>();
            if (m.contains("weight_min"))
                cfg.mutation.weight_min = m["weight_min"].get<double>();
            if (m.contains("weight_max"))
                cfg.mutation.weight_max = m["weight_max"].get<double>();
        }
        if (j.contains("speciation")) {
            const auto& s = j["speciation"];
            if (s.contains("excess_disjoint_coeff"))
                cfg.speciation.c_excess_disjoint =
                    s["excess_disjoint_coeff"].get<double>();
            if (s.contains("weight_coeff"))
                cfg.speciation.c_weight = s["weight_coeff"].get<double>();
            if (s.contains("threshold"))
                cfg.speciation.threshold = s["threshold"].get<double>();
        }
        if (j.contains("reproduction")) {
            const auto& r = j["reproduction"];
            if (r.contains("survival_fraction"))
                cfg.survival_fraction = r["survival_fraction"].get<double>();
            if (r.contains("elite_count"))
                cfg.elite_count = r["elite_count"].get<std::size_t>();
        }
        if (j.contains("selection") && j["selection"].contains("tie_epsilon"))
            cfg.tie_epsilon = j["selection"]["tie_epsilon"].get<double>();
        if (j.contains("metrics")) {
            const auto& m = j["metrics"];
            if (m.contains("ec_tolerance"))
                cfg.metrics.ec_tolerance = m["ec_tolerance"].get<double>();
            if (m.contains("ec_max_iterations"))
                cfg.metrics.ec_max_iterations = m["ec_max_iterations"].get<int>();
        }
        if (j.contains("cartpole")) {
            const auto& c = j["cartpole"];
            auto set = [&](const char* key, double& field) {
                if (c.contains(key)) field = c[key].get<double>();
            };
            set("gravity", cfg.cartpole.gravity);
            set("cart_mass", cfg.cartpole.cart_mass);
            set("pole_mass", cfg.cartpole.pole_mass);
            set("half_pole_length", cfg.cartpole.half_pole_length);
            set("force_magnitude", cfg.cartpole.force_magnitude);
            set("dt", cfg.cartpole.dt);
            set("angle_limit", cfg.cartpole.angle_limit);
            set("position_limit", cfg.cartpole.position_limit);
            set("episode_seconds", cfg.cartpole.episode_seconds);
            if (c.contains("train_episodes"))
                cfg.cartpole_train_episodes = c["train_episodes"].get<int>();
            if (c.contains("test_episodes"))
                cfg.cartpole_test_episodes = c["test_episodes"].get<int>();
        }
        if (j.contains("split")) {
            const auto& s = j["split"];
            if (s.contains("train_fraction"))
                cfg.split_fraction = s["train_fraction"].get<double>();
            if (s.contains("stratified"))
                cfg.split_stratified = s["stratified"].get<bool>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config json: ") + e.what());
    }
    return cfg;
}

void write_outputs(const BatchResult& batch, const std::string& dir) {
    write_batch_files(batch, dir, config_to_json(batch.config));
}

void write_sweep_outputs(const std::vector<BatchResult>& batches,
                         const std::string& dir) {
    if (batches.empty()) throw ConfigError("empty sweep");
    const fs::path root(dir);
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) throw IoError("cannot create " + root.string() + ": " + ec.message());

    std::vector<SummaryRow> rows;
    json sweep = json::parse(config_to_json(batches.front().config));
    sweep["sweep_pressures"] = json::array();
    for (const auto& batch : batches) {
        sweep["sweep_pressures"].push_back(batch.config.pressure);
        const fs::path sub = root / ("p_" + format_double(batch.config.pressure));
        write_batch_files(batch, sub, config_to_json(batch.config));
        rows.push_back(batch.summary());
    }
    write_summary_csv(root / "summary.csv", rows);
    auto cfg = open_out(root / "config.json");
    cfg << sweep.dump(2) << '\n';
}

std::vector<SummaryRow> read_summary_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty summary: " + path);
    std::vector<SummaryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 7) throw IoError("malformed summary row in " + path);
        SummaryRow row;
        row.measure = f[0];
        row.pressure = parse_csv_double(f[1], path);
        row.mean_train = parse_csv_double(f[2], path);
        row.mean_test = parse_csv_double(f[3], path);
        row.mean_connections = parse_csv_double(f[4], path);
        row.mean_nodes = parse_csv_double(f[5], path);
        row.runs = static_cast<std::size_t>(parse_csv_double(f[6], path));
        rows.push_back(row);
    }
    return rows;
}

std::vector<TraceRow> read_trace_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty trace: " + path);
    std::vector<TraceRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 8) throw IoError("malformed trace row in " + path);
        TraceRow row;
        row.generation = static_cast<std::size_t>(parse_csv_double(f[0], path));
        row.best_train = parse_csv_double(f[1], path);
        row.global_efficiency = parse_csv_double(f[2], path);
        row.local_efficiency = parse_csv_double(f[3], path);
        row.eigenvector_centrality = parse_csv_double(f[4], path);
        row.entropy = parse_csv_double(f[5], path);
        row.connections = static_cast<int>(parse_csv_double(f[6], path));
        row.nodes = static_cast<int>(parse_csv_double(f[7], path));
        rows.push_back(row);
    }
    return rows;
}

namespace {

SummaryRow reaggregate_batch(const fs::path& dir, const ExperimentConfig& cfg) {
    const EvalContext ctx = build_context(cfg);
    SummaryRow row;
    row.measure = cfg.variant.name();
    row.pressure = cfg.pressure;
    row.runs = cfg.runs;
    for (std::size_t k = 0; k < cfg.runs; ++k) {
        const fs::path path = dir / ("best_run" + std::to_string(k) + ".genome.json");
        const Genome best = genome_from_json(read_file(path));
        row.mean_train += evaluate(best, ctx).performance;
        row.mean_test += test_performance(best, ctx);
        row.mean_connections += static_cast<double>(best.enabled_connection_count());
        row.mean_nodes += static_cast<double>(best.nodes.size());
    }
    const double n = static_cast<double>(cfg.runs);
    row.mean_train /= n;
    row.mean_test /= n;
    row.mean_connections /= n;
    row.mean_nodes /= n;
    return row;
}

} // namespace

void reaggregate(const std::string& dir) {
    const fs::path root(dir);
    const std::string cfg_text = read_file(root / "config.json");
    json j;
    try {
        j = json::parse(cfg_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config json: ") + e.what());
    }
    if (j.contains("sweep_pressures")) {
        std::vector<SummaryRow> rows;
        for (const auto& p : j["sweep_pressures"]) {
            const fs::path sub = root / ("p_" + format_double(p.get<double>()));
            const ExperimentConfig cfg =
                config_from_json(read_file(sub / "config.json"));
            rows.push_back(reaggregate_batch(sub, cfg));
            write_summary_csv(sub / "summary.csv", {rows.back()});
        }
        write_summary_csv(root / "summary.csv", rows);
        return;
    }
    const ExperimentConfig cfg = config_from_json(cfg_text);
    write_summary_csv(root / "summary.csv", {reaggregate_batch(root, cfg)});
}

void concat_traces(const std::string& dir, std::ostream& out) {
    const fs::path root(dir);
    json j;
    try {
        j = json::parse(read_file(root / "config.json"));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config json: ") + e.what());
    }
    const bool sweep = j.contains("sweep_pressures");
    out << (sweep ? "pressure,run," : "run,") << kTraceHeader << '\n';

    auto emit_batch = [&](const fs::path& batch_dir, const std::string& prefix) {
        const ExperimentConfig cfg =
            config_from_json(read_file(batch_dir / "config.json"));
        for (std::size_t k = 0; k < cfg.runs; ++k) {
            const auto rows = read_trace_csv(
                (batch_dir / ("trace_run" + std::to_string(k) + ".csv")).string());
            for (const auto& row : rows)
                out << prefix << k << ',' << trace_line(row) << '\n';
        }
    };

    if (sweep) {
        for (const auto& p : j["sweep_pressures"]) {
            const std::string tag = format_double(p.get<double>());
            emit_batch(root / ("p_" + tag), tag + ",");
        }
    } else {
        emit_batch(root, "");
    }
}

} // namespace neatflow
