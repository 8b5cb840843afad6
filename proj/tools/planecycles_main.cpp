// planecycles command-line front end: load or generate instances, decide and
// construct plane cycles, validate cycle files, render figures.
//
// Exit codes: 0 decided/constructed, 1 decided-no (or invalid cycle for
// `validate`), 2 input or usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "planecycles/fpt.hpp"
#include "planecycles/generate.hpp"
#include "planecycles/model.hpp"
#include "planecycles/monotonicity.hpp"
#include "planecycles/nested.hpp"
#include "planecycles/oracle.hpp"
#include "planecycles/rainbow.hpp"
#include "planecycles/svg.hpp"

namespace pc = planecycles;

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw pc::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pc::Error("cannot open " + path + " for writing");
    out << content;
}

std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

pc::ColoredPointSet load_instance(const std::string& path) {
    return pc::parse_instance_text(read_file(path));
}

std::vector<int> load_first_cycle(const std::string& path) {
    std::istringstream in(read_file(path));
    auto cycles = pc::parse_cycles(in);
    if (cycles.empty()) throw pc::Error("no cycle found in " + path);
    return cycles.front();
}

std::string cycle_line(const pc::PlaneCycle& cycle) {
    std::ostringstream out;
    pc::write_cycles(out, std::vector<pc::PlaneCycle>{cycle});
    std::string line = out.str();
    if (!line.empty() && line.back() == '\n') line.pop_back();
    return line;
}

struct Report {
    Clock::time_point start = Clock::now();

    Report(const std::string& command, const std::string& instance_text) {
        std::cout << "command: " << command << '\n';
        std::cout << "instance: " << digest(instance_text) << '\n';
    }

    void line(const std::string& key, const std::string& value) {
        std::cout << key << ": " << value << '\n';
    }

    ~Report() {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        std::cout << "wall_ms: " << ms << '\n';
    }
};

int cmd_detect(const std::string& file) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    Report report("detect", text);
    const auto witness = pc::find_configuration(ps);
    if (!witness) {
        report.line("result", "none");
        return 1;
    }
    report.line("result", "found");
    std::ostringstream w;
    w << pc::to_string(witness->kind) << " u=" << witness->u << " u'=" << witness->u_prime
      << " v=" << witness->v << " v'=" << witness->v_prime;
    if (witness->kind == pc::ConfigKind::C4) w << " w=" << witness->w;
    report.line("witness", w.str());
    report.line("cycle", cycle_line(pc::witness_cycle(ps, *witness)));
    return 0;
}

int cmd_shorten(const std::string& file, const std::string& cycle_file, const std::string& out) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    auto raw = load_first_cycle(cycle_file);
    Report report("shorten", text);
    auto check = pc::validate_cycle(ps, raw);
    if (!check.ok()) throw pc::Error("input cycle invalid: " + check.violation->message);
    auto shorter = pc::shorten_cycle(ps, *check.cycle);
    report.line("input_length", std::to_string(check.cycle->length()));
    report.line("result", "shortened");
    report.line("length", std::to_string(shorter.length()));
    report.line("cycle", cycle_line(shorter));
    if (!out.empty()) write_file(out, cycle_line(shorter) + "\n");
    return 0;
}

int cmd_nested(const std::string& file, const std::string& blues, int t, const std::string& out) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    Report report("nested", text);
    std::vector<int> ring;
    if (blues == "auto") {
        ring = pc::suggest_blue_ring(ps);
    } else {
        std::istringstream in(blues);
        std::string tok;
        while (std::getline(in, tok, ',')) ring.push_back(std::stoi(tok));
    }
    auto cycle = pc::cycle_of_length(ps, ring, t);
    report.line("result", "constructed");
    report.line("length", std::to_string(cycle.length()));
    report.line("cycle", cycle_line(cycle));
    if (!out.empty()) write_file(out, cycle_line(cycle) + "\n");
    return 0;
}

int cmd_hamilton(const std::string& file, bool construct, int workers, const std::string& out) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    Report report("hamilton", text);
    if (const char* env = std::getenv("PLANECYCLES_WORKERS")) {
        if (workers <= 0) workers = std::atoi(env);
    }
    if (workers <= 0) workers = 1;
    auto decision = pc::decide_hamiltonian(ps, construct, workers);
    report.line("result", decision.yes ? "yes" : "no");
    if (decision.cycle) {
        report.line("cycle", cycle_line(*decision.cycle));
        if (!out.empty()) write_file(out, cycle_line(*decision.cycle) + "\n");
    }
    return decision.yes ? 0 : 1;
}

int cmd_enumerate(const std::string& file, int max_len) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    Report report("enumerate", text);
    auto inv = pc::enumerate_plane_cycles(ps, max_len);
    report.line("total", std::to_string(inv.total));
    report.line("rainbow", std::to_string(inv.rainbow));
    report.line("non_rainbow", std::to_string(inv.non_rainbow));
    for (const auto& [len, cycles] : inv.by_length) {
        report.line("count_length_" + std::to_string(len), std::to_string(cycles.size()));
    }
    for (const auto& [len, cycles] : inv.by_length) {
        for (const auto& c : cycles) report.line("cycle", cycle_line(c));
    }
    return 0;
}

int cmd_gen(const pc::GenSpec& spec, const std::string& out) {
    auto ps = pc::generate(spec);
    std::string text = pc::instance_text(ps);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file(out, text);
        Report report("gen", text);
        report.line("spec", spec.describe());
        report.line("result", "written");
        report.line("path", out);
    }
    return 0;
}

int cmd_validate(const std::string& file, const std::string& cycle_file) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    std::istringstream in(read_file(cycle_file));
    auto cycles = pc::parse_cycles(in);
    if (cycles.empty()) throw pc::Error("no cycle found in " + cycle_file);
    Report report("validate", text);
    bool all_ok = true;
    for (size_t i = 0; i < cycles.size(); ++i) {
        auto check = pc::validate_cycle(ps, cycles[i]);
        if (check.ok()) {
            const auto profile = pc::color_profile(ps, *check.cycle);
            report.line("cycle_" + std::to_string(i),
                        std::string("valid ") + (profile.rainbow ? "rainbow" : "non-rainbow"));
        } else {
            all_ok = false;
            report.line("cycle_" + std::to_string(i), "invalid: " + check.violation->message);
        }
    }
    report.line("result", all_ok ? "valid" : "invalid");
    return all_ok ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& cycle_file, const std::string& out) {
    const std::string text = read_file(file);
    auto ps = pc::parse_instance_text(text);
    std::optional<pc::PlaneCycle> cycle;
    if (!cycle_file.empty()) {
        auto raw = load_first_cycle(cycle_file);
        auto check = pc::validate_cycle(ps, raw);
        if (!check.ok()) throw pc::Error("cycle invalid: " + check.violation->message);
        cycle = check.cycle;
    }
    write_file(out, pc::render_svg(ps, cycle));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane cycles in geometric complete multipartite graphs"};
    app.require_subcommand(1);

    std::string file, cycle_file, out, blues = "auto";
    int t = 2, max_len = 12, workers = 0;
    bool construct = false;

    auto* detect = app.add_subcommand("detect", "decide non-rainbow plane cycle existence");
    detect->add_option("file", file)->required();

    auto* shorten = app.add_subcommand("shorten", "shorten a plane non-rainbow cycle");
    shorten->add_option("file", file)->required();
    shorten->add_option("--cycle", cycle_file)->required();
    shorten->add_option("-o,--out", out);

    auto* nested = app.add_subcommand("nested", "even-length cycles in nested instances");
    nested->add_option("file", file)->required();
    nested->add_option("--blues", blues);
    nested->add_option("--t", t)->required();
    nested->add_option("-o,--out", out);

    auto* hamilton = app.add_subcommand("hamilton", "plane Hamiltonian cycle decision");
    hamilton->add_option("file", file)->required();
    hamilton->add_flag("--construct", construct);
    hamilton->add_option("--workers", workers);
    hamilton->add_option("-o,--out", out);

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive plane cycle inventory");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--max-len", max_len);

    pc::GenSpec spec;
    std::string kind_str = "random";
    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--kind", kind_str);
    gen->add_option("--n", spec.n)->required();
    gen->add_option("--seed", spec.seed);
    gen->add_option("--colors", spec.color_count);
    gen->add_option("--range", spec.range);
    gen->add_option("--interior", spec.interior);
    gen->add_option("-o,--out", out);

    auto* validate = app.add_subcommand("validate", "validate cycle files");
    validate->add_option("file", file)->required();
    validate->add_option("--cycle", cycle_file)->required();

    auto* render = app.add_subcommand("render", "render an SVG figure");
    render->add_option("file", file)->required();
    render->add_option("--cycle", cycle_file);
    render->add_option("-o,--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (*detect) return cmd_detect(file);
        if (*shorten) return cmd_shorten(file, cycle_file, out);
        if (*nested) return cmd_nested(file, blues, t, out);
        if (*hamilton) return cmd_hamilton(file, construct, workers, out);
        if (*enumerate) return cmd_enumerate(file, max_len);
        if (*gen) {
            auto kind = pc::kind_from_name(kind_str);
            if (!kind) throw pc::Error("unknown generator kind: " + kind_str);
            spec.kind = *kind;
            return cmd_gen(spec, out);
        }
        if (*validate) return cmd_validate(file, cycle_file);
        if (*render) return cmd_render(file, cycle_file, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
