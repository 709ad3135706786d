#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <span>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "peakcell/analysis.hpp"
#include "peakcell/errors.hpp"
#include "peakcell/ingest.hpp"
#include "peakcell/render.hpp"
#include "peakcell/smooth.hpp"

namespace {

using namespace peakcell;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::string text{std::istreambuf_iterator<char>(std::cin),
                         std::istreambuf_iterator<char>{}};
        if (std::cin.bad()) throw IoError("failed to read standard input");
        return text;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{}};
    if (in.bad()) throw IoError("failed to read input file: " + path);
    return text;
}

void write_output(const std::string& path, std::span<const std::uint8_t> bytes) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        if (!std::cout) throw IoError("failed to write standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("failed to write output file: " + path);
}

void write_output(const std::string& path, const std::string& text) {
    write_output(path, std::span<const std::uint8_t>(
                           reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::size_t resolve_steps(std::int64_t requested, std::size_t n) {
    if (requested >= 1) return static_cast<std::size_t>(requested);
    return std::min<std::size_t>(n, 256);
}

struct IngestOptions {
    std::string input = "-";
    std::size_t column = 0;
    std::int64_t steps = -1;  // -1: min(n, 256)
};

void add_ingest_options(CLI::App& cmd, IngestOptions& opts) {
    cmd.add_option("-i,--input", opts.input, "Input CSV path, or - for stdin")
        ->capture_default_str();
    cmd.add_option("-c,--column", opts.column, "Zero-based CSV column")
        ->capture_default_str();
    cmd.add_option("-k,--steps", opts.steps, "Smoothing steps (default: min(n, 256))")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 32));
}

Diagram load_diagram(const IngestOptions& opts) {
    const Series series = parse_csv(std::string_view(read_input(opts.input)), opts.column);
    return iterate(series, resolve_steps(opts.steps, series.size()));
}

int run_generate(const SyntheticSpec& spec, const std::string& output) {
    write_output(output, export_series_csv(generate(spec)));
    return kExitOk;
}

int run_render(const IngestOptions& ingest, const RenderSpec& spec, const std::string& output) {
    const Diagram diagram = load_diagram(ingest);
    if (spec.format == ImageFormat::kAscii) {
        write_output(output, render_ascii(diagram));
    } else {
        write_output(output, render_raster(diagram, spec));
    }
    return kExitOk;
}

int run_analyze(const IngestOptions& ingest, const AnalysisOptions& options,
                const std::string& output) {
    const Diagram diagram = load_diagram(ingest);
    const FeatureReport report = analyze(diagram, options);

    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["n"] = diagram.size();
    doc["steps"] = diagram.steps();
    doc["convexity"] = to_string(report.convexity);
    doc["periods"] = nlohmann::ordered_json::array();
    for (const auto& p : report.periods)
        doc["periods"].push_back({{"period", p.period}, {"strength", p.strength}});
    doc["instabilities"] = nlohmann::ordered_json::array();
    for (const auto& v : report.instabilities)
        doc["instabilities"].push_back({{"start", v.start}, {"end", v.end}, {"score", v.score}});

    write_output(output, doc.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterative peak smoothing: cellular diagrams and feature extraction"};
    app.require_subcommand(1);

    const std::map<std::string, SignalKind> kind_names{
        {"sin", SignalKind::kSin},           {"xsin", SignalKind::kXSin},
        {"sincos3x", SignalKind::kSinPlusCos3x}, {"parabola", SignalKind::kParabola},
        {"spike", SignalKind::kSpike},       {"sawtooth", SignalKind::kSawtooth},
        {"weekly", SignalKind::kWeekly},     {"constant", SignalKind::kConstant},
        {"linear", SignalKind::kLinear},
    };
    const std::map<std::string, ImageFormat> format_names{
        {"pbm", ImageFormat::kPbm},
        {"pgm", ImageFormat::kPgm},
        {"png", ImageFormat::kPng},
        {"ascii", ImageFormat::kAscii},
    };

    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic series as CSV");
    SyntheticSpec synth;
    synth.n = 100;
    std::string generate_output = "-";
    generate_cmd->add_option("--kind", synth.kind, "Signal shape")
        ->required()
        ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case));
    generate_cmd->add_option("-n,--n", synth.n, "Sample count")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate_cmd->add_option("--scale", synth.scale, "X-axis step for trigonometric kinds")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate_cmd->add_option("-o,--output", generate_output, "Output path, or - for stdout")
        ->capture_default_str();

    auto* render_cmd = app.add_subcommand("render", "Render the cellular diagram of a series");
    IngestOptions render_ingest;
    RenderSpec render_spec;
    std::string render_output = "-";
    add_ingest_options(*render_cmd, render_ingest);
    render_cmd->add_option("-f,--format", render_spec.format, "Image format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->default_str("pbm");
    render_cmd->add_option("--cell-size", render_spec.cell_size, "Pixels per cell")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    render_cmd->add_flag("--composite", render_spec.composite,
                         "Prepend a panel plotting the source series");
    render_cmd->add_option("--panel-height", render_spec.panel_height,
                           "Composite panel height in cells")
        ->capture_default_str()
        ->check(CLI::Range(8, 1 << 16));
    render_cmd->add_option("-o,--output", render_output, "Output path, or - for stdout")
        ->capture_default_str();

    auto* analyze_cmd = app.add_subcommand("analyze", "Extract features as a JSON report");
    IngestOptions analyze_ingest;
    AnalysisOptions analysis;
    std::string analyze_output = "-";
    add_ingest_options(*analyze_cmd, analyze_ingest);
    analyze_cmd->add_option("--max-candidates", analysis.max_candidates,
                            "Maximum period estimates")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--window", analysis.window, "Instability window length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--threshold", analysis.threshold,
                            "Black-density threshold in (0, 1]")
        ->capture_default_str()
        ->check(CLI::Range(1e-9, 1.0));
    analyze_cmd->add_option("-o,--output", analyze_output, "Output path, or - for stdout")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate_cmd->parsed()) return run_generate(synth, generate_output);
        if (render_cmd->parsed()) return run_render(render_ingest, render_spec, render_output);
        return run_analyze(analyze_ingest, analysis, analyze_output);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitIo;
    }
}
