#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "peakcell/analysis.hpp"
#include "peakcell/errors.hpp"
#include "peakcell/ingest.hpp"
#include "peakcell/render.hpp"
#include "peakcell/smooth.hpp"

namespace py = pybind11;
using namespace peakcell;

namespace {

std::vector<double> to_vector(std::span<const double> view) {
    return {view.begin(), view.end()};
}

std::vector<int> to_ints(std::span<const std::uint8_t> view) {
    return {view.begin(), view.end()};
}

Diagram iterate_values(const std::vector<double>& values, std::size_t steps) {
    return iterate(Series(values), steps);
}

} // namespace

PYBIND11_MODULE(peakcell, m) {
    m.doc() = "Iterative peak smoothing: cellular diagrams and feature extraction";

    // Translators run newest-first, so the broad mapping goes in first
    // and IoError gets matched before its base class.
    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<StepResult>(m, "StepResult")
        .def_readonly("values", &StepResult::values)
        .def_readonly("mask", &StepResult::mask)
        .def_readonly("step_index", &StepResult::step_index);

    py::class_<Diagram>(m, "Diagram")
        .def_property_readonly("steps", &Diagram::steps)
        .def("__len__", &Diagram::size)
        .def_property_readonly("size", &Diagram::size)
        .def("source", [](const Diagram& d) { return to_vector(d.source().span()); })
        .def("layer", [](const Diagram& d, std::size_t k) { return to_vector(d.layer(k)); },
             py::arg("k"), "Layer k, where layer(0) is the source series")
        .def("mask_row", [](const Diagram& d, std::size_t k) { return to_ints(d.mask_row(k)); },
             py::arg("k"), "Mask row for step k in [1, steps]; 1 = black");

    m.def("smooth_step",
          [](const std::vector<double>& values, int step_index) {
              return smooth_step(values, step_index);
          },
          py::arg("values"), py::arg("step_index") = 1,
          "One smoothing step over a sequence");
    m.def("iterate", &iterate_values, py::arg("values"), py::arg("steps"),
          "Build the cellular diagram for `steps` smoothing steps");
    m.def("is_fixed_point",
          [](const std::vector<double>& values) { return is_fixed_point(values); },
          py::arg("values"));

    py::class_<PeriodEstimate>(m, "PeriodEstimate")
        .def_readonly("period", &PeriodEstimate::period)
        .def_readonly("strength", &PeriodEstimate::strength)
        .def("__repr__", [](const PeriodEstimate& p) {
            return "PeriodEstimate(period=" + std::to_string(p.period) +
                   ", strength=" + std::to_string(p.strength) + ")";
        });
    py::class_<InstabilityInterval>(m, "InstabilityInterval")
        .def_readonly("start", &InstabilityInterval::start)
        .def_readonly("end", &InstabilityInterval::end)
        .def_readonly("score", &InstabilityInterval::score)
        .def("__repr__", [](const InstabilityInterval& v) {
            return "InstabilityInterval(start=" + std::to_string(v.start) +
                   ", end=" + std::to_string(v.end) +
                   ", score=" + std::to_string(v.score) + ")";
        });
    py::enum_<Convexity>(m, "Convexity")
        .value("FIXED_POINT", Convexity::kFixedPoint)
        .value("STRICTLY_CONCAVE_INTERIOR", Convexity::kStrictlyConcaveInterior)
        .value("MIXED", Convexity::kMixed);
    py::class_<FeatureReport>(m, "FeatureReport")
        .def_readonly("periods", &FeatureReport::periods)
        .def_readonly("instabilities", &FeatureReport::instabilities)
        .def_readonly("convexity", &FeatureReport::convexity);

    m.def("depth_profile",
          [](const Diagram& d) { return depth_profile(d).depths; }, py::arg("diagram"),
          "Per-column count of black cells");
    m.def("estimate_periods", &estimate_periods, py::arg("diagram"),
          py::arg("max_candidates") = 8);
    m.def("detect_instability", &detect_instability, py::arg("diagram"),
          py::arg("window") = 16, py::arg("threshold") = 0.5);
    m.def("classify_convexity", &classify_convexity, py::arg("diagram"));
    m.def("analyze",
          [](const Diagram& d, std::size_t max_candidates, std::size_t window,
             double threshold) {
              return analyze(d, AnalysisOptions{max_candidates, window, threshold});
          },
          py::arg("diagram"), py::arg("max_candidates") = 8, py::arg("window") = 16,
          py::arg("threshold") = 0.5);

    py::enum_<ImageFormat>(m, "ImageFormat")
        .value("PBM", ImageFormat::kPbm)
        .value("PGM", ImageFormat::kPgm)
        .value("PNG", ImageFormat::kPng);
    m.def("render_raster",
          [](const Diagram& d, ImageFormat format, int cell_size, bool composite,
             int panel_height) {
              RenderSpec spec{format, cell_size, composite, panel_height};
              const auto bytes = render_raster(d, spec);
              return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
          },
          py::arg("diagram"), py::arg("format") = ImageFormat::kPbm,
          py::arg("cell_size") = 1, py::arg("composite") = false,
          py::arg("panel_height") = 64);
    m.def("render_ascii", &render_ascii, py::arg("diagram"));

    py::enum_<SignalKind>(m, "SignalKind")
        .value("SIN", SignalKind::kSin)
        .value("X_SIN", SignalKind::kXSin)
        .value("SIN_PLUS_COS3X", SignalKind::kSinPlusCos3x)
        .value("PARABOLA", SignalKind::kParabola)
        .value("SPIKE", SignalKind::kSpike)
        .value("SAWTOOTH", SignalKind::kSawtooth)
        .value("WEEKLY", SignalKind::kWeekly)
        .value("CONSTANT", SignalKind::kConstant)
        .value("LINEAR", SignalKind::kLinear);
    m.def("generate",
          [](SignalKind kind, std::size_t n, double scale) {
              return generate(SyntheticSpec{kind, n, scale}).values();
          },
          py::arg("kind"), py::arg("n"), py::arg("scale") = kDefaultScale,
          "Synthetic test series as a list of floats");
    m.def("parse_csv",
          [](const std::string& text, std::size_t column) {
              return parse_csv(std::string_view(text), column).values();
          },
          py::arg("text"), py::arg("column") = 0);
    m.def("export_mask_csv", &export_mask_csv, py::arg("diagram"));
    m.def("export_series_csv",
          [](const std::vector<double>& values) { return export_series_csv(Series(values)); },
          py::arg("values"));
}
