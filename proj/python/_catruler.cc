// Copyright 2026 The catruler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <optional>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catruler/coherent_algebra.h"
#include "catruler/errors.h"
#include "catruler/fock_oracle.h"
#include "catruler/ideal_circuit.h"
#include "catruler/physical_realization.h"
#include "catruler/squeezed_baseline.h"
#include "catruler/validation.h"

namespace py = pybind11;
using namespace catruler;

namespace {

CoherentSuperposition from_pairs(const std::vector<std::pair<Complex, Complex>> &pairs) {
    std::vector<CoherentTerm> terms;
    for (const auto &[c, a] : pairs) {
        terms.push_back({c, a});
    }
    return CoherentSuperposition(std::move(terms));
}

std::vector<std::pair<Complex, Complex>> to_pairs(const CoherentSuperposition &s) {
    std::vector<std::pair<Complex, Complex>> out;
    for (const auto &t : s.terms()) {
        out.emplace_back(t.coefficient, t.amplitude);
    }
    return out;
}

py::dict curve_columns(const FringeCurve &curve) {
    size_t n = curve.samples.size();
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(curve.samples.size())};
    py::array_t<double> theta(shape), pp(shape), pm(shape), fringe(shape), complement(shape), leakage(shape);
    auto t = theta.mutable_unchecked<1>();
    auto a = pp.mutable_unchecked<1>();
    auto b = pm.mutable_unchecked<1>();
    auto f = fringe.mutable_unchecked<1>();
    auto c = complement.mutable_unchecked<1>();
    auto l = leakage.mutable_unchecked<1>();
    for (size_t k = 0; k < n; ++k) {
        const auto &s = curve.samples[k];
        t(k) = s.theta;
        a(k) = s.p_plus;
        b(k) = s.p_minus;
        f(k) = s.fringe;
        c(k) = s.fringe_complement;
        l(k) = s.leakage;
    }
    py::dict d;
    d["theta"] = theta;
    d["p_plus"] = pp;
    d["p_minus"] = pm;
    d["fringe"] = fringe;
    d["fringe_complement"] = complement;
    d["leakage"] = leakage;
    return d;
}

}  // namespace

PYBIND11_MODULE(_catruler, m) {
    m.doc() = "Cat-state interferometry: coherent-state algebra, circuits, and a number-basis oracle";

    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<TruncationError>(m, "TruncationError", numerical.ptr());

    py::class_<QuadratureConvention>(m, "QuadratureConvention")
        .def(py::init([](double mean_scale, double variance) { return QuadratureConvention{mean_scale, variance}; }),
             py::arg("mean_scale") = 1.0, py::arg("variance") = 0.25)
        .def_readwrite("mean_scale", &QuadratureConvention::mean_scale)
        .def_readwrite("variance", &QuadratureConvention::variance)
        .def("is_self_consistent", &QuadratureConvention::is_self_consistent);

    py::class_<CoherentSuperposition>(m, "CoherentSuperposition")
        .def(py::init(&from_pairs), py::arg("terms"), "Terms as (coefficient, amplitude) pairs.")
        .def_static("coherent", &CoherentSuperposition::coherent, py::arg("amplitude"))
        .def_property_readonly("terms", &to_pairs)
        .def("__len__", &CoherentSuperposition::size)
        .def("scaled", &CoherentSuperposition::scaled);

    py::enum_<IntegrationMethod>(m, "IntegrationMethod")
        .value("ADAPTIVE", IntegrationMethod::kAdaptive)
        .value("CLOSED_FORM", IntegrationMethod::kClosedForm);

    py::enum_<NormalizationMode>(m, "NormalizationMode")
        .value("CONDITIONAL", NormalizationMode::kConditional)
        .value("JOINT", NormalizationMode::kJoint);

    const QuadratureConvention standard = QuadratureConvention::standard();

    m.def("overlap", &overlap, py::arg("tau"), py::arg("gamma"));
    m.def("inner_product", py::overload_cast<const CoherentSuperposition &, const CoherentSuperposition &>(&inner_product));
    m.def("norm_squared", py::overload_cast<const CoherentSuperposition &>(&norm_squared));
    m.def("normalized", &normalized);
    m.def("displace", &displace, py::arg("state"), py::arg("d"));
    m.def("beamsplitter", &beamsplitter, py::arg("gamma_a"), py::arg("gamma_b"), py::arg("mix_angle"));
    m.def("quadrature_wavefunction", &quadrature_wavefunction, py::arg("gamma"), py::arg("x"),
          py::arg("conv") = standard);
    m.def("threshold_probability", &threshold_probability, py::arg("state"), py::arg("threshold"),
          py::arg("conv") = standard, py::arg("method") = IntegrationMethod::kAdaptive);

    m.def("hadamard", [](Complex c0, Complex c1) {
        auto q = hadamard({c0, c1, 1.0});
        return std::make_pair(q.c0, q.c1);
    });
    m.def("prepare_plus_cat", &prepare_plus_cat, py::arg("alpha"), py::arg("exact_norm") = true);
    m.def("propagate_exact", &propagate_exact, py::arg("state"), py::arg("theta"));
    m.def("phase_gate_error", &phase_gate_error, py::arg("beta"), py::arg("theta"));
    m.def("ideal_output", [](double alpha, double theta) {
        auto q = ideal_output(alpha, theta);
        return std::make_pair(q.c0, q.c1);
    }, py::arg("alpha"), py::arg("theta"));
    m.def("snr_ideal", &snr_ideal, py::arg("v_theta"), py::arg("alpha"));

    py::class_<SqueezedBaselineParams>(m, "SqueezedBaselineParams")
        .def(py::init([](double beta, double v_b_minus, double v_theta) {
                 SqueezedBaselineParams p{beta, v_b_minus, v_theta};
                 p.validate();
                 return p;
             }),
             py::arg("beta"), py::arg("v_b_minus"), py::arg("v_theta") = 0.0)
        .def_readwrite("beta", &SqueezedBaselineParams::beta)
        .def_readwrite("v_b_minus", &SqueezedBaselineParams::v_b_minus)
        .def_readwrite("v_theta", &SqueezedBaselineParams::v_theta);
    m.def("homodyne_samples", &homodyne_samples, py::arg("params"), py::arg("theta"), py::arg("seed"),
          py::arg("count"));
    m.def("snr_squeezed", &snr_squeezed, py::arg("params"));
    m.def("equal_power_params", &equal_power_params, py::arg("n_bar"));
    m.def("compare_snr", [](double n_bar, double v_theta) {
        auto c = compare_snr(n_bar, v_theta);
        py::dict d;
        d["n_bar"] = c.n_bar;
        d["snr_ideal"] = c.snr_ideal;
        d["snr_squeezed"] = c.snr_squeezed;
        d["ratio"] = c.ratio;
        d["resource_adjusted_ratio"] = c.resource_adjusted_ratio;
        return d;
    }, py::arg("n_bar"), py::arg("v_theta"));

    py::class_<RealizationParams>(m, "RealizationParams")
        .def(py::init([](double alpha, double theta, std::optional<double> phi) {
                 RealizationParams p = RealizationParams::with_default_mix(alpha, theta);
                 if (phi) {
                     p.phi = *phi;
                 }
                 p.validate();
                 return p;
             }),
             py::arg("alpha"), py::arg("theta") = 0.0, py::arg("phi") = py::none())
        .def_readwrite("alpha", &RealizationParams::alpha)
        .def_readwrite("phi", &RealizationParams::phi)
        .def_readwrite("theta", &RealizationParams::theta);

    m.def("output_state", [](const RealizationParams &p) {
        auto o = output_state(p);
        py::dict d;
        d["plus_state"] = o.plus_state;
        d["minus_state"] = o.minus_state;
        d["plus_weight"] = o.plus_weight;
        d["minus_weight"] = o.minus_weight;
        d["leakage"] = o.leakage;
        d["approximation_warning"] = o.approximation_warning;
        return d;
    }, py::arg("params"));
    m.def("cat_coefficients", [](const RealizationParams &p) {
        auto c = cat_coefficients(p);
        return std::make_pair(c.plus, c.minus);
    }, py::arg("params"));
    m.def("measurement_probabilities", [](const RealizationParams &p, const QuadratureConvention &conv,
                                          NormalizationMode mode, IntegrationMethod method) {
        auto r = measurement_probabilities(p, conv, mode, method);
        return std::make_pair(r.p_plus, r.p_minus);
    }, py::arg("params"), py::arg("conv") = standard, py::arg("mode") = NormalizationMode::kConditional,
       py::arg("method") = IntegrationMethod::kAdaptive);
    m.def("fringe_function", &fringe_function, py::arg("p_plus"), py::arg("p_minus"));
    m.def("fringe_scan", [](double alpha, double theta_min, double theta_max, int n_points, NormalizationMode mode,
                            int threads) {
        FringeCurve curve;
        {
            py::gil_scoped_release release;
            curve = fringe_scan(alpha, theta_min, theta_max, n_points, QuadratureConvention::standard(), mode,
                                threads);
        }
        return curve_columns(curve);
    }, py::arg("alpha"), py::arg("theta_min"), py::arg("theta_max"), py::arg("n_points"),
       py::arg("mode") = NormalizationMode::kConditional, py::arg("threads") = 1,
       "Scan the fringe; returns a dict of numpy columns.");
    m.def("fringe_spacing_physical", &fringe_spacing_physical, py::arg("alpha"), py::arg("wavelength"));
    m.def("phase_gate_period", &phase_gate_period, py::arg("alpha"));

    m.def("width_scaling", [](const std::vector<double> &alphas, int n_points, int threads) {
        WidthScaling w;
        {
            py::gil_scoped_release release;
            w = width_scaling(alphas, n_points, NormalizationMode::kConditional, threads);
        }
        py::dict d;
        d["alphas"] = w.alphas;
        d["widths"] = w.widths;
        d["ratios"] = w.ratios;
        d["exponent"] = w.exponent;
        return d;
    }, py::arg("alphas"), py::arg("n_points") = 801, py::arg("threads") = 1);
    m.def("quantum_ruler", [](double alpha, double wavelength, int n_points, int threads) {
        RulerReport r;
        {
            py::gil_scoped_release release;
            r = quantum_ruler(alpha, wavelength, n_points, threads);
        }
        py::dict d;
        d["standard_interval"] = r.standard_interval;
        d["ruler_interval"] = r.ruler_interval;
        d["scan_spacing"] = r.scan_spacing;
        d["scan_period"] = r.scan_period;
        d["relative_deviation"] = r.relative_deviation;
        return d;
    }, py::arg("alpha"), py::arg("wavelength"), py::arg("n_points") = 801, py::arg("threads") = 1);

    m.def("coherent_to_fock", [](Complex gamma, int n_max) {
        auto v = coherent_to_fock(gamma, n_max);
        auto c = v.coefficients();
        py::array_t<Complex> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(c.size())});
        std::copy(c.begin(), c.end(), out.mutable_data());
        return out;
    }, py::arg("gamma"), py::arg("n_max"));
    m.def("parity_distribution", [](const CoherentSuperposition &s, int n_max) {
        auto d = parity_distribution(superposition_to_fock(s, n_max));
        return std::make_pair(d.p_even, d.p_odd);
    }, py::arg("state"), py::arg("n_max"), "Even/odd photon-number probabilities of a superposition.");
    m.def("end_to_end_oracle", [](const RealizationParams &p, int n_max) {
        OracleResult o;
        {
            py::gil_scoped_release release;
            o = end_to_end_oracle(p, n_max);
        }
        py::dict d;
        d["p_plus"] = o.p_plus;
        d["p_minus"] = o.p_minus;
        d["plus_weight"] = o.plus_weight;
        d["minus_weight"] = o.minus_weight;
        d["leakage"] = o.leakage;
        d["truncation"] = o.truncation;
        return d;
    }, py::arg("params"), py::arg("n_max") = 0);
    m.def("validate_against_oracle", [](int cases, double max_alpha, std::uint64_t seed) {
        OracleValidation v;
        {
            py::gil_scoped_release release;
            v = validate_against_oracle(random_oracle_cases(cases, max_alpha, seed));
        }
        py::dict d;
        d["cases"] = v.cases.size();
        d["max_probability_deviation"] = v.max_probability_deviation;
        d["max_closure"] = v.max_closure;
        d["passed"] = v.passed();
        return d;
    }, py::arg("cases") = 50, py::arg("max_alpha") = 3.0, py::arg("seed") = 1);
}
