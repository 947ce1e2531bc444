#include "wordsym/analysis.hpp"
#include "wordsym/errors.hpp"
#include "wordsym/rauzy.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

namespace py = pybind11;
using namespace wordsym;

namespace {

class PySession {
public:
    PySession(const std::string& word, const std::string& morphism, const std::string& group,
              const std::string& seed, int n_max, const std::string& mode) {
        AnalysisConfig cfg;
        cfg.word_name = word;
        cfg.morphism_text = morphism;
        cfg.group_text = group;
        cfg.seed_letter = seed;
        cfg.n_max = n_max;
        if (mode == "exact")
            cfg.mode = FrequencyMode::exact;
        else if (mode == "approx")
            cfg.mode = FrequencyMode::approx;
        else
            throw ParseError("unknown mode '" + mode + "'");
        session_ = std::make_unique<AnalysisSession>(cfg);
    }

    std::string name() const { return session_->name(); }
    int n_max() const { return session_->n_max(); }
    int alphabet_size() const { return session_->morphism().alphabet_size(); }

    size_t complexity(int n) const { return session_->language().complexity(n); }
    long long delta_complexity(int n) const { return session_->language().delta_complexity(n); }

    std::vector<std::string> factors(int n) const {
        std::vector<std::string> out;
        for (const Word& w : session_->language().factors(n))
            out.push_back(session_->morphism().alphabet().display(w));
        return out;
    }

    py::dict special(int n) const {
        auto names = [&](const std::vector<Word>& ws) {
            std::vector<std::string> out;
            for (const Word& w : ws) out.push_back(session_->morphism().alphabet().display(w));
            return out;
        };
        py::dict d;
        d["ls"] = names(session_->language().left_special(n));
        d["rs"] = names(session_->language().right_special(n));
        d["bs"] = names(session_->language().bispecial(n));
        return d;
    }

    py::tuple frequency(const std::string& factor) {
        Word w = session_->morphism().alphabet().parse(factor);
        FrequencyValue fv = session_->engine().frequency(w);
        return py::make_tuple(fv.str(), static_cast<double>(fv.value()));
    }

    std::vector<std::pair<std::string, double>> distinct_frequencies(int n) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& fv : session_->engine().distinct_frequencies(n).values)
            out.emplace_back(fv.str(), static_cast<double>(fv.value()));
        return out;
    }

    py::dict palindromic_complexity(int n) const {
        py::dict d;
        for (const Symmetry& theta : session_->group().involutive_antimorphisms())
            d[py::str(theta.to_text(session_->morphism().alphabet()))] =
                theta_palindromic_complexity(session_->language(), theta, n);
        return d;
    }

    py::dict bound_report(int n) const {
        BoundReport r = session_->report(n);
        auto bound = [](const BoundValue& b) {
            py::dict d;
            d["status"] = applicability_name(b.status);
            d["value"] = to_string(b.value);
            d["attained"] = b.attained;
            return d;
        };
        py::dict d;
        d["n"] = r.n;
        d["complexity"] = r.complexity;
        d["delta_c"] = r.delta_c;
        d["x"] = r.x;
        d["y"] = r.y;
        d["distinct"] = r.distinct_count;
        d["boshernitzan"] = bound(r.boshernitzan);
        d["reversal"] = bound(r.reversal);
        d["group"] = bound(r.group);
        d["holds"] = r.holds();
        return d;
    }

    std::string graph_dot(int n, bool reduced, bool labels) {
        RauzyGraph g = labels ? build_rauzy(session_->language(), n, session_->engine())
                              : build_rauzy(session_->language(), n);
        if (!reduced) return export_dot(g, session_->morphism().alphabet(), labels);
        ReducedRauzyGraph rg = labels ? reduce(g, session_->language(), session_->engine())
                                      : reduce(g, session_->language());
        return export_dot(rg, session_->morphism().alphabet(), labels);
    }

    std::vector<py::dict> verify(int cap) {
        std::vector<py::dict> out;
        for (const auto& v : session_->verify(cap)) {
            py::dict d;
            d["check"] = v.check;
            d["pass"] = v.pass;
            d["detail"] = v.detail;
            out.push_back(std::move(d));
        }
        return out;
    }

    std::string report_json(int n_lo, int n_hi) { return session_->report_json(n_lo, n_hi); }
    std::string report_csv(int n_lo, int n_hi) const { return session_->report_csv(n_lo, n_hi); }

    int recurrence_N() const { return session_->evaluator().recurrence_N(); }
    bool invariant() const { return session_->evaluator().invariant(); }

    std::string minimal_polynomial() const {
        return session_->engine().field()->minpoly_string();
    }
    py::tuple eigenvalue() {
        if (session_->engine().mode() == FrequencyMode::exact) {
            const FieldElement& lam = session_->engine().lambda();
            return py::make_tuple(lam.str(), static_cast<double>(lam.to_long_double()));
        }
        double v = static_cast<double>(session_->engine().lambda_approx());
        return py::make_tuple(py::str(std::to_string(v)), v);
    }

private:
    std::unique_ptr<AnalysisSession> session_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "factor frequencies, symmetries, and Rauzy graphs of substitution fixed points";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("corpus_names", &corpus_names, "names of the built-in corpus words");

    py::class_<PySession>(m, "Session")
        .def(py::init<const std::string&, const std::string&, const std::string&,
                      const std::string&, int, const std::string&>(),
             py::arg("word") = "", py::arg("morphism") = "", py::arg("group") = "",
             py::arg("seed") = "", py::arg("n_max") = 40, py::arg("mode") = "exact")
        .def_property_readonly("name", &PySession::name)
        .def_property_readonly("n_max", &PySession::n_max)
        .def_property_readonly("alphabet_size", &PySession::alphabet_size)
        .def_property_readonly("recurrence_N", &PySession::recurrence_N)
        .def_property_readonly("invariant", &PySession::invariant)
        .def("complexity", &PySession::complexity, py::arg("n"))
        .def("delta_complexity", &PySession::delta_complexity, py::arg("n"))
        .def("factors", &PySession::factors, py::arg("n"))
        .def("special", &PySession::special, py::arg("n"))
        .def("frequency", &PySession::frequency, py::arg("factor"),
             "exact/serialized value and a float approximation")
        .def("distinct_frequencies", &PySession::distinct_frequencies, py::arg("n"))
        .def("palindromic_complexity", &PySession::palindromic_complexity, py::arg("n"))
        .def("bound_report", &PySession::bound_report, py::arg("n"))
        .def("graph_dot", &PySession::graph_dot, py::arg("n"), py::arg("reduced") = true,
             py::arg("labels") = true)
        .def("verify", &PySession::verify, py::arg("cap") = 30)
        .def("report_json", &PySession::report_json, py::arg("n_lo"), py::arg("n_hi"))
        .def("report_csv", &PySession::report_csv, py::arg("n_lo"), py::arg("n_hi"))
        .def("minimal_polynomial", &PySession::minimal_polynomial)
        .def("eigenvalue", &PySession::eigenvalue);
}
