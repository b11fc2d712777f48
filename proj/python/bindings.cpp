#include <cstdlib>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <spdlog/spdlog.h>

#include "nestimpute/config.hpp"
#include "nestimpute/error.hpp"
#include "nestimpute/impute.hpp"
#include "nestimpute/mi.hpp"
#include "nestimpute/pipeline.hpp"
#include "nestimpute/simtools.hpp"

namespace py = pybind11;
using namespace nestimpute;

namespace {

using SchemaPtr = std::shared_ptr<DatasetSchema>;

SchemaPtr mut(const std::shared_ptr<const DatasetSchema>& s) { return std::const_pointer_cast<DatasetSchema>(s); }

SchemaPtr schema_from_text(const std::string& text) {
  auto s = std::make_shared<DatasetSchema>(parse_schema(text));
  s->validate();
  return s;
}

Dataset dataset_from_csv(const SchemaPtr& schema, const std::string& csv) {
  std::istringstream in(csv);
  return load_dataset(schema, in);
}

std::string dataset_to_csv(const Dataset& d, bool with_missing) {
  std::ostringstream out;
  write_dataset(d, out, with_missing);
  return out.str();
}

py::dict mi_dict(const MIResult& r) {
  py::dict out;
  out["L"] = r.L;
  out["qbar"] = r.qbar;
  out["b"] = r.b;
  out["ubar"] = r.ubar;
  out["T"] = r.T;
  out["nu"] = r.nu;
  out["lo"] = r.lo;
  out["hi"] = r.hi;
  return out;
}

std::vector<Estimate> estimates(const std::vector<double>& q, const std::vector<double>& u) {
  if (q.size() != u.size()) throw InferenceError("q and u differ in length");
  std::vector<Estimate> out;
  for (std::size_t i = 0; i < q.size(); ++i) out.push_back({q[i], u[i], 0});
  return out;
}

RunOptions run_options(std::optional<std::uint64_t> seed, std::optional<int> threads, bool bench,
                       std::optional<int> checkpoint_every, bool resume) {
  RunOptions o;
  o.seed = seed;
  o.threads = threads;
  o.bench = bench;
  o.checkpoint_every = checkpoint_every;
  o.resume = resume;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiple imputation and synthesis for nested household data";

  const char* env = std::getenv("NESTED_IMPUTE_LOG");
  const auto level = spdlog::level::from_str(env ? env : "warn");
  spdlog::set_level(level == spdlog::level::off && env && std::string(env) != "off" ? spdlog::level::warn : level);

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() { return py::exception<Error>(m, "NestedImputeError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type.get_stored(), (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<DatasetSchema, SchemaPtr>(m, "Schema")
      .def_static("parse", &schema_from_text, py::arg("text"))
      .def_property_readonly("household_vars",
                             [](const DatasetSchema& s) {
                               std::vector<std::string> out;
                               for (const auto& v : s.household_vars) out.push_back(v.name);
                               return out;
                             })
      .def_property_readonly("individual_vars",
                             [](const DatasetSchema& s) {
                               std::vector<std::string> out;
                               for (const auto& v : s.individual_vars) out.push_back(v.name);
                               return out;
                             })
      .def("levels",
           [](const DatasetSchema& s, const std::string& name) {
             int k = s.household_index(name);
             if (k >= 0) return s.household_vars[static_cast<std::size_t>(k)].levels;
             k = s.individual_index(name);
             if (k < 0) throw SchemaError("unknown variable '" + name + "'");
             return s.individual_vars[static_cast<std::size_t>(k)].levels;
           })
      .def_readonly("household_sizes", &DatasetSchema::household_sizes)
      .def_property_readonly("head_moved", &DatasetSchema::head_moved)
      .def("__str__", [](const DatasetSchema& s) { return format_schema(s); });

  py::class_<Dataset>(m, "Dataset")
      .def_static("from_csv", &dataset_from_csv, py::arg("schema"), py::arg("csv"))
      .def("to_csv", &dataset_to_csv, py::arg("with_missing") = false)
      .def_property_readonly("schema", [](const Dataset& d) { return mut(d.schema); })
      .def_property_readonly("n", &Dataset::n)
      .def_property_readonly("N", &Dataset::N)
      .def("n1h", &Dataset::n1h)
      .def("missing_cells", &Dataset::missing_cells)
      .def("complete", &Dataset::complete)
      .def("filled", &Dataset::filled)
      .def("head_move", &head_to_household_transform)
      .def("inverse_head_move", &inverse_transform)
      .def("feasible",
           [](const Dataset& d, const RuleSet& rules) {
             const auto bound = rules.schema() == d.schema ? rules : rules.for_schema(d.schema);
             std::vector<bool> out;
             for (const auto& h : d.households) out.push_back(is_feasible(h, bound));
             return out;
           },
           py::arg("rules"));

  py::class_<RuleSet>(m, "RuleSet")
      .def_static("parse", [](const std::string& text, const SchemaPtr& s) { return parse_rules(text, s); }, py::arg("text"), py::arg("schema"))
      .def("__len__", &RuleSet::size)
      .def("active_count", &RuleSet::active_count)
      .def("for_schema", [](const RuleSet& r, const SchemaPtr& s) { return r.for_schema(s); });

  m.def("count_combinations",
        [](const SchemaPtr& s, int h) { return py::int_(py::str(count_combinations(*s, h).str())); },
        py::arg("schema"), py::arg("h"));
  m.def("count_structural_zeros",
        [](const SchemaPtr& s, const RuleSet& r, int h, std::uint64_t limit) {
          const auto bound = r.schema() == s ? r : r.for_schema(s);
          return py::int_(py::str(count_structural_zeros(*s, bound, h, limit).str()));
        },
        py::arg("schema"), py::arg("rules"), py::arg("h"), py::arg("enumeration_limit") = 100'000'000);

  m.def("combine_rubin",
        [](const std::vector<double>& q, const std::vector<double>& u, double gamma) {
          return mi_dict(combine_rubin(estimates(q, u), gamma));
        },
        py::arg("q"), py::arg("u"), py::arg("gamma") = 0.05);
  m.def("combine_partial_synth",
        [](const std::vector<double>& q, const std::vector<double>& u, double gamma) {
          return mi_dict(combine_partial_synth(estimates(q, u), gamma));
        },
        py::arg("q"), py::arg("u"), py::arg("gamma") = 0.05);
  m.def("t_quantile", &t_quantile, py::arg("nu"), py::arg("gamma"));
  m.def("estimate",
        [](const Dataset& d, const std::string& estimands) {
          const auto list = parse_estimands(estimands, d.schema);
          const auto est = estimate_all(d, list);
          std::vector<std::tuple<std::string, double, double, std::size_t>> out;
          for (std::size_t k = 0; k < list.size(); ++k) out.emplace_back(list[k].name, est[k].q, est[k].u, est[k].n);
          return out;
        },
        py::arg("dataset"), py::arg("estimands"));

  m.def("simulate_census",
        [](const SchemaPtr& s, const RuleSet& rules, std::size_t n, std::uint64_t seed) {
          Rng rng(seed);
          return simulate_census(s, rules, n, rng);
        },
        py::arg("schema"), py::arg("rules"), py::arg("n"), py::arg("seed") = 1);
  m.def("apply_stress_mechanism",
        [](const Dataset& d, std::uint64_t seed) {
          Rng rng(seed);
          return apply_stress_mechanism(d, rng);
        },
        py::arg("dataset"), py::arg("seed") = 1);
  m.def("apply_mcar",
        [](const Dataset& d, double complete_frac, double rate, std::uint64_t seed) {
          Rng rng(seed);
          return apply_mcar(d, complete_frac, rate, rng);
        },
        py::arg("dataset"), py::arg("complete_frac") = 0.8, py::arg("rate") = 0.5, py::arg("seed") = 1);

  m.def("impute",
        [](const Dataset& d, const RuleSet& rules, int L, int F, int S, int iterations, int burn_in, int thin,
           std::uint64_t seed, const std::map<int, std::string>& psi, bool head_move) {
          SamplerConfig cfg;
          cfg.iterations = iterations;
          cfg.burn_in = burn_in;
          cfg.thin = thin;
          cfg.seed = seed;
          cfg.keep = L;
          for (const auto& [h, text] : psi) cfg.psi[h] = parse_rational(text);
          cfg.capped = !psi.empty();
          cfg.validate();
          Hyperparams hp;
          hp.F = F;
          hp.S = S;
          const Dataset chain = head_move ? head_to_household_transform(d) : d;
          ChainResult r;
          {
            py::gil_scoped_release release;
            r = run_chain(chain, rules, hp, cfg);
          }
          Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
          auto set = emit_completed_datasets(r.kept, L, cfg.selection, rng, rules);
          std::vector<double> alpha;
          std::vector<double> beta;
          std::vector<std::uint64_t> n0;
          for (const auto& row : r.trace) {
            alpha.push_back(row.alpha);
            beta.push_back(row.beta);
            n0.push_back(row.n0);
          }
          py::dict trace;
          trace["alpha"] = alpha;
          trace["beta"] = beta;
          trace["n0"] = n0;
          return py::make_tuple(set.datasets, set.iterations, trace);
        },
        py::arg("dataset"), py::arg("rules"), py::arg("L") = 5, py::arg("F") = 30, py::arg("S") = 15,
        py::arg("iterations") = 10000, py::arg("burn_in") = 5000, py::arg("thin") = 5, py::arg("seed") = 1,
        py::arg("psi") = std::map<int, std::string>{}, py::arg("head_move") = true);

  auto run = [](void (*cmd)(const Config&, const RunOptions&)) {
    return [cmd](const std::string& config, std::optional<std::uint64_t> seed, std::optional<int> threads, bool bench,
                 std::optional<int> checkpoint_every, bool resume) {
      const auto cfg = Config::load(config);
      const auto opt = run_options(seed, threads, bench, checkpoint_every, resume);
      py::gil_scoped_release release;
      cmd(cfg, opt);
    };
  };
  for (const auto& [name, cmd] : {std::pair{"cmd_impute", &cmd_impute}, std::pair{"cmd_synthesize", &cmd_synthesize},
                                  std::pair{"cmd_evaluate", &cmd_evaluate}, std::pair{"cmd_simulate", &cmd_simulate},
                                  std::pair{"cmd_diagnose", &cmd_diagnose}}) {
    m.def(name, run(cmd), py::arg("config"), py::arg("seed") = py::none(), py::arg("threads") = py::none(),
          py::arg("bench") = false, py::arg("checkpoint_every") = py::none(), py::arg("resume") = false);
  }
}
