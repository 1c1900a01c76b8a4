#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "posslog/backend.hpp"
#include "posslog/c1.hpp"
#include "posslog/defaults.hpp"
#include "posslog/errors.hpp"
#include "posslog/formula.hpp"
#include "posslog/hilbert.hpp"
#include "posslog/pkb.hpp"
#include "posslog/possibility.hpp"

namespace py = pybind11;
using namespace posslog;

namespace {

Formula to_formula(const py::object& obj) {
  if (py::isinstance<Formula>(obj)) return obj.cast<Formula>();
  return parse_formula(obj.cast<std::string>());
}

std::vector<Formula> to_formulas(const py::iterable& items) {
  std::vector<Formula> out;
  for (py::handle item : items) out.push_back(to_formula(py::reinterpret_borrow<py::object>(item)));
  return out;
}

py::object to_fraction(const Level& level) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(level.value().numerator(), level.value().denominator());
}

Level to_level(const py::object& obj) {
  auto parsed = Level::parse(py::str(obj).cast<std::string>());
  if (!parsed) throw py::value_error("invalid level; expected a rational in [0,1]");
  return *parsed;
}

EngineOptions make_options(std::size_t max_atoms, std::size_t max_evalset, bool weak_neg) {
  EngineOptions opts;
  opts.backend.classical.max_atoms = max_atoms;
  opts.backend.c1.max_members = max_evalset;
  opts.backend.c1.weak_double_negation = weak_neg;
  return opts;
}

py::dict bivaluation_to_dict(const Bivaluation& v) {
  py::dict out;
  const auto& members = v.evaluation_set().members();
  for (std::size_t i = 0; i < members.size(); ++i)
    out[py::str(render(members[i]))] = v.value_at(i);
  return out;
}

struct PyKB {
  PyKB(PossibilisticKB kb_, EngineOptions opts_) : kb(std::move(kb_)), opts(opts_) {}
  PossibilisticKB kb;
  EngineOptions opts;
  PkbEngine& engine() {
    if (!engine_) engine_ = std::make_unique<PkbEngine>(kb, opts);
    return *engine_;
  }

 private:
  std::unique_ptr<PkbEngine> engine_;
};

struct PyDefaults {
  RankedDefaults ranked;
  EngineOptions opts;
};

}  // namespace

PYBIND11_MODULE(_posslog, m) {
  m.doc() = "possibilistic reasoning over classical and paraconsistent propositional logic";

  py::register_exception<ResourceLimitError>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "FormulaParseError", PyExc_ValueError);
  py::register_exception<InconsistentDefaultsError>(m, "InconsistentDefaults", PyExc_ValueError);

  py::class_<Formula>(m, "Formula")
      .def_static("atom", [](const std::string& name) { return Formula::atom(name); })
      .def("__repr__", [](Formula f) { return "Formula('" + render(f) + "')"; })
      .def("__str__", [](Formula f) { return render(f); })
      .def("__eq__", [](Formula a, Formula b) { return a == b; })
      .def("__hash__", [](Formula f) { return f.hash(); })
      .def_property_readonly("size", &Formula::size);

  m.def("parse", [](const std::string& text) { return parse_formula(text); });
  m.def("render", [](const py::object& f) { return render(to_formula(f)); });
  m.def("atoms", [](const py::object& f) { return atoms(to_formula(f)); });
  m.def("expand_circ", [](const py::object& f) { return expand_circ(to_formula(f)); });

  m.def(
      "c1_valid",
      [](const py::object& goal, std::size_t max_evalset, bool weak_neg) {
        return c1_valid(to_formula(goal), make_options(20, max_evalset, weak_neg).backend.c1);
      },
      py::arg("goal"), py::arg("max_evalset") = 64, py::arg("weak_neg") = false);

  m.def(
      "c1_entails",
      [](const py::iterable& premises, const py::object& goal, std::size_t max_evalset,
         bool weak_neg) {
        return c1_entails(to_formulas(premises), to_formula(goal),
                          make_options(20, max_evalset, weak_neg).backend.c1);
      },
      py::arg("premises"), py::arg("goal"), py::arg("max_evalset") = 64,
      py::arg("weak_neg") = false);

  m.def(
      "find_countermodel",
      [](const py::iterable& premises, const py::object& goal, std::size_t max_evalset,
         bool weak_neg) -> py::object {
        auto cm = find_countermodel(to_formulas(premises), to_formula(goal),
                                    make_options(20, max_evalset, weak_neg).backend.c1);
        if (!cm) return py::none();
        return bivaluation_to_dict(*cm);
      },
      py::arg("premises"), py::arg("goal"), py::arg("max_evalset") = 64,
      py::arg("weak_neg") = false);

  m.def(
      "classical_entails",
      [](const py::iterable& premises, const py::object& goal, std::size_t max_atoms) {
        return classical_entails(to_formulas(premises), to_formula(goal), {max_atoms});
      },
      py::arg("premises"), py::arg("goal"), py::arg("max_atoms") = 20);

  m.def(
      "classical_satisfiable",
      [](const py::iterable& formulas, std::size_t max_atoms) -> py::object {
        auto v = classical_satisfiable(to_formulas(formulas), {max_atoms});
        if (!v) return py::none();
        py::dict out;
        for (const auto& [name, value] : v->assignment) out[py::str(name)] = value;
        return out;
      },
      py::arg("formulas"), py::arg("max_atoms") = 20);

  m.def(
      "hilbert_derive",
      [](const py::object& goal, int depth) -> py::object {
        DeriveResult r = hilbert_derive_bounded(to_formula(goal), depth);
        if (r.status != DeriveStatus::Found) return py::none();
        return py::str(r.derivation->to_text());
      },
      py::arg("goal"), py::arg("depth") = 3);

  py::class_<PyKB>(m, "KB")
      .def_static(
          "load",
          [](const std::string& path, std::size_t max_atoms, std::size_t max_evalset,
             bool weak_neg) {
            return PyKB(PossibilisticKB::load_file(path),
                        make_options(max_atoms, max_evalset, weak_neg));
          },
          py::arg("path"), py::arg("max_atoms") = 20, py::arg("max_evalset") = 64,
          py::arg("weak_neg") = false)
      .def_static(
          "from_items",
          [](const std::string& logic, const py::iterable& items, std::size_t max_atoms,
             std::size_t max_evalset, bool weak_neg) {
            std::vector<WeightedFormula> wfs;
            for (py::handle item : items) {
              auto pair = item.cast<py::tuple>();
              wfs.push_back({to_formula(pair[0]), to_level(pair[1])});
            }
            LogicKind kind = logic == "classical" ? LogicKind::Classical : LogicKind::C1;
            return PyKB(PossibilisticKB(kind, std::move(wfs)),
                        make_options(max_atoms, max_evalset, weak_neg));
          },
          py::arg("logic"), py::arg("items"), py::arg("max_atoms") = 20,
          py::arg("max_evalset") = 64, py::arg("weak_neg") = false)
      .def_property_readonly("logic", [](PyKB& kb) { return to_string(kb.kb.logic()); })
      .def("__len__", [](PyKB& kb) { return kb.kb.items().size(); })
      .def("items",
           [](PyKB& kb) {
             py::list out;
             for (const WeightedFormula& wf : kb.kb.items())
               out.append(py::make_tuple(wf.formula, to_fraction(wf.weight)));
             return out;
           })
      .def("save_text",
           [](PyKB& kb) {
             std::ostringstream out;
             kb.kb.save(out);
             return out.str();
           })
      .def("closure_value",
           [](PyKB& kb, const py::object& q) { return to_fraction(kb.engine().closure_value(to_formula(q))); })
      .def("closure_report",
           [](PyKB& kb, const py::iterable& queries) {
             py::list rows;
             for (const ClosureRow& row : kb.engine().closure_report(to_formulas(queries))) {
               py::dict r;
               r["query"] = render(row.query);
               r["n"] = to_fraction(row.necessity);
               r["n_neg"] = to_fraction(row.necessity_neg);
               r["n_badly"] = to_fraction(row.necessity_badly);
               rows.append(r);
             }
             return rows;
           })
      .def("entails", [](PyKB& kb, const py::object& q) { return kb.engine().poss_entails(to_formula(q)); })
      .def("entail_detail",
           [](PyKB& kb, const py::object& q) {
             EntailmentDetail d = kb.engine().poss_entails_detail(to_formula(q));
             py::dict out;
             out["accepted"] = d.accepted;
             out["accepted_via_neg"] = d.accepted_via_neg;
             out["n"] = to_fraction(d.necessity);
             out["n_neg"] = to_fraction(d.necessity_neg);
             out["n_badly"] = to_fraction(d.necessity_badly);
             return out;
           })
      .def("cond_entails",
           [](PyKB& kb, const py::object& a, const py::object& c) {
             return kb.engine().cond_entails(to_formula(a), to_formula(c));
           })
      .def("inconsistency_degree",
           [](PyKB& kb) { return to_fraction(kb.engine().inconsistency_degree()); })
      .def("classical_entails_graded", [](PyKB& kb, const py::object& q) {
        return kb.engine().classical_poss_entails(to_formula(q));
      });

  m.def("fuse", [](PyKB& a, PyKB& b) { return PyKB(fuse(a.kb, b.kb), a.opts); });

  py::class_<PyDefaults>(m, "Defaults")
      .def_static(
          "load",
          [](const std::string& path, std::size_t max_atoms, std::size_t max_evalset,
             bool weak_neg) {
            DefaultsFile df = load_defaults_file(path);
            EngineOptions opts = make_options(max_atoms, max_evalset, weak_neg);
            return PyDefaults{make_ranked(df.facts, df.rules, opts.backend.classical), opts};
          },
          py::arg("path"), py::arg("max_atoms") = 20, py::arg("max_evalset") = 64,
          py::arg("weak_neg") = false)
      .def_static(
          "from_rules",
          [](const py::iterable& facts, const py::iterable& rules, std::size_t max_atoms,
             std::size_t max_evalset, bool weak_neg) {
            std::vector<DefaultRule> parsed;
            for (py::handle item : rules) {
              auto pair = item.cast<py::tuple>();
              DefaultRule rule{to_formula(pair[0]), to_formula(pair[1]), std::nullopt};
              if (pair.size() > 2 && !pair[2].is_none()) rule.rank_override = to_level(pair[2]);
              parsed.push_back(rule);
            }
            EngineOptions opts = make_options(max_atoms, max_evalset, weak_neg);
            return PyDefaults{make_ranked(to_formulas(facts), std::move(parsed),
                                          opts.backend.classical),
                              opts};
          },
          py::arg("facts"), py::arg("rules"), py::arg("max_atoms") = 20,
          py::arg("max_evalset") = 64, py::arg("weak_neg") = false)
      .def("levels",
           [](PyDefaults& d) {
             py::list out;
             for (std::size_t i = 0; i < d.ranked.rules.size(); ++i)
               out.append(py::make_tuple(d.ranked.rules[i].describe(),
                                         to_fraction(d.ranked.levels[i])));
             return out;
           })
      .def("fixpoint_rules",
           [](PyDefaults& d) {
             py::list out;
             for (const std::string& rule : g_fixpoint(d.ranked, d.opts).rule_descriptions())
               out.append(rule);
             return out;
           })
      .def("entails", [](PyDefaults& d, const py::object& q) {
        return default_entails(d.ranked, to_formula(q), d.opts);
      });

  m.def("z_rank", [](const py::iterable& rules) {
    std::vector<DefaultRule> parsed;
    for (py::handle item : rules) {
      auto pair = item.cast<py::tuple>();
      parsed.push_back({to_formula(pair[0]), to_formula(pair[1]), std::nullopt});
    }
    return z_rank(parsed);
  });
}
