#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "condis/brauer.hpp"
#include "condis/finfun.hpp"
#include "condis/gen.hpp"
#include "condis/render.hpp"
#include "condis/syntax.hpp"

namespace py = pybind11;
using namespace condis;

namespace {

std::shared_ptr<DisjTerm> share(DisjTermPtr p) { return std::const_pointer_cast<DisjTerm>(std::move(p)); }
std::shared_ptr<ConjTerm> share(ConjTermPtr p) { return std::const_pointer_cast<ConjTerm>(std::move(p)); }

std::string table_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-function semantics for conjunctive and disjunctive deductions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<TypeMismatch>(m, "TypeMismatch", base.ptr());
  py::register_exception<OutOfRange>(m, "OutOfRange", base.ptr());
  py::register_exception<LengthMismatch>(m, "LengthMismatch", base.ptr());
  py::register_exception<NotAFunction>(m, "NotAFunction", base.ptr());
  py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
  py::register_exception<TypeError>(m, "TermTypeError", base.ptr());
  py::register_exception<InternalInvariantViolation>(m, "InternalInvariantViolation", base.ptr());

  py::class_<FinFun>(m, "FinFun")
      .def(py::init<int, int, std::vector<int>>(), py::arg("src"), py::arg("tgt"), py::arg("table"))
      .def_readonly("src", &FinFun::src)
      .def_readonly("tgt", &FinFun::tgt)
      .def_readonly("table", &FinFun::table)
      .def("__call__", &FinFun::operator())
      .def("__eq__", [](const FinFun& a, const FinFun& b) { return a == b; })
      .def("__repr__", [](const FinFun& f) {
        return "FinFun(" + std::to_string(f.src) + " -> " + std::to_string(f.tgt) + " " +
               table_text(f.table) + ")";
      });

  py::class_<Radices>(m, "Radices")
      .def(py::init<std::vector<int>>(), py::arg("entries"))
      .def_readonly("entries", &Radices::entries)
      .def("product", &Radices::product)
      .def("__eq__", [](const Radices& a, const Radices& b) { return a == b; })
      .def("__repr__", [](const Radices& d) { return "Radices(" + table_text(d.entries) + ")"; });

  py::class_<SplitEq>(m, "SplitEq")
      .def(py::init<int, int, std::vector<std::vector<int>>>(), py::arg("src"), py::arg("tgt"),
           py::arg("classes"))
      .def_readonly("src", &SplitEq::src)
      .def_readonly("tgt", &SplitEq::tgt)
      .def_readonly("classes", &SplitEq::classes)
      .def("__eq__", [](const SplitEq& a, const SplitEq& b) { return a == b; })
      .def("__repr__", [](const SplitEq& r) {
        std::string s = "SplitEq(" + std::to_string(r.src) + " -> " + std::to_string(r.tgt) + " ";
        for (const auto& c : r.classes) s += table_text(c);
        return s + ")";
      });

  py::class_<BinRel>(m, "BinRel")
      .def(py::init<int, int, std::set<std::pair<int, int>>>(), py::arg("src"), py::arg("tgt"),
           py::arg("pairs"))
      .def_readonly("src", &BinRel::src)
      .def_readonly("tgt", &BinRel::tgt)
      .def_readonly("pairs", &BinRel::pairs)
      .def("__eq__", [](const BinRel& a, const BinRel& b) { return a == b; })
      .def("__repr__", [](const BinRel& r) {
        return "BinRel(" + std::to_string(r.src) + " -> " + std::to_string(r.tgt) + ", " +
               std::to_string(r.pairs.size()) + " pairs)";
      });

  py::class_<EqRel>(m, "EqRel")
      .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("size"), py::arg("classes"))
      .def_readonly("size", &EqRel::size)
      .def_readonly("classes", &EqRel::classes)
      .def("__eq__", [](const EqRel& a, const EqRel& b) { return a == b; });

  py::class_<RepChoice>(m, "RepChoice")
      .def_readonly("reps", &RepChoice::reps)
      .def_readonly("others", &RepChoice::others)
      .def_readonly("phi", &RepChoice::phi);

  py::class_<DisjTerm, std::shared_ptr<DisjTerm>>(m, "DisjTerm")
      .def("__eq__", [](const DisjTerm& a, const DisjTerm& b) { return a == b; })
      .def("__str__", [](const DisjTerm& t) { return to_text(t); })
      .def("__repr__", [](const DisjTerm& t) { return "DisjTerm(" + to_text(t) + ")"; });

  py::class_<ConjTerm, std::shared_ptr<ConjTerm>>(m, "ConjTerm")
      .def("__eq__", [](const ConjTerm& a, const ConjTerm& b) { return a == b; })
      .def("__str__", [](const ConjTerm& t) { return to_text(t); })
      .def("__repr__", [](const ConjTerm& t) { return "ConjTerm(" + to_text(t) + ")"; });

  // category of finite ordinals
  m.def("identity", &identity, py::arg("n"));
  m.def("compose", &compose, py::arg("g"), py::arg("f"));
  m.def("sum", &condis::sum, py::arg("f"), py::arg("f2"));
  m.def("kappa", &kappa, py::arg("n"));
  m.def("inj1", &inj1, py::arg("n"), py::arg("m"));
  m.def("inj2", &inj2, py::arg("n"), py::arg("m"));
  m.def("codiag", &codiag, py::arg("n"));
  m.def("bracket", &bracket, py::arg("f"), py::arg("g"));
  m.def("prod", &prod, py::arg("f1"), py::arg("f2"));
  m.def("proj1", &proj1, py::arg("n"), py::arg("m"));
  m.def("proj2", &proj2, py::arg("n"), py::arg("m"));
  m.def("diag", &diag, py::arg("n"));
  m.def("pair", &condis::pair, py::arg("f"), py::arg("g"));
  m.def("mr_encode", [](const Radices& d, const std::vector<int>& t) { return mr_encode(d, t); },
        py::arg("d"), py::arg("tuple"));
  m.def("mr_decode", &mr_decode, py::arg("d"), py::arg("index"));

  // split equivalences
  m.def("se_identity", &se_identity, py::arg("n"));
  m.def("se_compose", &se_compose, py::arg("s"), py::arg("r"));
  m.def("j_of", &j_of, py::arg("f"));

  // Brauerian representation and function spaces
  m.def("nth_prime", &nth_prime, py::arg("i"));
  m.def("appropriate", &appropriate, py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("f_ab_rel", &f_ab_rel, py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("f_ab_fun", &f_ab_fun, py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("f_p", &f_p, py::arg("p"), py::arg("r"));
  m.def("respecting_functions", &respecting_functions, py::arg("r"), py::arg("p"));
  m.def("choose_representatives", &choose_representatives, py::arg("r"));
  m.def("exp_functor", &exp_functor, py::arg("p"), py::arg("f"));
  m.def("powerset_functor", &powerset_functor, py::arg("f"));
  m.def("direct_image", &direct_image, py::arg("f"), py::arg("subset_code"));
  m.def("subset_encode", &subset_encode, py::arg("size"), py::arg("elements"));
  m.def("subset_decode", &subset_decode, py::arg("size"), py::arg("code"));
  m.def("graph_of", &graph_of, py::arg("f"));
  m.def("rel_compose", &rel_compose, py::arg("s"), py::arg("r"));

  // term construction
  m.def("d_id", [](int n) { return share(d_id(n)); });
  m.def("d_kappa", [](int n) { return share(d_kappa(n)); });
  m.def("d_in1", [](int n, int m_) { return share(d_in1(n, m_)); });
  m.def("d_in2", [](int n, int m_) { return share(d_in2(n, m_)); });
  m.def("d_fold", [](int n) { return share(d_fold(n)); });
  m.def("d_seq", [](std::shared_ptr<DisjTerm> a, std::shared_ptr<DisjTerm> b) { return share(d_seq(a, b)); });
  m.def("d_sum", [](std::shared_ptr<DisjTerm> a, std::shared_ptr<DisjTerm> b) { return share(d_sum(a, b)); });
  m.def("d_case", [](std::shared_ptr<DisjTerm> a, std::shared_ptr<DisjTerm> b) { return share(d_case(a, b)); });
  m.def("c_id", [](ConjObj a) { return share(c_id(std::move(a))); });
  m.def("c_bang", [](ConjObj a) { return share(c_bang(std::move(a))); });
  m.def("c_pr1", [](ConjObj a, ConjObj b) { return share(c_pr1(std::move(a), std::move(b))); });
  m.def("c_pr2", [](ConjObj a, ConjObj b) { return share(c_pr2(std::move(a), std::move(b))); });
  m.def("c_dup", [](ConjObj a) { return share(c_dup(std::move(a))); });
  m.def("c_seq", [](std::shared_ptr<ConjTerm> a, std::shared_ptr<ConjTerm> b) { return share(c_seq(a, b)); });
  m.def("c_prod", [](std::shared_ptr<ConjTerm> a, std::shared_ptr<ConjTerm> b) { return share(c_prod(a, b)); });
  m.def("c_pair", [](std::shared_ptr<ConjTerm> a, std::shared_ptr<ConjTerm> b) { return share(c_pair(a, b)); });

  // parsing, printing, typing
  m.def("parse_disj", [](const std::string& s) { return share(parse_disj(s)); });
  m.def("parse_conj", [](const std::string& s) { return share(parse_conj(s)); });
  m.def("to_text", [](const DisjTerm& t) { return to_text(t); });
  m.def("to_text", [](const ConjTerm& t) { return to_text(t); });
  m.def("obj_text", [](const ConjObj& a) { return to_text(a); });
  m.def("infer_type_disj", [](const DisjTerm& t) {
    auto ty = infer_type_disj(t);
    return py::make_tuple(ty.src, ty.tgt);
  });
  m.def("infer_type_conj", [](const ConjTerm& t) {
    auto ty = infer_type_conj(t);
    return py::make_tuple(ty.src, ty.tgt);
  });

  // semantics, synthesis, translation, equality
  m.def("eval_F", [](const DisjTerm& t) { return eval_F(t); });
  m.def("eval_H", [](const ConjTerm& t) { return eval_H(t); });
  m.def("eval_G", [](const ConjTerm& t) { return eval_G(t); });
  m.def("jg", [](const ConjTerm& t) { return jg(t); });
  m.def("eval_H_via_gen", [](const ConjTerm& t) { return eval_H_via_gen(t); });
  m.def("synth_disj", [](const FinFun& f) { return share(synth_disj(f)); });
  m.def("conj_to_disj", [](const ConjTerm& t) { return share(conj_to_disj(t)); });
  m.def("eq_disj", [](const DisjTerm& a, const DisjTerm& b) { return eq_disj(a, b); });
  m.def("eq_conj", [](const ConjTerm& a, const ConjTerm& b) { return eq_conj(a, b); });
  m.def("normalize_obj", &normalize_obj, py::arg("a"));
  m.def("obj_code", &obj_code, py::arg("a"));
  m.def("obj_radices", &obj_radices, py::arg("a"));

  // pictures
  m.def("render_finfun_text", &render_finfun_text);
  m.def("render_finfun_dot", &render_finfun_dot);
  m.def("render_spliteq_text", &render_spliteq_text);
  m.def("render_spliteq_dot", &render_spliteq_dot);
}
