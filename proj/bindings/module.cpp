#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "palinlen/automata.hpp"
#include "palinlen/closed_form.hpp"
#include "palinlen/errors.hpp"
#include "palinlen/pl_oracle.hpp"
#include "palinlen/recursion.hpp"
#include "palinlen/ternary.hpp"
#include "palinlen/verify.hpp"
#include "palinlen/words.hpp"

namespace py = pybind11;

namespace {

// One memoized evaluator for the whole module; the interpreter lock
// serializes access.
palinlen::Recursion& shared_recursion() {
  static palinlen::Recursion rec;
  return rec;
}

const palinlen::Dfao& dfao_by_name(const std::string& name) {
  const auto& ref = palinlen::reference_systems();
  if (name == "dq") return ref.dq;
  if (name == "dt") return ref.dt;
  if (name == "dp") return ref.dp;
  throw palinlen::DomainError("no automaton named \"" + name +
                              "\"; pick dq, dt or dp");
}

const palinlen::MorphicSystem& morphic_by_name(const std::string& name) {
  const auto& ref = palinlen::reference_systems();
  if (name == "delta") return ref.delta;
  if (name == "nu") return ref.nu;
  if (name == "psi") return ref.psi;
  throw palinlen::DomainError("no morphic system named \"" + name +
                              "\"; pick delta, nu or psi");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "palindromic prefix lengths of the Sierpinski word";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const palinlen::DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const palinlen::ResourceLimitError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  // Words.
  m.def("sierpinski_prefix",
        [](std::uint64_t n) { return palinlen::shared_sierpinski().prefix(n); },
        py::arg("n"), "First n letters of the fixed point of a->aba, b->bbb.");
  m.def("mirror", [](const std::string& w) { return palinlen::mirror(w); },
        py::arg("w"));
  m.def("is_palindrome",
        [](const std::string& w) { return palinlen::is_palindrome(w); },
        py::arg("w"));

  // Ternary digits.
  m.def("to_ternary", &palinlen::to_ternary, py::arg("n"),
        "Base-3 expansion, most significant digit first; empty for 0.");
  m.def("from_ternary",
        [](const std::string& x) { return palinlen::from_ternary(x); },
        py::arg("x"));
  m.def("overline",
        [](const std::string& x) { return palinlen::overline(x); },
        py::arg("x"), "Expansion of 3^len(x) - int(x, 3) on its domain.");
  m.def("decompose_groups",
        [](const std::string& x) {
          const palinlen::GroupDecomposition d = palinlen::decompose_groups(x);
          py::list small;
          for (const auto& g : d.small_groups) {
            small.append(py::make_tuple(g.start, g.length));
          }
          py::list large;
          for (const auto& g : d.large_groups) {
            large.append(py::make_tuple(g.start, g.length, g.dense));
          }
          py::dict out;
          out["small"] = small;
          out["large"] = large;
          out["dense"] = d.dense_count();
          return out;
        },
        py::arg("x"),
        "Runs of 2s and zero-separated blocks of a {0,2} string.");

  // Letter-level ground truth.
  m.def("pl",
        [](const std::string& w, std::size_t limit) {
          return palinlen::pl(w, limit);
        },
        py::arg("w"), py::arg("limit") = palinlen::kDefaultOracleMax,
        "Minimal number of palindromes concatenating to w.");
  m.def("pl_table",
        [](const std::string& w, std::size_t limit) {
          return palinlen::pl_table(w, limit).pl;
        },
        py::arg("w"), py::arg("limit") = palinlen::kDefaultOracleMax,
        "Palindromic lengths of every prefix of w, index 0 for the empty one.");
  m.def("oracle_p", &palinlen::oracle_p, py::arg("n"),
        py::arg("limit") = palinlen::kDefaultOracleMax);
  m.def("oracle_q", &palinlen::oracle_q, py::arg("n"),
        py::arg("limit") = palinlen::kDefaultOracleMax);
  m.def("oracle_qj", &palinlen::oracle_qj, py::arg("j"), py::arg("n"),
        py::arg("limit") = palinlen::kDefaultOracleMax);

  // Recurrences.
  m.def("p", [](std::uint64_t n) { return shared_recursion().p(n); },
        py::arg("n"), "Palindromic length of the length-n prefix.");
  m.def("q", [](std::uint64_t n) { return shared_recursion().q(n); },
        py::arg("n"));
  m.def("qj",
        [](std::uint64_t j, std::uint64_t n) {
          return shared_recursion().qj(j, n);
        },
        py::arg("j"), py::arg("n"));
  m.def("t", [](std::uint64_t n) { return shared_recursion().t(n); },
        py::arg("n"));
  m.def("q_ternary",
        [](const std::string& x) { return shared_recursion().q_ternary(x); },
        py::arg("x"), "q evaluated by digit surgery on an expansion.");

  // Digit closed forms.
  m.def("cf_q", [](const std::string& x) { return palinlen::cf_q(x); },
        py::arg("x"));
  m.def("cf_q_vs_overline",
        [](const std::string& x) { return palinlen::cf_q_vs_overline(x); },
        py::arg("x"));
  m.def("in_s",
        [](const std::string& x) {
          const palinlen::SMembership member = palinlen::in_S(x);
          return py::make_tuple(member.value,
                                std::string(to_string(member.reason)));
        },
        py::arg("x"),
        "Whether p = q on this expansion, with the matching pattern.");
  m.def("cf_t", [](const std::string& x) { return palinlen::cf_t(x); },
        py::arg("x"));
  m.def("cf_dq", &palinlen::cf_dq, py::arg("n"));
  m.def("cf_dt", &palinlen::cf_dt, py::arg("n"));
  m.def("cf_dp", &palinlen::cf_dp, py::arg("n"));
  m.def("count_s", &palinlen::count_S, py::arg("k"),
        py::arg("max_k") = palinlen::kDefaultCountSMax,
        "Number of n in [0, 3^k] with p(n) = q(n).");

  // Automata and morphic systems.
  m.def("dfao_eval",
        [](const std::string& name, std::uint64_t n) {
          return palinlen::dfao_eval(dfao_by_name(name), n);
        },
        py::arg("name"), py::arg("n"),
        "Run the named difference automaton (dq, dt or dp) on n.");
  m.def("morphic_output",
        [](const std::string& name, std::uint64_t n, std::uint64_t horizon) {
          return palinlen::morphic_output(morphic_by_name(name), n, horizon);
        },
        py::arg("name"), py::arg("n"),
        py::arg("horizon") = palinlen::kDefaultMorphicHorizon,
        "Coded letter n of the named fixed point (delta, nu or psi).");
  m.def("diff_prefix",
        [](const std::string& name, std::uint64_t length) {
          palinlen::FixedPoint fp(morphic_by_name(name), length + 1);
          std::vector<int> values;
          values.reserve(length);
          for (std::uint64_t i = 0; i < length; ++i) {
            values.push_back(fp.output(i));
          }
          return values;
        },
        py::arg("name"), py::arg("length"),
        "First `length` outputs of the named fixed point.");
  m.def("product_pair_count",
        []() {
          const auto& ref = palinlen::reference_systems();
          return palinlen::build_product(ref.nu, ref.delta).combined.size();
        },
        "Reachable pairs when the t and q difference systems run together.");

  // Property suites.
  m.def("verify",
        [](const std::string& suite, std::uint64_t horizon) {
          palinlen::VerifyOptions opt;
          opt.horizon = horizon;
          py::list out;
          for (const palinlen::PropertyResult& r :
               palinlen::verify_suite(suite, opt)) {
            py::dict row;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["checked"] = r.checked;
            row["detail"] = r.detail;
            out.append(row);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("horizon") = 59049,
        "Run a named property suite and return one dict per property.");
}
