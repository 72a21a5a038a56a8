#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expc/cm.hpp"
#include "expc/corpus.hpp"
#include "expc/distraction.hpp"
#include "expc/errors.hpp"
#include "expc/io.hpp"
#include "expc/oracle.hpp"
#include "expc/rank.hpp"
#include "expc/simplicial.hpp"

namespace py = pybind11;
using namespace expc;

namespace {

// Accepts ints, strings like "1/2" and fractions.Fraction.
RationalVector to_beta(const py::iterable& values) {
  RationalVector out;
  for (const auto& v : values) out.push_back(parse_rational(std::string(py::str(v))));
  return out;
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GradingMatrix to_grading(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw ValidationError("grading matrix needs at least one row");
  std::vector<std::int64_t> entries;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw ValidationError("grading matrix rows differ in length");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return GradingMatrix(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), entries);
}

std::vector<std::vector<std::int64_t>> rows_of(const GradingMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  return out;
}

SimplicialComplex to_complex(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> fs;
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : f) {
      if (v < 1 || v > n) throw ValidationError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      s.insert(v - 1);
    }
    fs.push_back(s);
  }
  return SimplicialComplex(n, fs);
}

std::vector<std::vector<int>> facets_of(const SimplicialComplex& c) {
  std::vector<std::vector<int>> out;
  for (VertexSet f : c.facets()) out.push_back(f.labels());
  return out;
}

}  // namespace

PYBIND11_MODULE(_expc, m) {
  m.doc() = "Exponent complexes of monomial ideals and ranks of their Euler-operator systems";
  m.attr("__version__") = kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init([](int n, std::vector<ExponentVector> gens) { return MonomialIdeal::minimalize(std::move(gens), n); }),
           py::arg("num_vars"), py::arg("generators"))
      .def_static("parse", [](const std::string& text) { return parse_ideal(text); })
      .def_property_readonly("num_vars", &MonomialIdeal::num_vars)
      .def_property_readonly("generators", &MonomialIdeal::generators)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__str__", &serialize_ideal)
      .def("__repr__", [](const MonomialIdeal& I) { return "Ideal(" + to_json(I).dump() + ")"; });

  m.def("radical", &radical);
  m.def("krull_dimension", &krull_dimension);
  m.def("degree", &degree);
  m.def("is_unmixed", &is_unmixed);
  m.def("components", [](const MonomialIdeal& I) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& c : components(I)) out.emplace_back(c.sigma.labels(), c.base);
    return out;
  });
  m.def("exponent_complex", [](const MonomialIdeal& I, const py::iterable& b) {
    return facets_of(exponent_complex_at(I, to_beta(b)));
  });
  m.def("exponent_catalog", [](const MonomialIdeal& I) {
    std::vector<std::pair<std::vector<std::vector<int>>, std::vector<int>>> out;
    for (const auto& e : exponent_catalog(I)) out.emplace_back(facets_of(e.complex), e.witness);
    return out;
  });
  m.def("is_cohen_macaulay", [](const MonomialIdeal& I, bool full) {
    return to_python(to_json(is_cohen_macaulay_ideal(I, {full, 1})));
  }, py::arg("ideal"), py::arg("full") = false);
  m.def("polarize", [](const MonomialIdeal& I) {
    const auto p = polarize(I);
    return py::make_tuple(p.ideal, p.names);
  });

  m.def("validate", [](const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::int64_t> entries;
    for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
    const int d = static_cast<int>(rows.size());
    const auto v = validate(d, d ? static_cast<int>(rows[0].size()) : 0, entries);
    return v.violations;
  });
  m.def("generate_generic", [](int n, int d, std::uint64_t seed) { return rows_of(generate_generic(n, d, seed)); },
        py::arg("num_vars"), py::arg("rows"), py::arg("seed") = 0);

  m.def("rank", [](const MonomialIdeal& I, const std::vector<std::vector<std::int64_t>>& A, const py::iterable& beta) {
    return rank_general(I, to_grading(A), to_beta(beta));
  });
  m.def("rank_oracle", [](const MonomialIdeal& I, const std::vector<std::vector<std::int64_t>>& A,
                          const py::iterable& beta) { return rank_oracle(I, to_grading(A), to_beta(beta)); });
  m.def("exponents", [](const MonomialIdeal& I, const std::vector<std::vector<std::int64_t>>& A,
                        const py::iterable& beta) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : exponents_of(I, to_grading(A), to_beta(beta))) {
      std::vector<std::string> row;
      for (const auto& q : p) row.push_back(format_rational(q));
      out.push_back(row);
    }
    return out;
  });

  m.def("reduced_homology", [](int n, const std::vector<std::vector<int>>& facets) {
    const auto c = to_complex(n, facets);
    std::vector<long> out;
    const auto h = reduced_homology(c);
    for (int deg = -1; deg <= c.dimension(); ++deg) out.push_back(h.rank(deg));
    return out;
  });
  m.def("is_cohen_macaulay_complex", [](int n, const std::vector<std::vector<int>>& facets) {
    return is_cohen_macaulay_complex(to_complex(n, facets)).cohen_macaulay;
  });
  m.def("rank_squarefree", [](int n, const std::vector<std::vector<int>>& facets, int d) {
    return rank_squarefree_closed(to_complex(n, facets), d);
  });

  m.def("verify", [](const std::string& spec, std::uint64_t seed, int jobs) {
    const auto parsed = parse_corpus_spec(spec);
    VerifyReport report;
    {
      py::gil_scoped_release release;
      report = verify_corpus(parsed, seed, jobs);
    }
    return to_python(to_json(report));
  }, py::arg("spec"), py::arg("seed") = 0, py::arg("jobs") = 1);
}
