#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "cocomp/generate.hpp"
#include "cocomp/graph.hpp"
#include "cocomp/lexdfs.hpp"
#include "cocomp/partition.hpp"
#include "cocomp/refine.hpp"
#include "cocomp/verify.hpp"

namespace py = pybind11;
using namespace cocomp;

namespace {

Ordering to_ordering(const std::vector<vertex_t>& seq) { return Ordering(seq); }

std::vector<vertex_t> to_list(const Ordering& ord) {
    return {ord.seq().begin(), ord.seq().end()};
}

py::object violation_out(const CheckResult& res) {
    if (!res) return py::none();
    std::string kind = res->str().substr(0, res->str().find(' '));
    return py::make_tuple(kind, res->witness);
}

Partition make_partition(vertex_t n, const std::vector<std::vector<vertex_t>>& classes) {
    Partition part;
    part.classes = classes;
    part.class_of.assign(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (vertex_t v : classes[i]) {
            if (v >= n || seen[v]) throw std::invalid_argument("classes must partition 0..n-1");
            seen[v] = 1;
            part.class_of[v] = static_cast<std::uint32_t>(i);
        }
    }
    for (vertex_t v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("classes must partition 0..n-1");
    return part;
}

py::dict counters_dict(const Counters& c) {
    py::dict d;
    d["label_touches"] = c.label_touches;
    d["bin_moves"] = c.bin_moves;
    d["pivot_pushes"] = c.pivot_pushes;
    d["refine_moves"] = c.refine_moves;
    d["reorder_touches"] = c.reorder_touches;
    return d;
}

} // namespace

PYBIND11_MODULE(cocomp, m) {
    m.doc() = "LexDFS cocomparability orderings: linear-time pipeline, oracle and verifiers";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](vertex_t n, std::vector<std::pair<vertex_t, vertex_t>> edges) {
                 return Graph::from_edges(n, std::move(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("neighbors",
             [](const Graph& g, vertex_t v) {
                 auto nb = g.neighbors(v);
                 return std::vector<vertex_t>(nb.begin(), nb.end());
             })
        .def("has_edge", &Graph::has_edge)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("load_graph", [](const std::string& text) {
        std::istringstream in(text);
        return load_graph(in);
    });
    m.def("save_graph", [](const Graph& g) {
        std::ostringstream out;
        save_graph(out, g);
        return out.str();
    });

    m.def(
        "reorder_adjacency",
        [](const Graph& g, const std::vector<vertex_t>& pi) {
            return reorder_adjacency(g, to_ordering(pi));
        },
        py::arg("graph"), py::arg("pi"));

    m.def(
        "initial_labels",
        [](const Graph& g, const std::vector<vertex_t>& sigma) {
            return compute_initial_labels(g, to_ordering(sigma)).label;
        },
        py::arg("graph"), py::arg("sigma"));

    m.def(
        "partition_classes",
        [](const Graph& g, const std::vector<vertex_t>& sigma, bool plus) {
            return build_partition_classes(g, to_ordering(sigma),
                                           plus ? ClassOrder::SigmaReverse : ClassOrder::Sigma)
                .classes;
        },
        py::arg("graph"), py::arg("sigma"), py::arg("plus") = false);

    m.def(
        "cclexdfs",
        [](const Graph& g, const std::vector<vertex_t>& sigma, bool plus) {
            return to_list(
                cclexdfs(g, to_ordering(sigma), plus ? Mode::Plus : Mode::Default).tau);
        },
        py::arg("graph"), py::arg("sigma"), py::arg("plus") = false);

    m.def(
        "cclexdfs_with_counters",
        [](const Graph& g, const std::vector<vertex_t>& sigma, bool plus) {
            auto result = cclexdfs(g, to_ordering(sigma), plus ? Mode::Plus : Mode::Default);
            return py::make_tuple(to_list(result.tau), counters_dict(result.counters));
        },
        py::arg("graph"), py::arg("sigma"), py::arg("plus") = false);

    m.def(
        "lexdfs",
        [](const Graph& g, const std::vector<vertex_t>& ref, bool rightmost,
           std::optional<vertex_t> start) {
            TieRule tie{rightmost ? TieBreak::RightmostInRef : TieBreak::LeftmostInRef,
                        to_ordering(ref)};
            return to_list(start ? lexdfs_from(g, *start, tie) : lexdfs_generic(g, tie));
        },
        py::arg("graph"), py::arg("ref"), py::arg("rightmost") = false,
        py::arg("start") = std::nullopt);

    m.def(
        "lexdfs_plus",
        [](const Graph& g, const std::vector<vertex_t>& sigma) {
            return to_list(lexdfs_plus_oracle(g, to_ordering(sigma)));
        },
        py::arg("graph"), py::arg("sigma"));

    m.def(
        "check_umbrella_free",
        [](const Graph& g, const std::vector<vertex_t>& ord) {
            return violation_out(check_umbrella_free(g, to_ordering(ord)));
        },
        py::arg("graph"), py::arg("order"));
    m.def(
        "check_4pc",
        [](const Graph& g, const std::vector<vertex_t>& ord) {
            return violation_out(check_4pc(g, to_ordering(ord)));
        },
        py::arg("graph"), py::arg("order"));
    m.def(
        "check_flipping",
        [](const Graph& g, const std::vector<vertex_t>& sigma, const std::vector<vertex_t>& tau) {
            return violation_out(check_flipping(g, to_ordering(sigma), to_ordering(tau)));
        },
        py::arg("graph"), py::arg("sigma"), py::arg("tau"));
    m.def(
        "check_partition",
        [](const Graph& g, const std::vector<vertex_t>& sigma,
           const std::vector<std::vector<vertex_t>>& classes) {
            return violation_out(check_partition(g, to_ordering(sigma),
                                                 make_partition(g.num_vertices(), classes)));
        },
        py::arg("graph"), py::arg("sigma"), py::arg("classes"));

    m.def("brute_force_cocomp_order", [](const Graph& g) -> py::object {
        auto ord = brute_force_cocomp_order(g);
        if (!ord) return py::none();
        return py::cast(to_list(*ord));
    });

    m.def(
        "gen_random_cocomp",
        [](vertex_t n, double p, std::uint64_t seed) {
            auto [g, sigma] = gen_random_cocomp({n, p, seed});
            return py::make_tuple(std::move(g), to_list(sigma));
        },
        py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def(
        "gen_layered_cocomp",
        [](vertex_t n, vertex_t width, double q, std::uint64_t seed) {
            auto [g, sigma] = gen_layered_cocomp({n, width, q, seed});
            return py::make_tuple(std::move(g), to_list(sigma));
        },
        py::arg("n"), py::arg("width") = 8, py::arg("q") = 0.5, py::arg("seed") = 1);

    m.def("fixture", [](const std::string& name) {
        auto which = fixture_by_name(name);
        if (!which) throw std::invalid_argument("unknown fixture: " + name);
        auto [g, sigma] = gen_fixture(*which);
        return py::make_tuple(std::move(g), to_list(sigma));
    });
}
