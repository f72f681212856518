#include <random>

#include <doctest.h>

#include "ngdvqe/ansatz.hpp"
#include "ngdvqe/error.hpp"
#include "test_support.hpp"

using namespace ngdvqe;

TEST_CASE("RY n=2 d=1 linear") {
  const Circuit c = build(AnsatzSpec::ry(2, 1));
  CHECK(c.n_params() == 4);
  CHECK(c.count(GateKind::CX) == 1);
  CHECK(c.count(GateKind::RY) == 4);
}

TEST_CASE("RY n=4 d=2 linear") {
  const Circuit c = build(AnsatzSpec::ry(4, 2));
  CHECK(c.n_params() == 12);
  CHECK(c.count(GateKind::CX) == 6);
}

TEST_CASE("RY full entanglement couples every pair") {
  const Circuit c = build(AnsatzSpec::ry(4, 2, Entanglement::Full));
  CHECK(c.n_params() == 12);
  CHECK(c.count(GateKind::CX) == 12);
}

TEST_CASE("product RX n=8") {
  const AnsatzSpec spec = AnsatzSpec::product_rx(8);
  const Circuit c = build(spec);
  CHECK(c.n_params() == 8);
  CHECK(c.count(GateKind::CX) + c.count(GateKind::CZ) == 0);
  CHECK(c.count(GateKind::RX) == 8);
  for (const Gate& g : c.gates()) CHECK(g.angle_scale == 1.0);
}

TEST_CASE("layout of the two-qubit RY circuit") {
  const Circuit c = build(AnsatzSpec::ry(2, 1));
  const auto g = c.gates();
  REQUIRE(g.size() == 5);
  CHECK(*g[0].parameter_slot == 0);
  CHECK(*g[1].parameter_slot == 2);
  CHECK(g[2].kind == GateKind::CX);
  CHECK(*g[2].control == 0);
  CHECK(g[2].target == 1);
  CHECK(*g[3].parameter_slot == 1);
  CHECK(*g[4].parameter_slot == 3);
  CHECK(g[0].angle_scale == 2.0);

  AnsatzSpec layer = AnsatzSpec::ry(2, 1);
  layer.order = ParameterOrder::LayerMajor;
  layer.entangler = EntanglingGate::CZ;
  layer.rotation = RotationConvention::Half;
  const Circuit d = build(layer);
  CHECK(*d.gates()[1].parameter_slot == 1);
  CHECK(d.gates()[2].kind == GateKind::CZ);
  CHECK(d.gates()[0].angle_scale == 1.0);
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(build(AnsatzSpec::ry(0, 1)), InvalidArgument);
  CHECK_THROWS_AS(build(AnsatzSpec::ry(2, -1)), InvalidArgument);
  CHECK_THROWS_AS(parse_entanglement("ring"), InvalidArgument);
  CHECK(parse_entanglement("full") == Entanglement::Full);
  CHECK(to_string(Entanglement::Linear) == "linear");
}

TEST_CASE("property: parameter count (d+1)n") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= 4; ++d) {
      for (auto e : {Entanglement::Linear, Entanglement::Full}) {
        const AnsatzSpec spec = AnsatzSpec::ry(n, d, e);
        CHECK(build(spec).n_params() == static_cast<std::size_t>((d + 1) * n));
        CHECK(spec.n_params() == static_cast<std::size_t>((d + 1) * n));
      }
    }
  }
}

TEST_CASE("property: all-zero angles leave |0...0> unchanged") {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= 3; ++d) {
      const Circuit c = build(AnsatzSpec::ry(n, d, Entanglement::Full));
      const Statevector out =
          apply_circuit(c, ParameterVector::Zero(static_cast<Eigen::Index>(c.n_params())),
                        Statevector(static_cast<std::size_t>(n)));
      CHECK(out[0] == Complex(1, 0));
      for (std::size_t i = 1; i < out.dimension(); ++i) CHECK(out[i] == Complex(0, 0));
    }
  }
}
