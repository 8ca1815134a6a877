#include <doctest.h>

#include <string>

#include "cgeom/frame.hpp"

using namespace cgeom;

namespace {

const std::vector<std::string> names3{"e1", "e2", "e3"};

Tensor identity_metric(std::size_t n) {
  Tensor g(n, 0, 2);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = Scalar(1);
  return g;
}

void set_bracket(Tensor& c, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  c(k, i, j) = v;
  c(k, j, i) = -v;
}

std::string validation_message(const Tensor& c, const Tensor& g, const std::vector<std::string>& names = names3) {
  try {
    FrameManifold("m", names, c, g);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("brackets and inner products") {
  Tensor c(3, 1, 2);
  set_bracket(c, 1, 2, 0, Scalar(2));
  const FrameManifold m("h3", names3, c, identity_metric(3));
  CHECK(m.bracket(m.basis(1), m.basis(2)) == Scalar(2) * m.basis(0));
  CHECK(m.bracket(m.basis(2), m.basis(1)) == Scalar(-2) * m.basis(0));
  CHECK(m.inner(m.basis(0) + m.basis(1), m.basis(1)) == Scalar(1));
  CHECK(m.half_dim() == 1);
  CHECK(m.index_of("e3") == 2u);
  CHECK_FALSE(m.index_of("e4").has_value());
}

TEST_CASE("Jacobi violation names the triple") {
  Tensor c(3, 1, 2);
  set_bracket(c, 0, 1, 0, Scalar(1));
  set_bracket(c, 0, 2, 2, Scalar(1));
  set_bracket(c, 1, 2, 1, Scalar(1));
  CHECK(find_jacobi_violation(c).has_value());
  const std::string msg = validation_message(c, identity_metric(3));
  CHECK(msg.find("Jacobi") != std::string::npos);
  CHECK(msg.find("e1") != std::string::npos);
}

TEST_CASE("structural validation") {
  Tensor c(3, 1, 2);
  Tensor singular = identity_metric(3);
  singular(2, 2) = Scalar(0);
  CHECK(validation_message(c, singular).find("degenerate") != std::string::npos);

  Tensor asym = identity_metric(3);
  asym(0, 1) = Scalar(1);
  CHECK(validation_message(c, asym).find("symmetric") != std::string::npos);

  Tensor bad(3, 1, 2);
  bad(0, 1, 2) = Scalar(1);
  CHECK(validation_message(bad, identity_metric(3)).find("antisymmetric") != std::string::npos);

  CHECK(validation_message(Tensor(4, 1, 2), identity_metric(4), {"e1", "e2", "e3", "e4"}).find("odd") !=
        std::string::npos);
  CHECK(validation_message(c, identity_metric(3), {"e1", "e1", "e3"}).find("distinct") != std::string::npos);
}

TEST_CASE("metric inverse") {
  Tensor g(3, 0, 2);
  g(0, 0) = Scalar(2);
  g(1, 1) = g(2, 2) = Scalar(1);
  g(0, 1) = g(1, 0) = Scalar(1);
  const FrameManifold m("m", names3, Tensor(3, 1, 2), g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < 3; ++k) acc += m.inverse_metric()(i, k) * g(k, j);
      CHECK(acc == Scalar(i == j ? 1 : 0));
    }
  CHECK(m.flat(m.basis(0)) == Vector{Scalar(2), Scalar(1), Scalar(0)});
}

TEST_CASE("parametrized structure constants") {
  const Scalar a = Scalar::parameter();
  Tensor c(3, 1, 2);
  set_bracket(c, 0, 1, 2, Scalar(1) + a);
  set_bracket(c, 1, 2, 0, Scalar(2));
  set_bracket(c, 2, 0, 1, Scalar(1) - a);
  const FrameManifold m("nk", names3, c, identity_metric(3), "a");
  CHECK(m.var() == "a");
  CHECK(m.bracket(m.basis(0), m.basis(1)) == (Scalar(1) + a) * m.basis(2));
}
