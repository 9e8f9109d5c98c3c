#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace trisym;
using trisym::testing::ctx;

TEST_CASE("subgroup counts") {
  CHECK(ctx(GroupKind::A4).lattice.count() == 10);
  CHECK(ctx(GroupKind::S4).lattice.count() == 30);
  CHECK(ctx(GroupKind::A5).lattice.count() == 59);
}

TEST_CASE("every listed subgroup is closed and contains the identity") {
  for (GroupKind kind : {GroupKind::A4, GroupKind::S4, GroupKind::A5}) {
    const auto& g = ctx(kind).action.group;
    const auto& lattice = ctx(kind).lattice;
    CHECK(lattice.order_of(0) == 1);
    CHECK(lattice.order_of(lattice.full_index()) == g.size());
    for (int h = 0; h < lattice.count(); ++h) {
      REQUIRE(lattice.contains(h, GroupTable::kIdentity));
      std::vector<int> members;
      for (int e = 0; e < g.size(); ++e)
        if (lattice.contains(h, e)) members.push_back(e);
      for (int x : members) {
        REQUIRE(lattice.contains(h, g.inv(x)));
        for (int y : members) REQUIRE(lattice.contains(h, g.mul(x, y)));
      }
      CHECK(g.size() % lattice.order_of(h) == 0);
    }
  }
}

TEST_CASE("Moebius identity over the lattice") {
  for (GroupKind kind : {GroupKind::A4, GroupKind::S4, GroupKind::A5}) {
    const auto& lattice = ctx(kind).lattice;
    CHECK(lattice.mu_top[static_cast<std::size_t>(lattice.full_index())] == 1);
    for (int h = 0; h < lattice.count(); ++h) {
      int sum = 0;
      for (int k = 0; k < lattice.count(); ++k)
        if (lattice.leq(h, k)) sum += lattice.mu_top[static_cast<std::size_t>(k)];
      CHECK(sum == (h == lattice.full_index() ? 1 : 0));
    }
  }
}
