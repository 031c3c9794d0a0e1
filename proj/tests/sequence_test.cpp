#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rcc8seq/sequence.hpp"

using namespace rcc8seq;

TEST_CASE("componentwise operators") {
  Semantics sem = Semantics::neighbour(2);
  SeqRelation a(sem, {TPP, PO});
  CHECK(seq_converse(a) == SeqRelation(sem, {TPPI, PO}));

  SeqRelation id(sem, {EQ, EQ});
  SeqRelation r(sem, {DC | EC, PO | TPP});
  CHECK(seq_compose(id, r) == r);
  CHECK(seq_compose(r, id) == r);

  CHECK(seq_intersect(SeqRelation(sem, {DC | EC, PO}), SeqRelation(sem, {EC | PO, PO | EQ})) ==
        SeqRelation(sem, {EC, PO}));
  CHECK(seq_union(SeqRelation(sem, {DC, PO}), SeqRelation(sem, {EC, PO})) ==
        SeqRelation(sem, {DC | EC, PO}));
}

TEST_CASE("operands must share semantics") {
  SeqRelation a(Semantics::neighbour(2), {TPP, PO});
  SeqRelation b(Semantics::neighbour(3), {TPP, PO, EQ});
  SeqRelation c(Semantics::partition(2), {TPP, PO});
  CHECK_THROWS_AS(seq_union(a, b), std::invalid_argument);
  CHECK_THROWS_AS(seq_intersect(a, c), std::invalid_argument);
  CHECK_THROWS_AS(SeqRelation(Semantics::neighbour(2), {TPP}), std::invalid_argument);
}

TEST_CASE("worked projection closure at neighbouring instants") {
  Semantics sem = Semantics::neighbour(3);
  SeqRelation r(sem, {TPP | NTPP | TPPI | NTPPI, PO | EQ, EC | DC});
  SeqRelation closed = projection_closure(r);
  CHECK(closed == SeqRelation(sem, {TPP | TPPI, PO, EC}));
  CHECK(is_conv_consistent(closed));
}

TEST_CASE("worked projection closure over a time partition") {
  Semantics sem = Semantics::partition(4);
  SeqRelation r(sem, {TPP | NTPP, PO | EQ, EC | DC, DC});
  CHECK(projection_closure(r) == SeqRelation(sem, {TPP, PO, EC, DC}));
}

TEST_CASE("conv-consistency spot values") {
  Semantics sem3 = Semantics::neighbour(3);
  CHECK(is_conv_consistent(SeqRelation(sem3, {TPP | TPPI, PO, EC})));
  Semantics sem2 = Semantics::neighbour(2);
  CHECK_FALSE(is_conv_consistent(SeqRelation(sem2, {PO, Relation::none()})));
  CHECK_FALSE(is_conv_consistent(SeqRelation(sem2, {DC, PO})));
}

TEST_CASE("length one sequences have no adjacency constraints") {
  Semantics sem = Semantics::neighbour(1);
  SeqRelation u = SeqRelation::universal(sem);
  CHECK(projection_closure(u) == u);
  SeqRelation b(sem, {NTPP});
  CHECK(is_conv_consistent(b));
  CHECK_FALSE(is_conv_consistent(SeqRelation(sem, {Relation::none()})));
}

TEST_CASE("an empty component empties the whole closure") {
  Semantics sem = Semantics::neighbour(4);
  SeqRelation r(sem, {B_RCC8, Relation::none(), B_RCC8, B_RCC8});
  SeqRelation closed = projection_closure(r);
  for (int i = 1; i <= 4; ++i) CHECK(closed.at(i).empty());
}

TEST_CASE("projection closure is idempotent, contractive and monotone") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    Semantics sem = oracles::random_semantics(rng, 6);
    SeqRelation r = oracles::random_seq_relation(sem, rng);
    SeqRelation closed = projection_closure(r);
    CHECK(projection_closure(closed) == closed);
    CHECK(closed.refines(r));

    SeqRelation smaller = seq_intersect(r, oracles::random_seq_relation(sem, rng));
    CHECK(projection_closure(smaller).refines(closed));
  }
}

TEST_CASE("projection closure does not depend on the update order") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    Semantics sem = oracles::random_semantics(rng, 6);
    SeqRelation r = oracles::random_seq_relation(sem, rng);
    CHECK(projection_closure(r) == oracles::sweep_projection_closure(r, &rng));
  }
}

TEST_CASE("basic pairs are conv-consistent exactly on projection-table edges") {
  Semantics nsem = Semantics::neighbour(2);
  for (Basic b : kAllBasics)
    for (Basic b2 : kAllBasics) {
      bool edge = project(ProjectionKind::Neighbour, Relation::basic(b)).contains(b2);
      CHECK(is_conv_consistent(SeqRelation(nsem, {Relation::basic(b), Relation::basic(b2)})) ==
            edge);
    }
  Semantics psem = Semantics::partition(2);
  for (Basic b : kAllBasics)
    for (Basic b2 : kAllBasics) {
      bool down_edge = project(ProjectionKind::DominanceDown, Relation::basic(b)).contains(b2);
      bool up_edge = project(ProjectionKind::DominanceUp, Relation::basic(b2)).contains(b);
      CHECK(down_edge == up_edge);
      CHECK(is_conv_consistent(SeqRelation(psem, {Relation::basic(b), Relation::basic(b2)})) ==
            down_edge);
    }
}

TEST_CASE("sequence text round trip") {
  Semantics sem = Semantics::partition(4);
  SeqRelation r(sem, {TPP | NTPP, PO | EQ, EC | DC, DC});
  CHECK(to_string(r) == "{TPP,NTPP} {PO,EQ} {DC,EC} {DC}");
  CHECK(parse_seq_relation(sem, to_string(r)) == r);
  CHECK(parse_seq_relation(sem, "* {} {DC} {dc,ec}") ==
        SeqRelation(sem, {B_RCC8, Relation::none(), DC, DC | EC}));
  CHECK_THROWS_AS(parse_seq_relation(sem, "{DC} {DC}"), std::invalid_argument);
}
