#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include <skein/bracket.hpp>
#include <skein/catalog.hpp>
#include <skein/errors.hpp>
#include <skein/homotopy.hpp>

using namespace skein;

namespace {

const LongDiagram& cat(const std::string& name) { return Catalog::standard().get(name).diagram; }

// Breadth-first search through R2 removals and R3 moves for a diagram with
// `target` crossings.
std::optional<LongDiagram> reduce_to(const LongDiagram& start, int target) {
  std::deque<LongDiagram> queue{start};
  std::set<std::string> seen;
  while (!queue.empty()) {
    auto d = queue.front();
    queue.pop_front();
    if (d.size() == target) return d;
    if (!seen.insert(to_json(canonical_form(d)).dump()).second) continue;
    for (const auto& e : applicable_events(d, false)) {
      if (!std::holds_alternative<CrossingChange>(e)) queue.push_back(apply_event(d, e));
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("crossing changes") {
  const auto& d = cat("3_1");
  const auto once = apply_event(d, CrossingChange{1});
  CHECK(writhe(once) == writhe(d) - 2);
  CHECK(apply_event(once, CrossingChange{1}) == d);
  CHECK_THROWS_AS(apply_event(d, CrossingChange{7}), InapplicableMove);
  CHECK_THROWS_AS(apply_event(d, R2Remove{0}), InapplicableMove);

  // the unknotted trefoil simplifies to the positive curl
  const auto reduced = reduce_to(once, 1);
  REQUIRE(reduced);
  CHECK(canonical_form(*reduced) == canonical_form(cat("kink+")));
}

TEST_CASE("R2 insert and remove are inverse") {
  const auto& d = cat("4_1");
  const auto fs = faces(d);
  for (const auto& e : applicable_events(d, true)) {
    if (!std::holds_alternative<R2Insert>(e)) continue;
    const auto up = apply_event(d, e);
    CHECK(up.size() == d.size() + 2);
    CHECK(framing(up) == framing(d));
    const auto inv = inverse_event(d, e);
    REQUIRE(inv);
    CHECK(canonical_form(apply_event(up, *inv)) == canonical_form(d));
  }
}

TEST_CASE("R3 preserves brackets and is self-inverse up to search") {
  const auto s = change_crossing(cat("3_1"), 0);
  int r3 = 0;
  for (const auto& e : applicable_events(s, false)) {
    if (!std::holds_alternative<R3>(e)) continue;
    ++r3;
    const auto t = apply_event(s, e);
    CHECK(kauffman_bracket(t) == kauffman_bracket(s));
    CHECK(framing(t) == framing(s));
    const auto inv = inverse_event(s, e);
    REQUIRE(inv);
    CHECK(canonical_form(apply_event(t, *inv)) == canonical_form(s));
  }
  CHECK(r3 > 0);
}

TEST_CASE("path validation") {
  Path empty{cat("3_1"), {}};
  const auto t0 = validate_path(empty);
  CHECK(t0.ok);
  CHECK(t0.diagrams.size() == 1);

  const auto p = Catalog::standard().scenario("trefoil_unknotting");
  const auto t = validate_path(p);
  CHECK(t.ok);
  CHECK(jones(t.diagrams.back()) == 1);

  Path bad{cat("3_1"), {CrossingChange{0}, R2Remove{0}}};
  const auto tb = validate_path(bad);
  CHECK_FALSE(tb.ok);
  CHECK(tb.failed_at == 1);
  CHECK_THROWS_AS(end_diagram(bad), InapplicableMove);
}

TEST_CASE("wall crossings") {
  CHECK(wall_crossings(Path{cat("4_1"), {}}).empty());
  const auto w = wall_crossings(Catalog::standard().scenario("trefoil_unknotting"));
  REQUIRE(w.size() == 1);
  CHECK(w[0].ind == -1);
  CHECK(w[0].singular.double_point_count() == 1);

  const auto loop = Catalog::standard().scenario("loop_41_63");
  const auto walls = wall_crossings(loop);
  REQUIRE(walls.size() == 4);
  CHECK(walls[0].ind == 1);
  CHECK(walls[1].ind == -1);
  int sum = 0;
  for (const auto& x : walls) sum += x.ind;
  CHECK(sum == 0);
}

TEST_CASE("essentialness certificates") {
  const auto c = essentialness_check(cat("3_1"), 0);
  CHECK(c.status == Essentialness::essential);
  CHECK(essentialness_check(cat("4_1"), 0).status == Essentialness::essential);
  // the crossing of a curl: both resolutions are unknots
  CHECK(essentialness_check(cat("kink+"), 0).status == Essentialness::inconclusive);
}

TEST_CASE("loops") {
  const auto& d = cat("3_1");
  CHECK(is_loop(Path{d, {CrossingChange{2}, CrossingChange{2}}}));
  CHECK_FALSE(is_loop(Catalog::standard().scenario("trefoil_unknotting")));
  CHECK(is_loop(Catalog::standard().scenario("loop_41_63")));
}

TEST_CASE("reverse and concatenate") {
  const auto p = Catalog::standard().scenario("fig3_demo");
  const auto r = reverse_path(p);
  CHECK(canonical_form(end_diagram(r)) == canonical_form(p.start));
  const auto loop = concatenate(p, r);
  CHECK(is_loop(loop));
  CHECK_THROWS(concatenate(p, p));
}

TEST_CASE("path json") {
  const auto p = Catalog::standard().scenario("loop_41_63");
  const auto back = path_from_json(to_json(p), nullptr);
  CHECK(back.start == p.start);
  CHECK(back.events == p.events);
  for (const auto& e : p.events) CHECK(event_from_json(to_json(e)) == e);
  CHECK_THROWS_AS(event_from_json(nlohmann::json{{"op", "r1"}}), ValidationError);
}

TEST_CASE("property: random moves keep diagrams valid with fixed framing and have inverses") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const auto d = random_diagram(rng, 8);
    if (d.size() == 0) continue;
    const auto e = random_event(d, rng, false, 10);
    const auto t = apply_event(d, e);
    CHECK(validate(t).valid);
    CHECK(framing(t) == framing(d));
    const auto inv = inverse_event(d, e);
    REQUIRE(inv);
    CHECK(canonical_form(apply_event(t, *inv)) == canonical_form(d));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("property: framing bookkeeping on random paths") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    auto d = random_diagram(rng, 8);
    if (d.size() == 0) continue;
    const auto p = random_path(d, rng, 10, true, 10);
    const auto t = validate_path(p);
    REQUIRE(t.ok);
    int ind = 0;
    for (const auto& w : wall_crossings(p)) ind += w.ind;
    CHECK(t.framing.back().writhe == t.framing.front().writhe + 2 * ind);
    CHECK(t.framing.back().whitney == t.framing.front().whitney);
    const auto back = reverse_path(p);
    CHECK(canonical_form(end_diagram(back)) == canonical_form(p.start));
  }
}
