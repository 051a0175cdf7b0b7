#include <catch2/catch_amalgamated.hpp>

#include "cedga/surgery.hpp"

using namespace cedga;

namespace {

// Disk with four points forming two sphere pieces {1,2} and {3,4}.
MarkedSurface two_sphere_disk() {
  MarkedSurface s;
  SurfaceComponent comp;
  BoundaryCircle circ;
  circ.points = {
      MarkedPoint{"1", "A", false, 0},
      MarkedPoint{"2", "A", false, 0},
      MarkedPoint{"3", "B", false, 0},
      MarkedPoint{"4", "B", false, 0},
  };
  comp.circles.push_back(circ);
  s.components.push_back(comp);
  return s;
}

MarkedSurface adjacent_sphere_with_stop() {
  MarkedSurface s;
  SurfaceComponent comp;
  BoundaryCircle circ;
  circ.points = {
      MarkedPoint{"1", "P", false, 0},
      MarkedPoint{"2", "P", false, 0},
      MarkedPoint{"3", "s3", true, 0},
  };
  comp.circles.push_back(circ);
  s.components.push_back(comp);
  return s;
}

// One disk whose two marked points both belong to a single sphere piece.
MarkedSurface lone_sphere_disk() {
  MarkedSurface s;
  SurfaceComponent comp;
  BoundaryCircle circ;
  circ.points = {
      MarkedPoint{"1", "P", false, 0},
      MarkedPoint{"2", "P", false, 0},
  };
  comp.circles.push_back(circ);
  s.components.push_back(comp);
  return s;
}

// A sphere piece bridging two one-point disks.
MarkedSurface bridging_sphere() {
  MarkedSurface s;
  for (int i = 1; i <= 2; ++i) {
    SurfaceComponent comp;
    BoundaryCircle circ;
    circ.points = {MarkedPoint{std::to_string(i), "P", false, 0}};
    comp.circles.push_back(circ);
    s.components.push_back(comp);
  }
  return s;
}

}  // namespace

TEST_CASE("handle attachment produces the expected surfaces") {
  // Disk + one handle at a two-point sphere: annulus.
  auto a = attach_handles(lone_sphere_disk());
  REQUIRE(a.ok());
  REQUIRE(a->parts.size() == 1);
  CHECK(a->parts[0].euler == 0);
  CHECK(a->parts[0].circles == 2);
  CHECK(a->parts[0].rays == 0);
  CHECK(a->cocores == std::vector<std::string>{"P"});

  // Disk + half-handle at a stop: still a disk, boundary cut into one ray.
  auto d = attach_handles(stop_disk(1));
  REQUIRE(d.ok());
  REQUIRE(d->parts.size() == 1);
  CHECK(d->parts[0].euler == 1);
  CHECK(d->parts[0].circles == 0);
  CHECK(d->parts[0].rays == 1);

  auto d3 = attach_handles(stop_disk(3));
  REQUIRE(d3.ok());
  CHECK(d3->parts[0].euler == 1);
  CHECK(d3->parts[0].circles == 0);
  CHECK(d3->parts[0].rays == 3);

  // Disk + two handles: pair of pants.
  auto t = attach_handles(two_sphere_disk());
  REQUIRE(t.ok());
  REQUIRE(t->parts.size() == 1);
  CHECK(t->parts[0].euler == -1);
  CHECK(t->parts[0].circles == 3);
  CHECK(t->parts[0].rays == 0);

  // A handle bridging two disks merges them into one disk.
  auto b = attach_handles(bridging_sphere());
  REQUIRE(b.ok());
  REQUIRE(b->parts.size() == 1);
  CHECK(b->parts[0].comps.size() == 2);
  CHECK(b->parts[0].euler == 1);
  CHECK(b->parts[0].circles == 1);
  CHECK(b->parts[0].rays == 0);

  // Empty surface: nothing to attach.
  auto e = attach_handles(MarkedSurface{});
  REQUIRE(e.ok());
  CHECK(e->cocores.empty());
  auto ec = surgered_boundary_chords(*e, 2, 6);
  REQUIRE(ec.ok());
  CHECK(ec->empty());
}

TEST_CASE("cutting along a skipped handle restores the counts") {
  auto cut = attach_handles(lone_sphere_disk(), std::string("P"));
  REQUIRE(cut.ok());
  CHECK(cut->parts[0].euler == 1);
  CHECK(cut->parts[0].circles == 1);
  CHECK(cut->parts[0].rays == 0);
  CHECK(cut->cocores.empty());

  auto missing = attach_handles(lone_sphere_disk(), std::string("Q"));
  CHECK_FALSE(missing.ok());
}

TEST_CASE("null homotopic co-cores by cut and count") {
  // A sphere alone on its disk: cutting gives back a disk.
  auto lone = lone_sphere_disk();
  auto r0 = cocore_null_homotopic(lone, "P");
  REQUIRE(r0.ok());
  CHECK(*r0.value);

  // Adjacent sphere points sharing the disk with a stop: the cut piece keeps
  // the stop ray, so it is not a closed disk.
  auto s = adjacent_sphere_with_stop();
  auto r = cocore_null_homotopic(s, "P");
  REQUIRE(r.ok());
  CHECK_FALSE(*r.value);
  auto r2 = cocore_null_homotopic(s, "s3");
  REQUIRE(r2.ok());
  CHECK_FALSE(*r2.value);
  CHECK_FALSE(find_null_homotopic_cocore(s).has_value());

  // Two spheres on one disk: cutting either leaves the other handle.
  auto t = two_sphere_disk();
  for (const char* pid : {"A", "B"}) {
    auto rt = cocore_null_homotopic(t, pid);
    REQUIRE(rt.ok());
    CHECK_FALSE(*rt.value);
  }
  // Interleaved points: still essential.
  std::swap(t.components[0].circles[0].points[1], t.components[0].circles[0].points[2]);
  auto ra = cocore_null_homotopic(t, "A");
  REQUIRE(ra.ok());
  CHECK_FALSE(*ra.value);

  // A lone stop on its own disk: the cut piece is the bare disk.
  auto d1 = stop_disk(1);
  auto rs = cocore_null_homotopic(d1, "s1");
  REQUIRE(rs.ok());
  CHECK(*rs.value);

  // Stops of the n-stop disk (n >= 2): essential.
  auto d3 = stop_disk(3);
  CHECK_FALSE(find_null_homotopic_cocore(d3).has_value());

  // A sphere bridging two one-point disks: either side peels off a disk.
  auto br = bridging_sphere();
  auto rb = cocore_null_homotopic(br, "P");
  REQUIRE(rb.ok());
  CHECK(*rb.value);
  CHECK(find_null_homotopic_cocore(br) == "P");

  // The surgered-surface overload rejects unknown co-cores.
  auto ss = attach_handles(br);
  REQUIRE(ss.ok());
  CHECK_FALSE(cocore_null_homotopic(*ss, "X").ok());
  auto rb2 = cocore_null_homotopic(*ss, "P");
  REQUIRE(rb2.ok());
  CHECK(*rb2.value);
}

TEST_CASE("boundary arcs of the surgered two-stop disk") {
  auto ss = attach_handles(stop_disk(2));
  REQUIRE(ss.ok());
  auto chords = surgered_boundary_chords(*ss, 2, 6);
  REQUIRE(chords.ok());
  REQUIRE(chords->size() == 2);
  auto s = stop_disk(2);
  CHECK(word_to_string(chord_word_to_word(s, (*chords)[0].word)) == "c[1,2]^0");
  CHECK(word_to_string(chord_word_to_word(s, (*chords)[1].word)) == "c[2,1]^1");
  CHECK((*chords)[0].weight == Weight(1));
  CHECK((*chords)[1].weight == Weight(3));
}

TEST_CASE("boundary arcs can run through intermediate markers") {
  auto br = bridging_sphere();
  auto ss = attach_handles(br);
  REQUIRE(ss.ok());
  auto chords = surgered_boundary_chords(*ss, 2, 6);
  REQUIRE(chords.ok());
  // One-step arcs in both directions plus the two two-step continuations.
  CHECK(chords->size() == 4);
  for (const auto& c : *chords) {
    CHECK(chord_word_weight(br, c.word) == c.weight);
    CHECK(is_unconcatable(br, c.word));
  }
}

TEST_CASE("surgered arcs biject onto unconcatable short words") {
  for (const auto& s : all_disk_surfaces(4)) {
    INFO("surface with " << s.components[0].circles[0].points.size() << " points");
    auto cmp = compare_surgery_bijection(s, 2, 5);
    REQUIRE(cmp.ok());
    for (const auto& m : cmp->mismatches) INFO(m);
    CHECK(cmp->bijective);
    CHECK(cmp->chord_count == cmp->word_count);
  }
  auto cmp = compare_surgery_bijection(bridging_sphere(), 2, 6);
  REQUIRE(cmp.ok());
  CHECK(cmp->bijective);
  CHECK(cmp->chord_count == 4);
}
