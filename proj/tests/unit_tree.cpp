#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "megs/generators.hpp"
#include "megs/tree.hpp"

using namespace megs;
using namespace megs::testing;

TEST_CASE("level offsets and sizes") {
  CHECK(level_offset(3, 0) == 0);
  CHECK(level_offset(3, 1) == 1);
  CHECK(level_offset(3, 2) == 4);
  CHECK(level_offset(3, 3) == 13);
  CHECK(level_size(5, 0) == 1);
  CHECK(level_size(5, 3) == 125);
}

TEST_CASE("rooted generator acts as the standard cycle") {
  Portrait a = rooted_a(3, 2);
  CHECK(a.act(Vertex{1}) == Vertex{2});
  CHECK(a.act(Vertex{2}) == Vertex{3});
  CHECK(a.act(Vertex{3}) == Vertex{1});
  CHECK(a.act(Vertex{3, 2}) == Vertex{1, 2});
  CHECK(a.pow(3).is_identity());
}

TEST_CASE("directed generator labels and action") {
  auto datum = gupta_sidki();
  Portrait b = directed_generator(datum, 1, 1, 2);
  // recursion along (3,3,...): siblings 1,2 of the path carry a^1, a^2
  CHECK(b.label(Vertex{}) == 0);
  CHECK(b.label(Vertex{1}) == 1);
  CHECK(b.label(Vertex{2}) == 2);
  CHECK(b.label(Vertex{3}) == 0);
  CHECK(b.act(Vertex{1, 1}) == Vertex{1, 2});
  CHECK(b.act(Vertex{2, 1}) == Vertex{2, 3});
  CHECK(b.act(Vertex{3, 1}) == Vertex{3, 1});
}

TEST_CASE("composition adds labels along images") {
  auto datum = gupta_sidki();
  Portrait b = directed_generator(datum, 1, 1, 2);
  Portrait bb = b.then(b);
  CHECK(bb.label(Vertex{1}) == 2);
  CHECK(bb.label(Vertex{2}) == 1);
  CHECK(bb.label(Vertex{3}) == 0);
}

TEST_CASE("composition order convention") {
  auto datum = gupta_sidki();
  Portrait a = rooted_a(3, 2);
  Portrait b = directed_generator(datum, 1, 1, 2);
  Portrait ab = a.then(b);
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      CHECK(ab.act(Vertex{x, y}) == b.act(a.act(Vertex{x, y})));
}

TEST_CASE("inverse and power laws") {
  auto datum = gupta_sidki();
  Portrait a = rooted_a(3, 3);
  Portrait b = directed_generator(datum, 1, 1, 3);
  Portrait w = a.then(b).then(a).then(b.inverse());
  CHECK(w.then(w.inverse()).is_identity());
  CHECK(w.pow(0).is_identity());
  CHECK(w.pow(2) == w.then(w));
  CHECK(w.pow(-1) == w.inverse());
}

TEST_CASE("conjugation") {
  auto datum = gupta_sidki();
  Portrait a = rooted_a(3, 3);
  Portrait b = directed_generator(datum, 1, 1, 3);
  CHECK(b.conjugated_by(a) == a.inverse().then(b).then(a));
}

TEST_CASE("sections of a directed generator") {
  auto datum = gupta_sidki();
  Portrait b3 = directed_generator(datum, 1, 1, 3);
  CHECK(b3.section(Vertex{3}) == directed_generator(datum, 1, 1, 2));
  CHECK(b3.section(Vertex{1}) == rooted_a(3, 2));
  CHECK(b3.section(Vertex{2}) == rooted_a(3, 2).pow(2));
}

TEST_CASE("truncation is the quotient map") {
  auto datum = gupta_sidki();
  Portrait b = directed_generator(datum, 1, 1, 3);
  CHECK(b.truncate(2) == directed_generator(datum, 1, 1, 2));
  Portrait a = rooted_a(3, 3);
  CHECK(a.then(b).truncate(2) == a.truncate(2).then(b.truncate(2)));
}

TEST_CASE("stabilizer depth and fixed counts") {
  auto datum = gupta_sidki();
  Portrait a = rooted_a(3, 3);
  Portrait b = directed_generator(datum, 1, 1, 3);
  CHECK(a.stabilizer_depth() == 0);
  CHECK(b.stabilizer_depth() == 1);
  CHECK(Portrait::identity(3, 3).stabilizer_depth() == 3);

  Portrait b2 = directed_generator(datum, 1, 1, 2);
  CHECK(b2.fixed_counts() == std::vector<long>{3, 3});

  // (ab)^3 fixes two levels but not the third
  Portrait ab3 = a.then(b).pow(3);
  CHECK(ab3.stabilizer_depth() == 2);
}

TEST_CASE("orders") {
  auto datum = gupta_sidki();
  Portrait a = rooted_a(3, 3);
  Portrait b = directed_generator(datum, 1, 1, 3);
  CHECK(Portrait::identity(3, 3).order() == 1);
  CHECK(a.order() == 3);
  CHECK(b.order() == 3);
  CHECK(a.then(b).order() == 9);
}

TEST_CASE("leaf permutation is a homomorphic image") {
  auto datum = gupta_sidki();
  Portrait a = rooted_a(3, 2);
  Portrait b = directed_generator(datum, 1, 1, 2);
  CHECK(a.then(b).leaf_perm() == a.leaf_perm().then(b.leaf_perm()));
  CHECK(b.inverse().leaf_perm() == b.leaf_perm().inverse());
}

TEST_CASE("text round trip") {
  auto datum = gupta_sidki();
  Portrait b = directed_generator(datum, 1, 1, 3);
  CHECK(Portrait::from_text(b.to_text()) == b);
  Portrait id = Portrait::identity(5, 2);
  CHECK(Portrait::from_text(id.to_text()) == id);
}

TEST_CASE("act_rank matches act") {
  auto datum = gupta_sidki();
  Portrait w = rooted_a(3, 3).then(directed_generator(datum, 1, 1, 3));
  for (long r = 0; r < 27; ++r) {
    Vertex v;
    long rr = r;
    for (int m = 0; m < 3; ++m) {
      v.word.insert(v.word.begin(), static_cast<uint8_t>(rr % 3 + 1));
      rr /= 3;
    }
    long image = w.act_rank(3, r);
    Vertex u = w.act(v);
    long expect = 0;
    for (uint8_t letter : u.word) expect = expect * 3 + (letter - 1);
    CHECK(image == expect);
  }
}
