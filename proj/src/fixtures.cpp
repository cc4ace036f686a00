#include "crosscut/fixtures.hpp"

#include "crosscut/error.hpp"

namespace crosscut {

namespace {

Poset numeric(int n, const std::vector<Cover>& covers) { return from_covers(numeric_labels(n), covers); }

void check_pnk_params(int n, int k) {
  if (n < 4 || k < 2 || k > n - 1) {
    throw BadParams("Pnk needs n >= 4 and 2 <= k <= n-1 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                    ")");
  }
}

bool same_parity(int j, int n) { return ((j - n) % 2 + 2) % 2 == 0; }

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"ex_easy", "ex_nonfunctorial", "ex_2", "P3323", "P353_1", "P353_2",
                                                 "Pnk",     "crown",            "P1",   "P2",    "Q1",     "Q2"};
  return names;
}

Poset ex_easy() { return numeric(5, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}}); }

Poset ex_nonfunctorial() { return numeric(5, {{0, 1}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

Poset ex_2() {
  return numeric(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

Poset p3323() {
  return numeric(11, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 8}, {3, 10}, {4, 6}, {4, 7}, {5, 6},
                      {5, 7}, {6, 8}, {6, 9}, {7, 9}, {7, 10}});
}

Poset p353_1() {
  return numeric(11, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {2, 5}, {2, 6}, {2, 7}, {3, 8},
                      {4, 8}, {6, 8}, {7, 8}, {3, 9}, {5, 9}, {7, 9}, {4, 10}, {5, 10}, {6, 10}});
}

Poset p353_2() {
  return numeric(11, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {2, 5}, {2, 6}, {2, 7}, {3, 8},
                      {4, 8}, {6, 8}, {3, 9}, {5, 9}, {6, 9}, {7, 9}, {4, 10}, {5, 10}, {7, 10}});
}

Poset lemma_p1() {
  return numeric(9, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 8}, {5, 7},
                     {5, 8}});
}

Poset lemma_p2() {
  return numeric(9, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 6},
                     {4, 8}, {5, 7}, {5, 8}});
}

Poset q1() {
  // ids: 0..5 -> "0".."5", 6 -> "9", 7 -> "10", 8 -> "a", 9 -> "12", 10 -> "13", 11 -> "14"
  std::vector<std::string> labels = {"0", "1", "2", "3", "4", "5", "9", "10", "a", "12", "13", "14"};
  return from_covers(std::move(labels), {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {6, 9}, {6, 10}, {7, 9},
                                         {7, 11}, {8, 10}, {8, 11}, {3, 6}, {5, 6}, {5, 7}, {3, 7}, {4, 8}});
}

Poset q2() {
  std::vector<std::string> labels = {"0", "1", "2", "3", "4", "5", "9", "10", "12", "13", "14"};
  return from_covers(std::move(labels), {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {6, 8}, {6, 9}, {7, 8},
                                         {7, 10}, {3, 6}, {5, 6}, {5, 7}, {3, 7}, {4, 9}, {4, 10}});
}

Poset crown(int n) {
  if (n < 2) throw BadParams("crown needs n >= 2");
  std::vector<std::string> labels;
  for (int i = 1; i <= 2 * n; ++i) labels.push_back(std::to_string(i));
  const auto bottom = [](int j) { return j - 1; };  // bottom labelled j
  const auto top = [n](int j) { return n + j - 1; };  // top labelled n+j
  std::vector<Cover> covers = {{bottom(1), top(1)}, {bottom(2), top(1)}};
  for (int j = 2; j <= n - 1; ++j) {
    covers.emplace_back(bottom(j - 1), top(j));
    covers.emplace_back(bottom(j + 1), top(j));
  }
  covers.emplace_back(bottom(n - 1), top(n));
  covers.emplace_back(bottom(n), top(n));
  return from_covers(std::move(labels), covers);
}

Element pnk_c(int /*n*/, int j) { return j - 1; }
Element pnk_b(int n, int j) { return n + j - 1; }
Element pnk_a(int n, int i) { return 2 * n + i - 1; }

std::vector<std::pair<Element, ElementSet>> pnk_listed_down_sets(int n, int k) {
  check_pnk_params(n, k);
  std::vector<std::pair<Element, ElementSet>> listed;
  ElementSet all_c;
  for (int j = 1; j <= n; ++j) all_c.insert(pnk_c(n, j));

  ElementSet a1 = all_c | ElementSet{pnk_a(n, 1)};
  ElementSet a2 = all_c | ElementSet{pnk_a(n, 2)};
  ElementSet a3{pnk_a(n, 3)};
  for (int j = 1; j <= n - 1; ++j) a1.insert(pnk_b(n, j));
  for (int j = 1; j <= n; ++j) {
    if (j != n - 1) a2.insert(pnk_b(n, j));
  }
  for (int j = k; j <= n; ++j) a3.insert(pnk_b(n, j));
  for (int j = k - 1; j <= n; ++j) a3.insert(pnk_c(n, j));
  listed.emplace_back(pnk_a(n, 1), a1);
  listed.emplace_back(pnk_a(n, 2), a2);
  listed.emplace_back(pnk_a(n, 3), a3);

  listed.emplace_back(pnk_b(n, 1), ElementSet{pnk_b(n, 1), pnk_c(n, 1), pnk_c(n, 2)});
  for (int j = 2; j <= n - 1; ++j) {
    listed.emplace_back(pnk_b(n, j), ElementSet{pnk_b(n, j), pnk_c(n, j - 1), pnk_c(n, j + 1)});
  }
  listed.emplace_back(pnk_b(n, n), ElementSet{pnk_b(n, n), pnk_c(n, n - 1), pnk_c(n, n)});
  for (int j = 1; j <= n; ++j) listed.emplace_back(pnk_c(n, j), ElementSet{pnk_c(n, j)});
  return listed;
}

Poset pnk(int n, int k) {
  check_pnk_params(n, k);
  std::vector<std::string> labels(2 * n + 3);
  for (int j = 1; j <= n; ++j) {
    labels[pnk_c(n, j)] = "c" + std::to_string(j);
    labels[pnk_b(n, j)] = "b" + std::to_string(j);
  }
  for (int i = 1; i <= 3; ++i) labels[pnk_a(n, i)] = "a" + std::to_string(i);

  std::vector<Cover> covers;
  const auto cover = [&](Element below, Element above) { covers.emplace_back(below, above); };
  cover(pnk_c(n, 1), pnk_b(n, 1));
  cover(pnk_c(n, 2), pnk_b(n, 1));
  for (int j = 2; j <= n - 1; ++j) {
    cover(pnk_c(n, j - 1), pnk_b(n, j));
    cover(pnk_c(n, j + 1), pnk_b(n, j));
  }
  cover(pnk_c(n, n - 1), pnk_b(n, n));
  cover(pnk_c(n, n), pnk_b(n, n));
  // The drawn a-level edges use ellipses; the listed down-sets fix them.
  for (int j = 1; j <= n - 1; ++j) cover(pnk_b(n, j), pnk_a(n, 1));
  for (int j = 1; j <= n; ++j) {
    if (j != n - 1) cover(pnk_b(n, j), pnk_a(n, 2));
  }
  for (int j = k; j <= n; ++j) cover(pnk_b(n, j), pnk_a(n, 3));

  Poset p = from_covers(std::move(labels), covers);
  for (const auto& [x, down] : pnk_listed_down_sets(n, k)) {
    if (p.down_set(x) != down) throw PreconditionFailed("Pnk fixture disagrees with its listed down-set at " + p.label(x));
  }
  return p;
}

ExpectedDnk expected_dnk(int n, int k) {
  check_pnk_params(n, k);
  ExpectedDnk e;
  for (const auto& [x, down] : pnk_listed_down_sets(n, k)) {
    if (x == pnk_a(n, 1)) e.below_a1 = down;
    if (x == pnk_a(n, 2)) e.below_a2 = down;
    if (x == pnk_a(n, 3)) e.below_a3 = down;
  }
  for (int j = 1; j <= n - 2; ++j) e.a.insert(pnk_b(n, j));
  for (int j = 1; j <= n - 1; ++j) e.a.insert(pnk_c(n, j));

  for (int j = k; j <= n - 1; ++j) {
    if (!same_parity(j, n)) e.b.insert(pnk_b(n, j));
  }
  for (int j = k - 1; j <= n; ++j) {
    if (same_parity(j, n)) e.b.insert(pnk_c(n, j));
  }

  for (int j = k; j <= n; ++j) {
    if (same_parity(j, n)) e.c.insert(pnk_b(n, j));
  }
  for (int j = k - 1; j <= n - 1; ++j) {
    if (!same_parity(j, n)) e.c.insert(pnk_c(n, j));
  }
  e.c.insert(pnk_c(n, n));

  for (int j = k; j <= n - 3; ++j) {
    if (!same_parity(j, n)) e.d.insert(pnk_b(n, j));
  }
  for (int j = k - 1; j <= n - 2; ++j) {
    if (same_parity(j, n)) e.d.insert(pnk_c(n, j));
  }

  for (int j = k; j <= n - 2; ++j) {
    if (same_parity(j, n)) e.e.insert(pnk_b(n, j));
  }
  for (int j = k - 1; j <= n - 1; ++j) {
    if (!same_parity(j, n)) e.e.insert(pnk_c(n, j));
  }

  e.f = ElementSet{pnk_c(n, n)};
  return e;
}

Poset fixture(const FixtureSpec& spec) {
  const auto expect_params = [&](std::size_t count) {
    if (spec.params.size() != count) {
      throw BadParams("fixture " + spec.name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (spec.name == "Pnk") {
    expect_params(2);
    return pnk(spec.params[0], spec.params[1]);
  }
  if (spec.name == "crown") {
    expect_params(1);
    return crown(spec.params[0]);
  }
  expect_params(0);
  if (spec.name == "ex_easy") return ex_easy();
  if (spec.name == "ex_nonfunctorial") return ex_nonfunctorial();
  if (spec.name == "ex_2") return ex_2();
  if (spec.name == "P3323") return p3323();
  if (spec.name == "P353_1") return p353_1();
  if (spec.name == "P353_2") return p353_2();
  if (spec.name == "P1") return lemma_p1();
  if (spec.name == "P2") return lemma_p2();
  if (spec.name == "Q1") return q1();
  if (spec.name == "Q2") return q2();
  throw BadParams("unknown fixture '" + spec.name + "'");
}

}  // namespace crosscut
