#include "greenscan/zoo.hpp"

#include <random>
#include <sstream>

namespace greenscan::zoo {

std::string a2_text() { return linear_a_text(2); }

std::string linear_a_text(int n) {
  std::ostringstream os;
  os << "algebra A" << n << "\nvertices";
  for (int i = 1; i <= n; ++i) os << ' ' << i;
  os << "\n";
  for (int i = 1; i < n; ++i) os << "arrow a" << (n == 2 ? std::string() : std::to_string(i)) << " : " << i << " -> " << i + 1 << "\n";
  return os.str();
}

std::string kronecker_text() {
  return "algebra kronecker\n"
         "vertices 1 2\n"
         "arrow a : 1 -> 2\n"
         "arrow b : 1 -> 2\n";
}

std::string markov_text() {
  std::ostringstream os;
  os << "algebra markov\n"
        "vertices 1 2 3\n"
        "arrow a1 : 2 -> 1\narrow a2 : 2 -> 1\n"
        "arrow b1 : 1 -> 3\narrow b2 : 1 -> 3\n"
        "arrow c1 : 3 -> 2\narrow c2 : 3 -> 2\n";
  const char* pairs[3][2] = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  for (const auto& p : pairs)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) os << "relation 1 " << p[0] << i << '*' << p[1] << j << "\n";
  return os.str();
}

std::string one_vertex_text() { return "algebra point\nvertices 1\n"; }

std::string semisimple_text(int n) {
  std::ostringstream os;
  os << "algebra semisimple" << n << "\nvertices";
  for (int i = 1; i <= n; ++i) os << ' ' << i;
  os << "\n";
  return os.str();
}

std::string random_tree_text(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::ostringstream os;
  os << "algebra tree_" << seed << "_" << n << "\nvertices";
  for (int i = 1; i <= n; ++i) os << ' ' << i;
  os << "\n";
  struct A {
    int s, t;
  };
  std::vector<A> arrows;
  for (int i = 1; i < n; ++i) {
    const bool forward = coin(rng);
    arrows.push_back(forward ? A{i, i + 1} : A{i + 1, i});
    os << "arrow x" << i << " : " << arrows.back().s << " -> " << arrows.back().t << "\n";
  }
  for (int i = 0; i + 1 < static_cast<int>(arrows.size()); ++i) {
    const auto& x = arrows[static_cast<std::size_t>(i)];
    const auto& y = arrows[static_cast<std::size_t>(i + 1)];
    if (x.t == y.s && coin(rng)) os << "relation 1 x" << i + 1 << "*x" << i + 2 << "\n";
    if (y.t == x.s && coin(rng)) os << "relation 1 x" << i + 2 << "*x" << i + 1 << "\n";
  }
  return os.str();
}

std::string random_nakayama_text(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kdist(2, std::max(2, n));
  const int k = kdist(rng);
  std::ostringstream os;
  os << "algebra nakayama_" << seed << "_" << n << "_" << k << "\nvertices";
  for (int i = 1; i <= n; ++i) os << ' ' << i;
  os << "\n";
  for (int i = 1; i <= n; ++i) os << "arrow y" << i << " : " << i << " -> " << (i % n) + 1 << "\n";
  // every path of length k vanishes
  for (int i = 1; i <= n; ++i) {
    os << "relation 1 ";
    for (int j = 0; j < k; ++j) {
      if (j) os << '*';
      os << 'y' << ((i - 1 + j) % n) + 1;
    }
    os << "\n";
  }
  return os.str();
}

AlgebraPtr a2() { return parse_algebra(a2_text()); }
AlgebraPtr kronecker() { return parse_algebra(kronecker_text()); }
AlgebraPtr markov() { return parse_algebra(markov_text()); }
AlgebraPtr one_vertex() { return parse_algebra(one_vertex_text()); }

}  // namespace greenscan::zoo
