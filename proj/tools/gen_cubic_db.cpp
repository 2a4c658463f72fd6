// Builds the cubic-graph database shipped under data/: one graph6 file per
// vertex count, all connected simple cubic graphs up to isomorphism.
#include "gkm/cubicgen.hpp"
#include "gkm/graph.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

int main(int argc, char** argv) {
  std::string out_dir = argc > 1 ? argv[1] : "data";
  int max_v = argc > 2 ? std::atoi(argv[2]) : 16;
  std::filesystem::create_directories(out_dir);
  for (int v = 4; v <= max_v; v += 2) {
    char name[32];
    std::snprintf(name, sizeof(name), "cubic%02d.g6", v);
    std::string path = out_dir + "/" + name;
    std::ofstream out(path);
    if (!out) {
      std::fprintf(stderr, "cannot write %s\n", path.c_str());
      return 1;
    }
    auto t0 = std::chrono::steady_clock::now();
    int count = 0;
    gkm::graph::enumerate_all_cubic(v, [&](const gkm::DartGraph& g) {
      out << gkm::graph::write_graph6(g) << "\n";
      ++count;
    });
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %d graphs (%.1fs)\n", path.c_str(), count, dt);
    std::fflush(stdout);
  }
  return 0;
}
