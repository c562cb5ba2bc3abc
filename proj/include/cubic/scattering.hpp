#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "cubic/ray.hpp"

namespace cubic {

// prod_j (1 + z^{L1j} x^{(-1,0)}) / (1 - z^{D2+D3} x^{(-2,0)})^4 on the ray (1,0).
Ray base_ray(int d);

// Moves a ray along a word, letters right to left. Classes move by the H2 action; a T step
// taking the direction to m' sends the class of the x^{-k m'} term to T^*beta - k<D3,m'> D3.
Ray transport(const Ray& ray, const Word& word);

// The base ray moved along w, exact modulo I_d: computed at an internal cutoff large enough
// that no term is lost at any intermediate direction, then truncated.
Ray transport_base_ray(const Word& w, int d);

// transport_base_ray along sl2_word_for(m).
Ray canonical_ray(const Direction& m, int d);

// Rays keyed by (direction, d), optionally persisted as JSON files in a directory.
class RayCache {
 public:
  explicit RayCache(std::optional<std::filesystem::path> dir = std::nullopt);
  Ray get(const Direction& m, int d);
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

 private:
  std::optional<std::filesystem::path> dir_;
  std::map<std::pair<int, std::pair<int, int>>, Ray> memory_;
  std::mutex mutex_;
};

class ScatteringDiagram {
 public:
  ScatteringDiagram(int d, std::vector<Ray> rays);
  int cutoff() const { return d_; }
  // Nontrivial rays in angular order starting at (1,0).
  const std::vector<Ray>& rays() const { return rays_; }
  const Ray* find(const Direction& m) const;
  // Rays plus a trivial wall on every missing boundary direction, so kinks are always present.
  const std::vector<Ray>& walls() const { return walls_; }

 private:
  int d_;
  std::vector<Ray> rays_;
  std::vector<Ray> walls_;
};

// Counter-clockwise angular order starting at (1,0).
bool angular_less(const Direction& a, const Direction& b);

// Primitive directions with -F(m) < d, in angular order.
std::vector<Direction> wall_directions(int d);

ScatteringDiagram truncated_diagram(int d, RayCache* cache = nullptr);
// Only the boundary kinks, every wall function equal to 1.
ScatteringDiagram trivial_diagram(int d);

struct Crossing {
  Ray ray;
  CoverPoint source_side;
};

// Composite of crossings in path order. Throws std::invalid_argument on a boundary ray.
LaurentElement path_ordered_product(const LaurentElement& e, const std::vector<Crossing>& path);

}  // namespace cubic
