#include "cubic/scattering.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cubic/json_io.hpp"

namespace cubic {

Ray base_ray(int d) {
  const Exponent x1inv(-1, 0);
  LaurentElement num = LaurentElement::one(d);
  for (const auto& l : lines_meeting(1))
    num = num * (LaurentElement::one(d) + LaurentElement::monomial(d, x1inv, TruncatedSeries::monomial(d, l)));
  LaurentElement den = LaurentElement::one(d) -
                       LaurentElement::monomial(d, Exponent(-2, 0),
                                                TruncatedSeries::monomial(d, classes::D(2) + classes::D(3)));
  return Ray(Direction(1, 0), num * power(invert_unit(den), 4));
}

namespace {

Ray apply_letter(const Ray& ray, Generator g) {
  SL2Matrix M = generator_matrix(g);
  Direction m = M * ray.direction;
  H2Matrix H = h2_matrix(g);
  int shift = g == Generator::T ? PLFunction::boundary(3)(m) : 0;
  Ray out(m, ray.cutoff);
  out.coefficients.reserve(ray.coefficients.size());
  for (std::size_t k = 0; k < ray.coefficients.size(); ++k) {
    TruncatedSeries c(ray.cutoff);
    CurveClass correction = static_cast<int>(k + 1) * shift * classes::D(3);
    for (const auto& [b, x] : ray.coefficients[k].terms()) c.add_term(CurveClass(H * b.vector()) - correction, x);
    out.coefficients.push_back(c);
  }
  return out;
}

}  // namespace

Ray transport(const Ray& ray, const Word& word) {
  Ray cur = ray;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == Generator::TInv) {
      // T^-1 = S^5.T.S^2 in SL2(Z).
      for (int i = 0; i < 2; ++i) cur = apply_letter(cur, Generator::S);
      cur = apply_letter(cur, Generator::T);
      for (int i = 0; i < 5; ++i) cur = apply_letter(cur, Generator::S);
    } else {
      cur = apply_letter(cur, *it);
    }
  }
  return cur;
}

Ray transport_base_ray(const Word& w, int d) {
  // Expand T^-1 so the intermediate directions are exactly those visited by transport().
  Word letters;
  for (auto g : w) {
    if (g == Generator::TInv) {
      letters.insert(letters.end(), 5, Generator::S);
      letters.push_back(Generator::T);
      letters.insert(letters.end(), 2, Generator::S);
    } else {
      letters.push_back(g);
    }
  }
  Direction m(1, 0);
  int hmax = 1;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    m = generator_matrix(*it) * m;
    hmax = std::max(hmax, height(m));
  }
  int kmax = (d - 1) / height(m);
  int internal = std::max(d, kmax * hmax + 1);
  Ray moved = transport(base_ray(internal), letters);
  Ray out(moved.direction, d);
  for (int k = 0; k < kmax && k < static_cast<int>(moved.coefficients.size()); ++k)
    out.coefficients.push_back(moved.coefficients[k].truncated(d));
  while (!out.coefficients.empty() && out.coefficients.back().is_zero()) out.coefficients.pop_back();
  return out;
}

Ray canonical_ray(const Direction& m, int d) {
  if (m.isZero() || !is_primitive(m)) throw std::invalid_argument("canonical_ray: direction not primitive");
  return transport_base_ray(sl2_word_for(m).letters, d);
}

RayCache::RayCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

Ray RayCache::get(const Direction& m, int d) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(d, std::make_pair(m(0), m(1)));
  auto it = memory_.find(key);
  if (it != memory_.end()) return it->second;
  std::optional<Ray> ray;
  std::filesystem::path file;
  if (dir_) {
    std::ostringstream name;
    name << "ray_" << m(0) << "_" << m(1) << "_d" << d << ".json";
    file = *dir_ / name.str();
    std::ifstream in(file);
    if (in) {
      try {
        Json j = Json::parse(in);
        Ray r = ray_from_json(j);
        if (r.direction == m && r.cutoff == d) ray = r;
      } catch (const std::exception&) {
        ray.reset();
      }
    }
  }
  if (!ray) {
    ray = canonical_ray(m, d);
    if (dir_) {
      std::filesystem::path tmp = file;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        out << to_json(*ray).dump() << "\n";
      }
      std::filesystem::rename(tmp, file);
    }
  }
  memory_.emplace(key, *ray);
  return *ray;
}

bool angular_less(const Direction& a, const Direction& b) {
  int ka = cover_cone(a), kb = cover_cone(b);
  if (ka != kb) return ka < kb;
  return det(a, b) > 0;
}

std::vector<Direction> wall_directions(int d) {
  std::vector<Direction> out;
  for (int x = -d; x <= d; ++x)
    for (int y = -d; y <= d; ++y) {
      Direction m(x, y);
      if (m.isZero() || !is_primitive(m)) continue;
      if (height(m) < d) out.push_back(m);
    }
  std::sort(out.begin(), out.end(), angular_less);
  return out;
}

ScatteringDiagram::ScatteringDiagram(int d, std::vector<Ray> rays) : d_(DegreeCutoff(d)), rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end(), [](const Ray& a, const Ray& b) { return angular_less(a.direction, b.direction); });
  for (std::size_t i = 1; i < rays_.size(); ++i)
    if (rays_[i].direction == rays_[i - 1].direction) throw std::invalid_argument("two rays with the same support");
  walls_ = rays_;
  for (const auto& r : cover_rays())
    if (!find(r)) walls_.emplace_back(r, d_);
  std::sort(walls_.begin(), walls_.end(), [](const Ray& a, const Ray& b) { return angular_less(a.direction, b.direction); });
}

const Ray* ScatteringDiagram::find(const Direction& m) const {
  for (const auto& r : rays_)
    if (r.direction == m) return &r;
  return nullptr;
}

ScatteringDiagram truncated_diagram(int d, RayCache* cache) {
  std::vector<Ray> rays;
  for (const auto& m : wall_directions(d)) {
    Ray r = cache ? cache->get(m, d) : canonical_ray(m, d);
    if (!r.is_trivial()) rays.push_back(std::move(r));
  }
  return ScatteringDiagram(d, std::move(rays));
}

ScatteringDiagram trivial_diagram(int d) { return ScatteringDiagram(d, {}); }

LaurentElement path_ordered_product(const LaurentElement& e, const std::vector<Crossing>& path) {
  for (const auto& c : path)
    if (c.ray.is_boundary()) throw std::invalid_argument("path_ordered_product: boundary ray in path");
  LaurentElement out = e;
  for (const auto& c : path) out = cross_ray(out, c.ray, c.source_side);
  return out;
}

}  // namespace cubic
