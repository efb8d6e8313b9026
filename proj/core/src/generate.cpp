#include "fqc/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fqc {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::uint64_t CounterRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

namespace {

Point decode_point(const Fq& F, unsigned d, std::uint64_t idx) {
  Point pt(d);
  for (unsigned i = 0; i < d; ++i) {
    pt[i] = static_cast<code_t>(idx % F.q());
    idx /= F.q();
  }
  return pt;
}

std::uint64_t space_size(const Fq& F, unsigned d) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (n > UINT64_MAX / F.q()) throw std::overflow_error("q^d overflows");
    n *= F.q();
  }
  return n;
}

}  // namespace

PointSet generate_set(std::shared_ptr<const Fq> F, unsigned d, const GenSpec& spec,
                      std::uint64_t seed) {
  PointSet E;
  E.field = F;
  E.d = d;
  const std::uint64_t total = space_size(*F, d);

  switch (spec.kind) {
    case GenKind::full_space:
      for (std::uint64_t i = 0; i < total; ++i) E.points.push_back(decode_point(*F, d, i));
      break;
    case GenKind::uniform: {
      if (spec.size > total) throw std::invalid_argument("requested size exceeds q^d");
      CounterRng rng(seed);
      std::set<std::uint64_t> seen;
      while (E.points.size() < spec.size) {
        std::uint64_t idx = rng.below(total);
        if (seen.insert(idx).second) E.points.push_back(decode_point(*F, d, idx));
      }
      break;
    }
    case GenKind::sphere: {
      Point origin(d, 0);
      E.points = sphere_enum(*F, d, origin, spec.radius);
      std::sort(E.points.begin(), E.points.end());
      if (spec.size > 0 && spec.size < E.points.size()) {
        // Seeded partial Fisher-Yates, then keep the prefix in draw order.
        CounterRng rng(seed);
        for (std::size_t i = 0; i < spec.size; ++i) {
          std::size_t j = i + rng.below(E.points.size() - i);
          std::swap(E.points[i], E.points[j]);
        }
        E.points.resize(spec.size);
      }
      break;
    }
    case GenKind::subspace: {
      if (spec.subdim == 0 || spec.subdim > d)
        throw std::invalid_argument("subspace dimension out of range");
      std::uint64_t count = space_size(*F, spec.subdim);
      for (std::uint64_t i = 0; i < count; ++i) {
        Point pt(d, 0);
        std::uint64_t idx = i;
        for (unsigned c = 0; c < spec.subdim; ++c) {
          pt[c] = static_cast<code_t>(idx % F->q());
          idx /= F->q();
        }
        E.points.push_back(std::move(pt));
      }
      break;
    }
  }
  E.validate();
  return E;
}

}  // namespace fqc
