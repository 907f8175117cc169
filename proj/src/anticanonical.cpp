#include "dprig/anticanonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "dprig/errors.hpp"

namespace dprig {

std::string to_string(const DecompositionShape& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.multiplicities.size(); ++i) {
    if (i > 0) {
      out += " + ";
    }
    if (shape.multiplicities[i] != 1) {
      out += std::to_string(shape.multiplicities[i]);
    }
    out += "C" + std::to_string(i + 1);
  }
  return out;
}

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > 4) {
    throw InvalidArgumentError(
        "decomposition census covers degrees 1 through 4");
  }
}

// Ascending partitions of every total in [1, degree].
std::vector<std::vector<int>> partitions_up_to(int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int minimum) -> void {
    if (!current.empty()) {
      out.push_back(current);
    }
    for (int next = minimum; next <= remaining; ++next) {
      current.push_back(next);
      self(self, remaining - next, next);
      current.pop_back();
    }
  };
  recurse(recurse, degree, 1);
  return out;
}

int census_group(const std::vector<int>& multiplicities) {
  const auto [lo, hi] =
      std::minmax_element(multiplicities.begin(), multiplicities.end());
  if (*hi == 1) {
    return 0;  // reduced: every multiplicity 1
  }
  if (*lo == 1) {
    return 1;  // mixed
  }
  return 2;  // nowhere reduced
}

bool census_before(const std::vector<int>& a, const std::vector<int>& b) {
  const int ga = census_group(a);
  const int gb = census_group(b);
  if (ga != gb) {
    return ga < gb;
  }
  switch (ga) {
    case 0:
      return a.size() < b.size();
    case 1: {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      std::vector<int> da(a.rbegin(), a.rend());
      std::vector<int> db(b.rbegin(), b.rend());
      return da < db;
    }
    default:
      if (a.size() != b.size()) {
        return a.size() > b.size();
      }
      return a < b;
  }
}

int multiplicity_gcd(const std::vector<int>& multiplicities) {
  int g = 0;
  for (const int m : multiplicities) {
    g = std::gcd(g, m);
  }
  return g;
}

void check_shape(const DecompositionShape& shape) {
  if (shape.degree < 1) {
    throw InvalidArgumentError("shape degree must be positive");
  }
  if (shape.multiplicities.empty()) {
    throw InvalidArgumentError("shape needs at least one component");
  }
  int sum = 0;
  for (const int m : shape.multiplicities) {
    if (m < 1) {
      throw InvalidArgumentError("multiplicities must be positive");
    }
    sum += m;
  }
  if (sum > shape.degree) {
    throw InvalidArgumentError(
        "multiplicity sum exceeds the anticanonical degree");
  }
  if (!std::is_sorted(shape.multiplicities.begin(),
                      shape.multiplicities.end())) {
    throw InvalidArgumentError("multiplicities must be ascending");
  }
}

bool connected_graph(const std::vector<std::vector<std::int64_t>>& matrix) {
  const std::size_t n = matrix.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    for (std::size_t next = 0; next < n; ++next) {
      if (next != at && !seen[next] && matrix[at][next] > 0) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

using CanonicalKey = std::pair<std::vector<int>, std::vector<std::int64_t>>;

CanonicalKey canonical_key(const std::vector<int>& multiplicities,
                           const std::vector<int>& degrees,
                           const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = degrees.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best;
  bool have = false;
  do {
    bool preserves = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (multiplicities[perm[i]] != multiplicities[i]) {
        preserves = false;
        break;
      }
    }
    if (!preserves) {
      continue;
    }
    CanonicalKey candidate;
    candidate.first.reserve(n);
    candidate.second.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      candidate.first.push_back(degrees[perm[i]]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        candidate.second.push_back(m[perm[i]][perm[j]]);
      }
    }
    if (!have || candidate < best) {
      best = std::move(candidate);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Configuration> solve_single_component(
    const DecompositionShape& shape) {
  const int m = shape.multiplicities.front();
  const int d = shape.degree;
  // C = m*C1 pins the component class to (-K)/m, so its degree and
  // self-intersection must come out integral and the genus formula must
  // return an integer; otherwise the shape is impossible.
  if (d % m != 0 || d % (m * m) != 0) {
    return {};
  }
  const int component_degree = d / m;
  const std::int64_t self = d / (m * m);
  const std::int64_t twice_genus = 2 + self - component_degree;
  if (twice_genus % 2 != 0 || twice_genus < 0) {
    return {};
  }
  Configuration config;
  config.shape = shape;
  config.degrees = {component_degree};
  config.self_intersections = {self};
  config.intersections = {{self}};
  return {config};
}

}  // namespace

std::vector<DecompositionShape> enumerate_shapes(int degree) {
  check_degree(degree);
  std::vector<std::vector<int>> parts = partitions_up_to(degree);
  std::sort(parts.begin(), parts.end(), census_before);
  std::vector<DecompositionShape> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    out.push_back({degree, std::move(p)});
  }
  return out;
}

ShapeFilter filter_fano_index(const std::vector<DecompositionShape>& shapes,
                              int fano_index) {
  if (fano_index < 1) {
    throw InvalidArgumentError("Fano index must be positive");
  }
  ShapeFilter out;
  for (const auto& shape : shapes) {
    check_shape(shape);
    if (fano_index % multiplicity_gcd(shape.multiplicities) == 0) {
      out.kept.push_back(shape);
    } else {
      out.excluded.push_back(shape);
    }
  }
  return out;
}

std::int64_t member_self_intersection(const Configuration& config) {
  const std::size_t n = config.degrees.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      total += std::int64_t(config.shape.multiplicities[i]) *
               config.shape.multiplicities[j] * config.intersections[i][j];
    }
  }
  return total;
}

std::vector<Configuration> solve_configurations(
    const DecompositionShape& shape) {
  check_shape(shape);
  const std::size_t n = shape.multiplicities.size();
  if (n == 1) {
    return solve_single_component(shape);
  }

  // Components are rational, so adjunction forces C_i^2 = deg_i - 2 once
  // the degrees are chosen; only the pairwise numbers remain free.
  const auto& mult = shape.multiplicities;
  std::set<CanonicalKey> canon;

  std::vector<int> degrees(n, 0);
  auto try_degrees = [&]() {
    std::vector<std::int64_t> self(n);
    for (std::size_t i = 0; i < n; ++i) {
      self[i] = degrees[i] - 2;
    }
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::int64_t> x(pairs, 0);
    while (true) {
      std::vector<std::vector<std::int64_t>> matrix(
          n, std::vector<std::int64_t>(n, 0));
      std::size_t at = 0;
      for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] = self[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          matrix[i][j] = matrix[j][i] = x[at++];
        }
      }
      bool good = true;
      for (std::size_t i = 0; i < n && good; ++i) {
        // p_a(C_i) = 0 written through adjunction with K = -sum m_j C_j.
        std::int64_t lhs = (1 - std::int64_t(mult[i])) * self[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) {
            lhs -= mult[j] * matrix[i][j];
          }
        }
        good = lhs == -2;
      }
      if (good && connected_graph(matrix)) {
        Configuration config{shape, degrees, self, matrix};
        if (member_self_intersection(config) != shape.degree) {
          throw ArithmeticError(
              "degree equation lost while solving a decomposition");
        }
        canon.insert(canonical_key(mult, degrees, matrix));
      }
      // Odometer over off-diagonal entries in [0, 2].
      std::size_t pos = 0;
      while (pos < pairs && x[pos] == 2) {
        x[pos++] = 0;
      }
      if (pos == pairs) {
        break;
      }
      ++x[pos];
    }
  };

  auto assign = [&](auto&& self_fn, std::size_t i, int remaining) -> void {
    if (i + 1 == n) {
      if (remaining >= mult[i] && remaining % mult[i] == 0) {
        degrees[i] = remaining / mult[i];
        try_degrees();
      }
      return;
    }
    for (int deg = 1; mult[i] * deg <= remaining; ++deg) {
      degrees[i] = deg;
      self_fn(self_fn, i + 1,
              remaining - mult[i] * deg);
    }
  };
  assign(assign, 0, shape.degree);

  std::vector<Configuration> out;
  out.reserve(canon.size());
  for (const auto& key : canon) {
    Configuration config;
    config.shape = shape;
    config.degrees = key.first;
    config.self_intersections.resize(n);
    config.intersections.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        config.intersections[i][j] = key.second[i * n + j];
      }
      config.self_intersections[i] = config.intersections[i][i];
    }
    out.push_back(std::move(config));
  }
  return out;
}

std::string to_string(LcVerdict verdict) {
  return verdict == LcVerdict::lc ? "lc" : "worse_than_lc";
}

std::string to_string(SingularityLabel label) {
  switch (label) {
    case SingularityLabel::normal_crossing:
      return "normal_crossing";
    case SingularityLabel::concurrent_three:
      return "concurrent_three";
    case SingularityLabel::tangential_pair:
      return "tangential_pair";
    case SingularityLabel::cusp:
      return "cusp";
    case SingularityLabel::other:
      return "other";
  }
  throw InvalidArgumentError("unknown singularity label");
}

LcClassification classify_configuration(const Configuration& config) {
  LcClassification out;
  out.configuration = config;
  const std::size_t n = config.degrees.size();
  if (n == 1) {
    // Irreducible member of arithmetic genus one: the nodal realization is
    // lc, the cuspidal one is not; the catalog records the latter.
    out.verdict = LcVerdict::worse_than_lc;
    out.label = SingularityLabel::cusp;
    return out;
  }

  bool tangent = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      tangent = tangent || config.intersections[i][j] == 2;
    }
  }
  bool triangle = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        triangle = triangle || (config.intersections[i][j] > 0 &&
                                config.intersections[i][k] > 0 &&
                                config.intersections[j][k] > 0);
      }
    }
  }

  if (!tangent && !triangle) {
    // Pairwise simple intersections and no common point possible: every
    // realization is a normal crossing divisor.
    out.verdict = LcVerdict::lc;
    out.label = SingularityLabel::normal_crossing;
  } else if (tangent && n == 2) {
    out.verdict = LcVerdict::worse_than_lc;
    out.label = SingularityLabel::tangential_pair;
  } else if (triangle && !tangent && n == 3) {
    out.verdict = LcVerdict::worse_than_lc;
    out.label = SingularityLabel::concurrent_three;
  } else {
    out.verdict = LcVerdict::worse_than_lc;
    out.label = SingularityLabel::other;
    out.lattice_only = true;
  }
  return out;
}

std::vector<LcClassification> classify_degenerations(int degree) {
  check_degree(degree);
  const ShapeFilter filtered = filter_fano_index(enumerate_shapes(degree), 1);
  std::vector<LcClassification> out;
  for (const auto& shape : filtered.kept) {
    for (const auto& config : solve_configurations(shape)) {
      LcClassification entry = classify_configuration(config);
      if (entry.verdict == LcVerdict::worse_than_lc) {
        out.push_back(std::move(entry));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LcClassification& a, const LcClassification& b) {
              const std::size_t na = a.configuration.degrees.size();
              const std::size_t nb = b.configuration.degrees.size();
              if (na != nb) {
                return na > nb;
              }
              std::vector<int> da = a.configuration.degrees;
              std::vector<int> db = b.configuration.degrees;
              std::sort(da.begin(), da.end());
              std::sort(db.begin(), db.end());
              if (da != db) {
                return da < db;
              }
              return a.configuration.intersections <
                     b.configuration.intersections;
            });
  return out;
}

}  // namespace dprig
