#include "pmod04/gamma.hpp"

#include <deque>
#include <unordered_map>

#include <json.hpp>

namespace pmod04 {

GammaElement gamma_multiply(const GammaElement& g, const GammaElement& h) {
  return {multiply(g.w, h.w), g.eps_i != h.eps_i, g.eps_j != h.eps_j};
}

GammaElement gamma_invert(const GammaElement& g) {
  return {invert(g.w), g.eps_i, g.eps_j};
}

int64_t gamma_length(const GammaElement& g) {
  return int64_t(g.w.size()) + (g.eps_i ? 1 : 0) + (g.eps_j ? 1 : 0);
}

Classification gamma_classify(const GammaElement& g) {
  if (g.w.empty()) {
    if (!g.eps_i && !g.eps_j) return {MappingClassType::Identity, std::nullopt};
    return {MappingClassType::Periodic, std::nullopt};
  }
  return classify(g.w);
}

BigInt gamma_sphere_count(int n) {
  if (n < 0) throw std::invalid_argument("radius must be >= 0");
  BigInt total = sphere_size(n);
  if (n >= 1) total += 2 * sphere_size(n - 1);
  if (n >= 2) total += sphere_size(n - 2);
  return total;
}

namespace {

struct TwistSphere {
  BigInt total, reducible, pseudo_anosov;
};

// Convolve twist-word spheres with the four involution components:
// weight 1 at offset 0, 2 at offset 1, 1 at offset 2. The pure
// involutions (empty twist word, nonzero bits) are the periodic classes.
std::vector<GammaRow> assemble_rows(std::span<const TwistSphere> spheres) {
  std::vector<GammaRow> rows;
  rows.reserve(spheres.size());
  BigInt cum_total = 0, cum_pa = 0;
  for (size_t n = 0; n < spheres.size(); ++n) {
    auto at = [&](size_t m, auto member) -> BigInt {
      return m <= n ? spheres[n - m].*member : BigInt(0);
    };
    GammaRow row;
    row.n = int(n);
    row.total = at(0, &TwistSphere::total) + 2 * at(1, &TwistSphere::total) +
                at(2, &TwistSphere::total);
    row.reducible = at(0, &TwistSphere::reducible) +
                    2 * at(1, &TwistSphere::reducible) +
                    at(2, &TwistSphere::reducible);
    row.pseudo_anosov = at(0, &TwistSphere::pseudo_anosov) +
                        2 * at(1, &TwistSphere::pseudo_anosov) +
                        at(2, &TwistSphere::pseudo_anosov);
    row.periodic = n == 1 ? 2 : n == 2 ? 1 : 0;
    cum_total += row.total;
    cum_pa += row.pseudo_anosov;
    row.cum_total = cum_total;
    row.cum_pa = cum_pa;
    row.ratio = BigRat(cum_pa, cum_total);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<GammaRow> gamma_table(int max_n) {
  if (max_n < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<TwistSphere> spheres(size_t(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    BigInt total = closed_form_sphere_total(n);
    BigInt reducible = closed_form_reducible(n);
    spheres[size_t(n)] = {total, reducible,
                          n == 0 ? BigInt(0) : total - reducible};
  }
  return assemble_rows(spheres);
}

std::vector<GammaRow> gamma_census(int max_n, const EnumerationOptions& opts) {
  if (max_n < 0) throw std::invalid_argument("radius must be >= 0");
  if (max_n > opts.cap) throw CapExceeded(max_n, opts.cap);
  std::vector<TwistSphere> spheres(size_t(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    SphereClassCounts c = count_sphere_classes(n, opts);
    spheres[size_t(n)] = {BigInt(c.total), BigInt(c.reducible()),
                          BigInt(c.pseudo_anosov)};
  }
  return assemble_rows(spheres);
}

std::vector<BigInt> gamma_bfs_sphere_counts(int max_n) {
  if (max_n < 0) throw std::invalid_argument("radius must be >= 0");
  // The ball quadruples per radius; this is an oracle, keep it small.
  constexpr int kBfsCap = 10;
  if (max_n > kBfsCap) throw CapExceeded(max_n, kBfsCap);

  const GammaElement generators[] = {
      {Word{kAlpha}, false, false}, {Word{kAlphaInv}, false, false},
      {Word{kBeta}, false, false},  {Word{kBetaInv}, false, false},
      {Word{}, true, false},        {Word{}, false, true},
  };

  auto key = [](const GammaElement& g) {
    std::string k = to_string(g.w);
    k += g.eps_i ? "|1" : "|0";
    k += g.eps_j ? '1' : '0';
    return k;
  };

  std::vector<BigInt> counts(size_t(max_n) + 1, 0);
  std::unordered_map<std::string, int> dist;
  std::deque<GammaElement> queue;

  const GammaElement identity{};
  dist.emplace(key(identity), 0);
  counts[0] = 1;
  queue.push_back(identity);

  while (!queue.empty()) {
    GammaElement g = std::move(queue.front());
    queue.pop_front();
    const int d = dist.at(key(g));
    if (d == max_n) continue;
    for (const GammaElement& s : generators) {
      GammaElement next = gamma_multiply(g, s);
      if (dist.emplace(key(next), d + 1).second) {
        counts[size_t(d) + 1] += 1;
        queue.push_back(std::move(next));
      }
    }
  }
  return counts;
}

std::optional<size_t> first_row_mismatch(std::span<const GammaRow> a,
                                         std::span<const GammaRow> b) {
  const size_t common = std::min(a.size(), b.size());
  for (size_t i = 0; i < common; ++i)
    if (!(a[i] == b[i])) return i;
  if (a.size() != b.size()) return common;
  return std::nullopt;
}

std::string gamma_csv(std::span<const GammaRow> rows) {
  std::string out =
      "n,total,periodic,reducible,pseudo_anosov,cum_total,cum_pa,ratio_exact,"
      "ratio_decimal\n";
  for (const GammaRow& row : rows) {
    out += std::to_string(row.n);
    out += ',' + row.total.str();
    out += ',' + row.periodic.str();
    out += ',' + row.reducible.str();
    out += ',' + row.pseudo_anosov.str();
    out += ',' + row.cum_total.str();
    out += ',' + row.cum_pa.str();
    out += ',' + row.cum_pa.str() + '/' + row.cum_total.str();
    out += ',' + decimal_string(row.cum_pa, row.cum_total);
    out += '\n';
  }
  return out;
}

std::string gamma_json(std::span<const GammaRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GammaRow& row : rows) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["total"] = row.total.str();
    j["periodic"] = row.periodic.str();
    j["reducible"] = row.reducible.str();
    j["pseudo_anosov"] = row.pseudo_anosov.str();
    j["cum_total"] = row.cum_total.str();
    j["cum_pa"] = row.cum_pa.str();
    j["ratio_exact"] = row.cum_pa.str() + "/" + row.cum_total.str();
    j["ratio_decimal"] = decimal_string(row.cum_pa, row.cum_total);
    arr.push_back(std::move(j));
  }
  return arr.dump() + "\n";
}

}  // namespace pmod04
