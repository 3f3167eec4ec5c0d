#include "pmod04/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace pmod04 {

CapExceeded::CapExceeded(int requested, int cap)
    : std::runtime_error("radius " + std::to_string(requested) +
                         " exceeds the enumeration cap " +
                         std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

SphereClassCounts& SphereClassCounts::operator+=(const SphereClassCounts& o) {
  total += o.total;
  axis_a += o.axis_a;
  axis_b += o.axis_b;
  axis_ab += o.axis_ab;
  pseudo_anosov += o.pseudo_anosov;
  return *this;
}

namespace {

struct ClassCounter {
  SphereClassCounts counts;

  void operator()(std::span<const Letter> w) {
    ++counts.total;
    SpanClassification c = classify_span(w);
    switch (c.type) {
      case MappingClassType::Reducible:
        switch (c.axis) {
          case Axis::A: ++counts.axis_a; break;
          case Axis::B: ++counts.axis_b; break;
          case Axis::AB: ++counts.axis_ab; break;
        }
        break;
      case MappingClassType::PseudoAnosov:
        ++counts.pseudo_anosov;
        break;
      default:
        break;  // identity, radius 0 only
    }
  }
};

SphereClassCounts count_sphere_parallel(int n, unsigned threads) {
  // Fixed prefix decomposition; the merge is a sum taken in prefix order,
  // so any worker schedule produces the same counts.
  const int prefix_len = std::min(3, n - 1);
  const std::vector<Word> prefixes = sphere_words(prefix_len);
  std::vector<SphereClassCounts> partial(prefixes.size());
  std::atomic<size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      ClassCounter counter;
      enumerate_sphere(n, prefixes[i], counter);
      partial[i] = counter.counts;
    }
  };

  {
    std::vector<std::thread> pool;
    const size_t n_workers = std::min<size_t>(threads, prefixes.size());
    pool.reserve(n_workers);
    for (size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SphereClassCounts sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

SphereClassCounts count_sphere_classes(int n, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("radius must be >= 0");
  if (n > opts.cap) throw CapExceeded(n, opts.cap);
  if (opts.threads > 1 && n >= 2) return count_sphere_parallel(n, opts.threads);
  ClassCounter counter;
  enumerate_sphere(n, counter);
  return counter.counts;
}

namespace {

CensusRow make_row(int n, const BigInt& total, const BigInt& reducible,
                   const BigInt& pseudo_anosov, const CensusRow* prev) {
  CensusRow row;
  row.n = n;
  row.total = total;
  row.reducible = reducible;
  row.pseudo_anosov = pseudo_anosov;
  row.h_n = (prev ? prev->h_n : 0) + total;
  row.r_n = (prev ? prev->r_n : 0) + reducible;
  row.p_n = (prev ? prev->p_n : 0) + pseudo_anosov;
  row.ratio = BigRat(row.p_n, row.h_n);
  return row;
}

}  // namespace

std::vector<CensusRow> census_rows(int max_n, const EnumerationOptions& opts) {
  if (max_n < 0) throw std::invalid_argument("radius must be >= 0");
  if (max_n > opts.cap) throw CapExceeded(max_n, opts.cap);
  std::vector<CensusRow> rows;
  rows.reserve(size_t(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    SphereClassCounts c = count_sphere_classes(n, opts);
    rows.push_back(make_row(n, c.total, c.reducible(), c.pseudo_anosov,
                            rows.empty() ? nullptr : &rows.back()));
  }
  return rows;
}

CensusRow count_sphere_by_class(int n, const EnumerationOptions& opts) {
  return census_rows(n, opts).back();
}

BigInt count_conjugacy_set(Axis axis, int n, const EnumerationOptions& opts) {
  if (n < 1) throw std::invalid_argument("conjugacy sets live at radius >= 1");
  SphereClassCounts c = count_sphere_classes(n, opts);
  switch (axis) {
    case Axis::A: return c.axis_a;
    case Axis::B: return c.axis_b;
    case Axis::AB: return c.axis_ab;
  }
  throw std::logic_error("bad axis");
}

BigInt closed_form_sphere_total(int n) { return sphere_size(n); }

BigInt closed_form_reducible(int n) {
  if (n <= 0) return 0;
  if (n % 2 == 1) return 4 * pow3(unsigned((n - 1) / 2));
  return 8 * pow3(unsigned((n - 2) / 2));
}

CumulativeCounts closed_form_cumulative(int n) {
  if (n < 0) throw std::invalid_argument("radius must be >= 0");
  CumulativeCounts c;
  c.h_n = 2 * pow3(unsigned(n)) - 1;
  c.r_n = n % 2 == 1 ? 10 * pow3(unsigned((n - 1) / 2)) - 6
                     : 2 * pow3(unsigned(n / 2) + 1) - 6;
  c.p_n = c.h_n - c.r_n - 1;
  return c;
}

std::vector<CensusRow> ratio_table(int max_n) {
  if (max_n < 0) throw std::invalid_argument("radius must be >= 0");
  std::vector<CensusRow> rows;
  rows.reserve(size_t(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    BigInt total = closed_form_sphere_total(n);
    BigInt reducible = closed_form_reducible(n);
    BigInt pa = n == 0 ? BigInt(0) : BigInt(total - reducible);
    rows.push_back(
        make_row(n, total, reducible, pa, rows.empty() ? nullptr : &rows.back()));
  }
  return rows;
}

std::vector<std::string> bruteforce_conjugacy_set(Axis axis, int n, int cap) {
  if (n < 0) throw std::invalid_argument("radius must be >= 0");
  if (n > cap) throw CapExceeded(n, cap);

  const Word gamma = axis_word(axis);
  std::vector<Word> powers;  // gamma^k for k = 1..n, -1..-n
  for (int k = 1; k <= n; ++k) powers.push_back(power(gamma, k));
  for (int k = 1; k <= n; ++k) powers.push_back(power(gamma, -k));

  std::unordered_set<std::string> seen;
  for (int len = 0; len <= n; ++len) {
    enumerate_sphere(len, [&](std::span<const Letter> u_span) {
      const Word u = Word::from_reduced(u_span);
      const Word u_inv = invert(u);
      for (const Word& p : powers) {
        Word conj = multiply(multiply(u, p), u_inv);
        if (conj.size() == size_t(n)) seen.insert(to_string(conj));
      }
    });
  }
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_conjugates_bruteforce(Axis axis, int n, int cap) {
  return BigInt(bruteforce_conjugacy_set(axis, n, cap).size());
}

namespace {

// Words of length n conjugate to a power of a, by classification sweep.
std::vector<Word> axis_a_conjugates(int n) {
  std::vector<Word> out;
  enumerate_sphere(n, [&](std::span<const Letter> w) {
    SpanClassification c = classify_span(w);
    if (c.type == MappingClassType::Reducible && c.axis == Axis::A)
      out.push_back(Word::from_reduced(w));
  });
  return out;
}

}  // namespace

PartitionReport verify_partition_phi(int r, int cap) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  if (r > cap) throw CapExceeded(r, cap);

  PartitionReport report;
  report.r = r;
  const int n_src = 2 * r + 1;
  const int n_dst = 2 * r + 3;

  const std::vector<Word> source = axis_a_conjugates(n_src);
  const std::vector<Word> target = axis_a_conjugates(n_dst);
  report.source_size = source.size();
  report.target_size = target.size();

  const Word a{kAlpha}, ai{kAlphaInv}, b{kBeta}, bi{kBetaInv};
  auto conj = [](const Word& g, const Word& x) {
    return multiply(multiply(g, x), invert(g));
  };

  auto note = [&](std::string msg) {
    if (report.failures.size() < 8) report.failures.push_back(std::move(msg));
  };

  std::unordered_set<std::string> images;
  for (const Word& x : source) {
    const Letter first = x.front();
    const bool pure_power = std::all_of(
        x.begin(), x.end(), [&](Letter l) { return l == first; });

    std::array<Word, 3> image;
    if (pure_power) {
      // x = a^(+-(2r+1)): extend the power by two, plus the two b-conjugates
      const Word& step = first.sign() > 0 ? a : ai;
      image = {multiply(multiply(x, step), step), conj(b, x), conj(bi, x)};
    } else if (first.gen() == Gen::Alpha) {
      image = {conj(first.sign() > 0 ? a : ai, x), conj(b, x), conj(bi, x)};
    } else {
      image = {conj(first.sign() > 0 ? b : bi, x), conj(a, x), conj(ai, x)};
    }

    std::array<std::string, 3> keys;
    for (size_t i = 0; i < 3; ++i) {
      keys[i] = to_string(image[i]);
      if (image[i].size() != size_t(n_dst))
        note("image " + keys[i] + " of " + to_string(x) +
             " has the wrong length");
    }
    std::sort(keys.begin(), keys.end());
    if (keys[0] == keys[1] || keys[1] == keys[2])
      note("images of " + to_string(x) + " are not distinct");
    for (const auto& k : keys)
      if (!images.insert(k).second)
        note("image " + k + " produced twice (not disjoint)");
  }
  report.image_count = images.size();

  for (const Word& y : target)
    if (!images.count(to_string(y)))
      note("target element " + to_string(y) + " not covered");
  if (images.size() != 3 * source.size())
    note("expected 3x" + std::to_string(source.size()) + " distinct images, got " +
         std::to_string(images.size()));
  if (images.size() != target.size())
    note("image union has size " + std::to_string(images.size()) +
         ", target has " + std::to_string(target.size()));

  report.passed = report.failures.empty();
  return report;
}

std::optional<size_t> first_row_mismatch(std::span<const CensusRow> a,
                                         std::span<const CensusRow> b) {
  const size_t common = std::min(a.size(), b.size());
  for (size_t i = 0; i < common; ++i)
    if (!(a[i] == b[i])) return i;
  if (a.size() != b.size()) return common;
  return std::nullopt;
}

std::string census_csv(std::span<const CensusRow> rows) {
  std::string out =
      "n,total,reducible,pseudo_anosov,h_n,r_n,p_n,ratio_exact,ratio_decimal\n";
  for (const CensusRow& row : rows) {
    out += std::to_string(row.n);
    out += ',' + row.total.str();
    out += ',' + row.reducible.str();
    out += ',' + row.pseudo_anosov.str();
    out += ',' + row.h_n.str();
    out += ',' + row.r_n.str();
    out += ',' + row.p_n.str();
    out += ',' + row.p_n.str() + '/' + row.h_n.str();
    out += ',' + decimal_string(row.p_n, row.h_n);
    out += '\n';
  }
  return out;
}

std::string census_json(std::span<const CensusRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CensusRow& row : rows) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["total"] = row.total.str();
    j["reducible"] = row.reducible.str();
    j["pseudo_anosov"] = row.pseudo_anosov.str();
    j["h_n"] = row.h_n.str();
    j["r_n"] = row.r_n.str();
    j["p_n"] = row.p_n.str();
    j["ratio_exact"] = row.p_n.str() + "/" + row.h_n.str();
    j["ratio_decimal"] = decimal_string(row.p_n, row.h_n);
    arr.push_back(std::move(j));
  }
  return arr.dump() + "\n";
}

}  // namespace pmod04
