#include "carpet/scan.hpp"

#include <array>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "carpet/classification.hpp"
#include "carpet/errors.hpp"
#include "carpet/extendability.hpp"
#include "carpet/output.hpp"

namespace carpet {

namespace {

const char* kLerayAnchor =
    "Leray along the ruling: h0 = h0(p_*), h1 = h1(p_*)+h0(R1p_*), h2 = h1(R1p_*)";

using Point = std::array<long long, 3>;

bool is_classify(ScanComputation c) {
  return c == ScanComputation::ClassifyFano || c == ScanComputation::ClassifyMukai;
}

void require(bool ok, const char* message) {
  if (!ok) throw InvalidQuery(message);
}

void validate(const ScanManifest& m) {
  auto nonempty = [](const Span& s) { return s.lo <= s.hi; };
  if (is_classify(m.computation)) {
    require(nonempty(m.r) && nonempty(m.g), "scan: empty r or g range");
    require(m.r.lo >= 2 && m.g.lo >= 3, "scan: classification needs r >= 2, g >= 3");
    if (m.computation == ScanComputation::ClassifyMukai)
      require(nonempty(m.n) && m.n.lo >= 4, "scan: Mukai scan needs n >= 4");
  } else {
    require(nonempty(m.e) && nonempty(m.a) && nonempty(m.b), "scan: empty e, a or b range");
    require(m.e.lo >= 0, "scan: e must be >= 0");
    if (m.computation == ScanComputation::NormalK)
      require(m.k >= 2, "scan: normal-k needs k >= 2");
  }
}

// Canonical point order; the b range is cut down to very ample H per (e, a).
std::vector<Point> enumerate_points(const ScanManifest& m) {
  std::vector<Point> points;
  if (m.computation == ScanComputation::ClassifyFano) {
    for (long long r = m.r.lo; r <= m.r.hi; ++r)
      for (long long g = m.g.lo; g <= m.g.hi; ++g) points.push_back({0, r, g});
    return points;
  }
  if (m.computation == ScanComputation::ClassifyMukai) {
    for (long long n = m.n.lo; n <= m.n.hi; ++n)
      for (long long r = m.r.lo; r <= m.r.hi; ++r)
        for (long long g = m.g.lo; g <= m.g.hi; ++g) points.push_back({n, r, g});
    return points;
  }
  for (long long e = m.e.lo; e <= m.e.hi; ++e) {
    for (long long a = std::max(m.a.lo, 1LL); a <= m.a.hi; ++a) {
      const Int b_floor_big = Int(a) * e + 1;
      if (b_floor_big > m.b.hi) continue;
      const long long b_floor = b_floor_big.convert_to<long long>();
      for (long long b = std::max(m.b.lo, b_floor); b <= m.b.hi; ++b)
        points.push_back({e, a, b});
    }
  }
  return points;
}

std::string text_kv(const std::string& key, const std::string& value) {
  return key + "=" + value;
}

struct RenderedRow {
  std::string text;
};

RenderedRow render_cohomology(const Point& p, ScanFormat format) {
  const HirzebruchSurface s(static_cast<int>(p[0]));
  const DivisorClass d{p[1], p[2]};
  const CohomologyDims h = cohomology(d, s);
  switch (format) {
    case ScanFormat::Csv:
      return {std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
              std::to_string(p[2]) + "," + h.h0.str() + "," + h.h1.str() + "," +
              h.h2.str()};
    case ScanFormat::Json:
      return {cohomology_json(static_cast<int>(p[0]), d.a, d.b, IntRange(h.h0),
                              IntRange(h.h1), IntRange(h.h2), true, {kLerayAnchor})
                  .dump()};
    case ScanFormat::Text:
      return {text_kv("e", std::to_string(p[0])) + " " + text_kv("a", std::to_string(p[1])) +
              " " + text_kv("b", std::to_string(p[2])) + " h=" + h.str()};
  }
  return {};
}

RenderedRow render_beta(const Point& p, ScanFormat format) {
  const CarpetParams params = carpet_params(p[1], p[2], static_cast<int>(p[0]));
  const AlphaBound bound = beta_bound(p[1], p[2], static_cast<int>(p[0]));
  switch (format) {
    case ScanFormat::Csv:
      return {std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
              std::to_string(p[2]) + "," + params.r.str() + "," + params.g.str() + "," +
              params.M.str() + "," + csv_range(bound.value) + "," +
              (bound.value.exact() ? "true" : "false") + "," +
              csv_field(join(bound.anchors, "; "))};
    case ScanFormat::Json: {
      nlohmann::json row{{"e", p[0]},
                         {"a", p[1]},
                         {"b", p[2]},
                         {"r", json_int(params.r)},
                         {"g", json_int(params.g)},
                         {"M", json_int(params.M)},
                         {"beta", json_range(bound.value)},
                         {"exact", bound.value.exact()},
                         {"anchors", bound.anchors}};
      return {row.dump()};
    }
    case ScanFormat::Text:
      return {text_kv("e", std::to_string(p[0])) + " " + text_kv("a", std::to_string(p[1])) +
              " " + text_kv("b", std::to_string(p[2])) + " (r,g)=(" + params.r.str() + "," +
              params.g.str() + ") beta=" + to_string(bound.value)};
  }
  return {};
}

RenderedRow render_alpha(const Point& p, ScanFormat format) {
  const int e = static_cast<int>(p[0]);
  const CarpetParams params = carpet_params(p[1], p[2], e);
  std::string status = "ok";
  std::string verdict;
  IntRange alpha;
  bool have_alpha = false;
  std::vector<std::string> anchors;
  try {
    const CarpetAnalysis analysis = analyze_carpet(p[1], p[2], e);
    alpha = analysis.bound.value;
    have_alpha = true;
    anchors = analysis.bound.anchors;
    verdict = analysis.verdict.extendable == ExtendabilityVerdict::Extendable::No
                  ? "not-extendable"
                  : "unknown";
    anchors.insert(anchors.end(), analysis.verdict.reasons.begin(),
                   analysis.verdict.reasons.end());
  } catch (const UnsupportedA&) {
    status = "unsupported";
  } catch (const NoRuleApplies&) {
    status = "no-rule";
  }

  switch (format) {
    case ScanFormat::Csv:
      return {std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
              std::to_string(p[2]) + "," + status + "," + params.r.str() + "," +
              params.g.str() + "," + params.M.str() + "," +
              (have_alpha ? csv_range(alpha) : "") + "," +
              (have_alpha ? (alpha.exact() ? "true" : "false") : "") + "," + verdict + "," +
              csv_field(join(anchors, "; "))};
    case ScanFormat::Json: {
      nlohmann::json row{{"e", p[0]},
                         {"a", p[1]},
                         {"b", p[2]},
                         {"status", status},
                         {"r", json_int(params.r)},
                         {"g", json_int(params.g)},
                         {"M", json_int(params.M)},
                         {"anchors", anchors}};
      if (have_alpha) {
        row["alpha"] = json_range(alpha);
        row["exact"] = alpha.exact();
        row["verdict"] = verdict;
      }
      return {row.dump()};
    }
    case ScanFormat::Text: {
      std::string line = text_kv("e", std::to_string(p[0])) + " " +
                         text_kv("a", std::to_string(p[1])) + " " +
                         text_kv("b", std::to_string(p[2])) + " (r,g)=(" + params.r.str() +
                         "," + params.g.str() + ")";
      if (have_alpha)
        line += " alpha<=" + to_string(alpha) + " " + verdict;
      else
        line += " status=" + status;
      return {line};
    }
  }
  return {};
}

RenderedRow render_normal_k(const Point& p, ScanFormat format, long long k) {
  const IntRange bound = h0_normal_minus_k(p[1], p[2], static_cast<int>(p[0]), k);
  switch (format) {
    case ScanFormat::Csv:
      return {std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
              std::to_string(p[2]) + "," + std::to_string(k) + "," + csv_range(bound) + "," +
              (bound.exact() ? "true" : "false") + "," + csv_field(five_term_anchor())};
    case ScanFormat::Json: {
      nlohmann::json row{{"e", p[0]},          {"a", p[1]},
                         {"b", p[2]},          {"k", k},
                         {"bound", json_range(bound)}, {"exact", bound.exact()},
                         {"anchors", nlohmann::json::array({five_term_anchor()})}};
      return {row.dump()};
    }
    case ScanFormat::Text:
      return {text_kv("e", std::to_string(p[0])) + " " + text_kv("a", std::to_string(p[1])) +
              " " + text_kv("b", std::to_string(p[2])) + " k=" + std::to_string(k) +
              " h0(N(-kH))<=" + to_string(bound)};
  }
  return {};
}

std::string status_name(FamilyStatus s) {
  return s == FamilyStatus::Empty ? "empty" : "nonempty-irreducible";
}

RenderedRow render_classify(const Point& p, ScanFormat format, bool mukai) {
  ClassificationRecord rec;
  if (mukai)
    rec = classify_mukai({Int(p[0]), Int(p[1]), Int(p[2])});
  else
    rec = classify_fano({Int(p[1]), Int(p[2])});

  const std::string alpha_str =
      rec.alpha ? (rec.alpha->is_exact ? rec.alpha->value.str() : "<=" + rec.alpha->value.str())
                : "";
  const std::string dim_str = rec.tangent_dim_at_cone ? rec.tangent_dim_at_cone->str() : "";

  switch (format) {
    case ScanFormat::Csv: {
      std::string row;
      if (mukai) row += std::to_string(p[0]) + ",";
      row += std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
             status_name(rec.status) + "," + alpha_str + "," + dim_str + "," +
             (rec.unique_fano_through_general_k3.value_or(false) ? "true" : "") + "," +
             csv_field(rec.reason) + "," + csv_field(join(rec.anchors, "; "));
      return {row};
    }
    case ScanFormat::Json: {
      nlohmann::json row{{"kind", mukai ? "mukai" : "fano"},
                         {"r", p[1]},
                         {"g", p[2]},
                         {"status", status_name(rec.status)},
                         {"reason", rec.reason},
                         {"anchors", rec.anchors}};
      if (mukai) row["n"] = p[0];
      if (rec.alpha)
        row["alpha"] = {{"value", json_int(rec.alpha->value)}, {"exact", rec.alpha->is_exact}};
      if (rec.tangent_dim_at_cone) row["tangent_dim"] = json_int(*rec.tangent_dim_at_cone);
      if (rec.unique_fano_through_general_k3)
        row["unique_fano"] = *rec.unique_fano_through_general_k3;
      return {row.dump()};
    }
    case ScanFormat::Text: {
      std::string line;
      if (mukai) line += text_kv("n", std::to_string(p[0])) + " ";
      line += text_kv("r", std::to_string(p[1])) + " " + text_kv("g", std::to_string(p[2])) +
              " " + status_name(rec.status);
      if (!alpha_str.empty()) line += " alpha=" + alpha_str;
      if (!dim_str.empty()) line += " dimT=" + dim_str;
      return {line};
    }
  }
  return {};
}

RenderedRow render_point(const ScanManifest& m, const Point& p) {
  switch (m.computation) {
    case ScanComputation::Cohomology:
      return render_cohomology(p, m.format);
    case ScanComputation::Beta:
      return render_beta(p, m.format);
    case ScanComputation::Alpha:
      return render_alpha(p, m.format);
    case ScanComputation::NormalK:
      return render_normal_k(p, m.format, m.k);
    case ScanComputation::ClassifyFano:
      return render_classify(p, m.format, false);
    case ScanComputation::ClassifyMukai:
      return render_classify(p, m.format, true);
  }
  return {};
}

std::string csv_header(const ScanManifest& m) {
  switch (m.computation) {
    case ScanComputation::Cohomology:
      return "e,a,b,h0,h1,h2";
    case ScanComputation::Beta:
      return "e,a,b,r,g,M,beta,exact,anchors";
    case ScanComputation::Alpha:
      return "e,a,b,status,r,g,M,alpha,exact,verdict,anchors";
    case ScanComputation::NormalK:
      return "e,a,b,k,bound,exact,anchors";
    case ScanComputation::ClassifyFano:
      return "r,g,status,alpha,tangent_dim,unique,reason,anchors";
    case ScanComputation::ClassifyMukai:
      return "n,r,g,status,alpha,tangent_dim,unique,reason,anchors";
  }
  return {};
}

}  // namespace

std::string run_scan(const ScanManifest& manifest, unsigned workers) {
  validate(manifest);
  const std::vector<Point> points = enumerate_points(manifest);
  std::vector<std::string> rows(points.size());

  const std::size_t point_cap = points.empty() ? 1 : points.size();
  const unsigned used = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(workers, point_cap)));
  std::vector<std::exception_ptr> failures(used);
  std::vector<std::thread> pool;
  const std::size_t chunk = points.empty() ? 0 : (points.size() + used - 1) / used;
  for (unsigned w = 0; w < used && chunk > 0; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(points.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end, w] {
      try {
        for (std::size_t i = begin; i < end; ++i)
          rows[i] = render_point(manifest, points[i]).text;
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& failure : failures)
    if (failure) std::rethrow_exception(failure);

  std::string out;
  switch (manifest.format) {
    case ScanFormat::Csv:
      out = csv_header(manifest) + "\n";
      for (const std::string& row : rows) out += row + "\n";
      break;
    case ScanFormat::Json:
      if (rows.empty()) {
        out = "[]\n";
      } else {
        out = "[\n" + join(rows, ",\n") + "\n]\n";
      }
      break;
    case ScanFormat::Text:
      for (const std::string& row : rows) out += row + "\n";
      break;
  }
  return out;
}

void write_scan_file(const ScanManifest& manifest, unsigned workers) {
  if (manifest.out_path.empty()) throw InvalidQuery("scan: no output path set");
  const std::string rendered = run_scan(manifest, workers);

  namespace fs = std::filesystem;
  const fs::path target(manifest.out_path);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("scan: cannot open " + temp.string());
    stream << rendered;
    if (!stream.good()) {
      stream.close();
      fs::remove(temp);
      throw std::runtime_error("scan: short write to " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw std::runtime_error("scan: cannot move output into place: " + ec.message());
  }
}

namespace {

Span parse_span(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    return {v, v};
  }
  if (j.is_array() && j.size() == 2)
    return {j[0].get<long long>(), j[1].get<long long>()};
  throw InvalidQuery("manifest ranges must be an integer or [lo, hi]");
}

}  // namespace

ScanManifest parse_manifest_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw InvalidQuery(std::string("manifest: ") + err.what());
  }

  ScanManifest m;
  const std::string compute = doc.value("compute", "beta");
  if (compute == "cohomology" || compute == "coh")
    m.computation = ScanComputation::Cohomology;
  else if (compute == "beta")
    m.computation = ScanComputation::Beta;
  else if (compute == "alpha")
    m.computation = ScanComputation::Alpha;
  else if (compute == "normal-k")
    m.computation = ScanComputation::NormalK;
  else if (compute == "classify-fano")
    m.computation = ScanComputation::ClassifyFano;
  else if (compute == "classify-mukai")
    m.computation = ScanComputation::ClassifyMukai;
  else
    throw InvalidQuery("manifest: unknown computation '" + compute + "'");

  if (doc.contains("e")) m.e = parse_span(doc["e"]);
  if (doc.contains("a")) m.a = parse_span(doc["a"]);
  if (doc.contains("b")) m.b = parse_span(doc["b"]);
  if (doc.contains("n")) m.n = parse_span(doc["n"]);
  if (doc.contains("r")) m.r = parse_span(doc["r"]);
  if (doc.contains("g")) m.g = parse_span(doc["g"]);
  if (doc.contains("k")) m.k = doc["k"].get<long long>();

  const std::string format = doc.value("format", "csv");
  if (format == "csv")
    m.format = ScanFormat::Csv;
  else if (format == "json")
    m.format = ScanFormat::Json;
  else if (format == "text")
    m.format = ScanFormat::Text;
  else
    throw InvalidQuery("manifest: unknown format '" + format + "'");

  m.out_path = doc.value("out", "");
  return m;
}

unsigned default_workers() {
  if (const char* env = std::getenv("CARPET_EXT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace carpet
