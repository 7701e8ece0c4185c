// Command-line surface over the library. Exit codes: 0 ok, 2 theorem-check
// mismatch, 3 invalid input field, 4 file/format error.

#include "hqf/hqf.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hqf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitInvalidField = 3;
constexpr int kExitFormat = 4;

constexpr unsigned long kDefaultSeed = 20240901;

std::string vec3_str(const Vec3& v) {
  return "(" + to_string(v(0)) + ", " + to_string(v(1)) + ", " + to_string(v(2)) + ")";
}

Vec3 parse_point(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw FormatError("point must be three comma-separated rationals");
  Vec3 x;
  for (int k = 0; k < 3; ++k) {
    try {
      x(k) = parse_rational(parts[static_cast<size_t>(k)]);
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return x;
}

Json poly_terms_json(const Polynomial3& p) { return poly_to_json(p); }

// ---- dims ------------------------------------------------------------------

int cmd_dims(int n_max, int r_max, unsigned long seed, const std::string& format) {
  Rng rng(seed);
  bool mismatch = false;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "n,r,predicted,observed,match\n";
  for (int n = 1; n <= n_max; ++n) {
    const int r_top = r_max > 0 ? r_max : n + 2;
    for (int r = 1; r <= r_top; ++r) {
      const AxisFamily fam = random_axis_family(rng, r);
      const int predicted = r <= n ? 2 * r : 2 * n + 1;
      const int observed = span_dimension(n, fam);
      const bool match = predicted == observed;
      csv << n << "," << r << "," << predicted << "," << observed << ","
          << (match ? "true" : "false") << "\n";
      rows.push_back({{"n", n},
                      {"r", r},
                      {"predicted", predicted},
                      {"observed", observed},
                      {"match", match}});
      if (!match) {
        mismatch = true;
        std::cerr << "mismatch at n=" << n << " r=" << r << "; family:";
        for (const Axis& w : fam.axes) std::cerr << " " << vec3_str(w.v);
        std::cerr << "\n";
      }
    }
  }
  if (format == "json")
    std::cout << Json{{"table", rows}}.dump(2) << "\n";
  else
    std::cout << csv.str();
  return mismatch ? kExitMismatch : kExitOk;
}

// ---- decompose --------------------------------------------------------------

int cmd_decompose(const std::string& in_path, const std::string& out_path,
                  const std::string& format) {
  const FieldFile file = read_field_file(in_path);
  if (!is_harmonic_field(file.field)) {
    std::cerr << "input field is not harmonic\n";
    std::cerr << "  div u = " << poly_terms_json(div(file.field.u)).dump() << "\n";
    const VectorPoly defect = grad(file.field.alpha) - rot(file.field.u);
    std::cerr << "  grad(alpha) - rot(u) = ["
              << poly_terms_json(defect.c1).dump() << ", "
              << poly_terms_json(defect.c2).dump() << ", "
              << poly_terms_json(defect.c3).dump() << "]\n";
    return kExitInvalidField;
  }
  std::vector<Axis> axes = file.axes;
  if (axes.empty())
    axes = {Axis(make_vec3(1, 0, 0)), Axis(make_vec3(0, 1, 0)), Axis(make_vec3(0, 0, 1))};

  const Decomposition d = decompose_full(file.field, AxisFamily(axes));
  Json parts = Json::array();
  for (const auto& [w, q] : d.parts)
    parts.push_back({{"axis", vec3_to_json(w.v)},
                     {"part", field_to_json(q)},
                     {"axial", is_axial(q, w)}});
  Json cert{{"format_version", FieldFile::kFormatVersion},
            {"target", field_to_json(d.target)},
            {"parts", parts},
            {"residual_zero", d.complete()}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot open output file: " + out_path);
    out << cert.dump(2) << "\n";
  }
  if (format == "json" || out_path.empty())
    std::cout << cert.dump(2) << "\n";
  else
    std::cout << "parts: " << parts.size() << ", residual zero: "
              << (d.complete() ? "true" : "false") << "\n";
  return d.complete() ? kExitOk : kExitMismatch;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const std::string& in_path) {
  const FieldFile file = read_field_file(in_path);
  const bool harmonic = is_harmonic_field(file.field);
  std::cout << "harmonic: " << (harmonic ? "true" : "false") << "\n";

  std::vector<Vec3> scan;
  if (file.frame) {
    scan = {file.frame->w1, file.frame->w2, file.frame->w3};
  } else {
    scan = {make_vec3(1, 0, 0), make_vec3(0, 1, 0), make_vec3(0, 0, 1)};
  }
  for (const Axis& w : file.axes) scan.push_back(w.v);

  std::cout << "axial axes found: [";
  bool first = true;
  for (const Vec3& v : scan) {
    if (is_axial(file.field, Axis(v))) {
      if (!first) std::cout << ", ";
      std::cout << vec3_str(v);
      first = false;
    }
  }
  std::cout << "]\n";
  return harmonic ? kExitOk : kExitInvalidField;
}

// ---- density ------------------------------------------------------------------

int cmd_density(const std::string& in_path, const std::string& pert_path,
                const std::string& out_path) {
  const FieldFile file = read_field_file(in_path);
  if (!is_harmonic_field(file.field)) {
    std::cerr << "input field is not harmonic\n";
    return kExitInvalidField;
  }
  VectorPoly pert;
  if (!pert_path.empty()) pert = read_field_file(pert_path).field.u;
  if (!laplacian(pert).is_zero()) {
    std::cerr << "perturbation is not componentwise harmonic\n";
    return kExitInvalidField;
  }

  const ApproxResult res = approximate(file.field, pert);
  Json rep{{"format_version", FieldFile::kFormatVersion},
           {"eta", poly_terms_json(res.correction.eta)},
           {"u_tilde",
            {poly_terms_json(res.correction.u_tilde.c1),
             poly_terms_json(res.correction.u_tilde.c2),
             poly_terms_json(res.correction.u_tilde.c3)}},
           {"p_tilde", field_to_json(res.p_tilde)},
           {"certificates",
            {{"div_u_tilde_zero", res.correction.cert_div_u_tilde_zero},
             {"u_tilde_harmonic", res.correction.cert_u_tilde_harmonic},
             {"eta_harmonic", res.correction.cert_eta_harmonic},
             {"dx3_eta_matches_div", res.correction.cert_dx3_eta_matches}}},
           {"sampled_errors",
            {{"sup_module", res.error.sup_module},
             {"sup_alpha", res.error.sup_alpha},
             {"sup_u", res.error.sup_u},
             {"mixed_norm", res.error.mixed_norm}}}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot open output file: " + out_path);
    out << rep.dump(2) << "\n";
  }
  std::cout << rep.dump(2) << "\n";
  return res.correction.all_certified() ? kExitOk : kExitMismatch;
}

// ---- characters -----------------------------------------------------------------

int cmd_characters(const std::string& point_str, const std::string& values_path) {
  const Frame f = Frame::standard();
  if (!point_str.empty()) {
    const Vec3 x0 = parse_point(point_str);
    if (x0.squaredNorm() > 1) {
      std::cout << "rejected: point lies outside the closed unit ball\n";
      std::cout << "growth demonstration (powers of the axial generator):\n";
      std::cout << "power,value_module,ball_sup,ratio\n";
      for (const GrowthRow& row : growth_demonstration(x0)) {
        std::cout << row.power << "," << row.value_module << "," << row.ball_sup << ","
                  << row.value_module / row.ball_sup << "\n";
      }
      return kExitInvalidField;
    }
    const DiracFunctional mu(x0);
    const FunctionalValues vals = FunctionalValues::from_dirac(mu, f);
    const Vec3 xr = reconstruct_point(vals, f);
    std::cout << "reconstructed point: " << vec3_str(xr) << "\n";
    std::cout << "matches input: " << (xr == x0 ? "true" : "false") << "\n";
    return xr == x0 ? kExitOk : kExitMismatch;
  }

  // values file: three quaternions as {"s": "...", "v": ["...","...","..."]}
  std::ifstream in(values_path);
  if (!in) throw FormatError("cannot open file: " + values_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("JSON parse error: ") + ex.what());
  }
  if (!j.contains("values") || !j.at("values").is_array() || j.at("values").size() != 3)
    throw FormatError("values file needs a 'values' array of three quaternions");
  const auto quat_of = [](const Json& q) {
    if (!q.contains("s") || !q.contains("v")) throw FormatError("quaternion needs 's' and 'v'");
    try {
      return Quaternion{parse_rational(q.at("s").get<std::string>()),
                        vec3_from_json(q.at("v"))};
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  };
  try {
    const FunctionalValues vals(quat_of(j.at("values").at(0)), quat_of(j.at("values").at(1)),
                                quat_of(j.at("values").at(2)), f);
    const Vec3 xr = reconstruct_point(vals, f);
    std::cout << "reconstructed point: " << vec3_str(xr) << "\n";
    return kExitOk;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "values rejected: " << ex.what() << "\n";
    return kExitInvalidField;
  }
}

// ---- witness -----------------------------------------------------------------------

int cmd_witness(const std::string& format) {
  const NonClosureWitness w = non_closure_witness();
  Json cert{{"p", field_to_json(w.p)},
            {"q", field_to_json(w.q)},
            {"pq", field_to_json(w.pq)},
            {"div_defect", poly_terms_json(w.div_defect)},
            {"gradient_defect",
             {poly_terms_json(w.gradient_defect.c1), poly_terms_json(w.gradient_defect.c2),
              poly_terms_json(w.gradient_defect.c3)}},
            {"pq_harmonic", is_harmonic_field(w.pq)}};
  if (format == "csv") {
    std::cout << "pq_harmonic,false\n";
    std::cout << "div_defect," << cert.at("div_defect").dump() << "\n";
  } else {
    std::cout << cert.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with harmonic quaternion fields"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "csv";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  unsigned long seed = kDefaultSeed;
  app.add_option("--seed", seed, "seed for randomized tables");

  int n_max = 4, r_max = 0;
  auto* dims = app.add_subcommand("dims", "axial span dimension table");
  dims->add_option("--n-max", n_max, "largest degree");
  dims->add_option("--r-max", r_max, "largest family size (default n+2 per degree)");

  std::string in_path, out_path, pert_path, point_str, values_path;
  auto* decompose = app.add_subcommand("decompose", "decompose a harmonic field into axial parts");
  decompose->add_option("input", in_path, "field file")->required();
  decompose->add_option("--out", out_path, "certificate output file");

  auto* verify = app.add_subcommand("verify", "harmonicity and axiality report");
  verify->add_option("input", in_path, "field file")->required();

  auto* density = app.add_subcommand("density", "divergence correction and completion");
  density->add_option("input", in_path, "field file")->required();
  density->add_option("--perturbation", pert_path, "field file whose vector part perturbs u");
  density->add_option("--out", out_path, "report output file");

  auto* characters = app.add_subcommand("characters", "point reconstruction from functional values");
  characters->add_option("--point", point_str, "rational point 'a,b,c'");
  characters->add_option("--values-file", values_path, "functional values file");

  auto* witness = app.add_subcommand("witness", "non-closure certificate");
  (void)witness;

  CLI11_PARSE(app, argc, argv);

  try {
    if (dims->parsed()) return cmd_dims(n_max, r_max, seed, format);
    if (decompose->parsed()) return cmd_decompose(in_path, out_path, format);
    if (verify->parsed()) return cmd_verify(in_path);
    if (density->parsed()) return cmd_density(in_path, pert_path, out_path);
    if (characters->parsed()) {
      if (point_str.empty() && values_path.empty()) {
        std::cerr << "characters: need --point or --values-file\n";
        return kExitFormat;
      }
      return cmd_characters(point_str, values_path);
    }
    if (witness->parsed()) return cmd_witness(format);
  } catch (const FormatError& ex) {
    std::cerr << "format error: " << ex.what() << "\n";
    return kExitFormat;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return kExitInvalidField;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}
