#include <curvjet/cli.hpp>

#include <curvjet/corotational.hpp>
#include <curvjet/curvature.hpp>
#include <curvjet/errors.hpp>
#include <curvjet/updating.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace curvjet::cli {

namespace {

using nlohmann::ordered_json;

CurveSpec curve_from_json(const ordered_json& j) {
    CurveSpec spec;
    spec.kind = curve_kind_from_string(j.at("kind").get<std::string>());

    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty()) throw InvalidSpec("'coeffs' must be a non-empty array");
    if (coeffs[0].is_array()) {
        const std::size_t expected = spec.is_fixed_axis() ? 1 : 3;
        if (coeffs.size() != expected)
            throw InvalidSpec("'coeffs' must hold " + std::to_string(expected) + " list(s) for kind " +
                              to_string(spec.kind));
        for (std::size_t k = 0; k < expected; ++k)
            spec.coeffs[k] = coeffs[k].get<std::vector<double>>();
    } else if (spec.is_fixed_axis()) {
        spec.coeffs[0] = coeffs.get<std::vector<double>>();
    } else {
        throw InvalidSpec("'coeffs' must be a list of 3 component lists for kind " + to_string(spec.kind));
    }

    if (spec.is_fixed_axis()) {
        const auto axis = j.at("axis").get<std::vector<double>>();
        if (axis.size() != 3) throw InvalidSpec("'axis' must have 3 components");
        spec.axis = {axis[0], axis[1], axis[2]};
    }

    if (j.contains("domain")) {
        const auto domain = j.at("domain").get<std::vector<double>>();
        if (domain.size() != 2) throw InvalidSpec("'domain' must be [xi_min, xi_max]");
        spec.xi_min = domain[0];
        spec.xi_max = domain[1];
    }

    spec.validate();
    return spec;
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("JSON parse failure: ") + e.what());
    }
}

struct EvalSample {
    double xi = 0.0;
    Mat3 q;
    std::vector<Vec3> kappa;        // rows 0..N
    std::vector<Vec3> kappa_bar;    // rows 0..N
    std::vector<Vec3> kappa_tilde;  // rows 1..N
};

EvalSample eval_at(const CurveSpec& spec, double xi, int N) {
    const GibbsJets g = spec.gibbs(xi, N + 1);
    const CurvatureJet kappa = curvature_derivatives(g.phi, truncate(g.phi_bar, N), N);
    const Rotation q = rotation_from_gibbs(g.phi[0], g.phi_bar[0]);
    const RotationJet qjet = rotation_derivatives(q, kappa, N);
    const MaterialCurvatureJet kbar = material_curvature_derivatives(qjet, kappa, N);

    EvalSample out;
    out.xi = xi;
    out.q = q.matrix();
    for (int n = 0; n <= N; ++n) {
        out.kappa.push_back(kappa.row(n));
        out.kappa_bar.push_back(kbar.row(n));
    }
    if (N >= 1) {
        const CorotationalJet tilde = corot_curvature_derivatives(qjet, kbar, N);
        for (int n = 1; n <= N; ++n) out.kappa_tilde.push_back(tilde.row(n));
    }
    return out;
}

struct UpdateSample {
    double xi = 0.0;
    Mat3 q_f;
    std::vector<Vec3> kappa_f;          // rows 0..N
    std::vector<double> verify_errors;  // mixed error per row when requested
};

UpdateSample update_at(const CurveSpec& initial, const CurveSpec& incremental, double xi, int N,
                       bool verify) {
    const GibbsJets gi = initial.gibbs(xi, N + 1);
    const GibbsJets gp = incremental.gibbs(xi, N + 1);
    const CurvatureJet kappa_i = curvature_derivatives(gi.phi, truncate(gi.phi_bar, N), N);
    const CurvatureJet kappa_p = curvature_derivatives(gp.phi, truncate(gp.phi_bar, N), N);
    const Rotation q_i = rotation_from_gibbs(gi.phi[0], gi.phi_bar[0]);
    const Rotation q_p = rotation_from_gibbs(gp.phi[0], gp.phi_bar[0]);

    const CurvatureJet kappa_f = update_curvature(kappa_p, q_p, kappa_i, N);

    UpdateSample out;
    out.xi = xi;
    out.q_f = compose(q_p, q_i).matrix();
    for (int n = 0; n <= N; ++n) out.kappa_f.push_back(kappa_f.row(n));

    if (verify) {
        const SampledField<Vec3> field = composed_curvature_field(initial, incremental, xi);
        for (int n = 0; n <= N; ++n) {
            const Vec3 reference = fd_derivative(field, FdConfig::standard(n));
            const Vec3 diff = kappa_f.row(n) - reference;
            out.verify_errors.push_back(max_abs(diff) / (1.0 + norm(kappa_f.row(n))));
        }
    }
    return out;
}

void append_vec(std::string& line, const Vec3& v) {
    line += ',' + format_double(v.x) + ',' + format_double(v.y) + ',' + format_double(v.z);
}

void append_mat(std::string& line, const Mat3& m) {
    for (double v : m.a) line += ',' + format_double(v);
}

ordered_json json_vec(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

ordered_json json_mat(const Mat3& m) {
    ordered_json a = ordered_json::array();
    for (double v : m.a) a.push_back(v);
    return a;
}

ordered_json json_rows(const std::vector<Vec3>& rows) {
    ordered_json a = ordered_json::array();
    for (const Vec3& r : rows) a.push_back(json_vec(r));
    return a;
}

std::string csv_header_eval(int N) {
    std::string h = "xi";
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) h += ",Q" + std::to_string(r) + std::to_string(c);
    const char* comps = "xyz";
    for (int n = 0; n <= N; ++n)
        for (int c = 0; c < 3; ++c) h += ",kappa" + std::to_string(n) + "_" + comps[c];
    for (int n = 0; n <= N; ++n)
        for (int c = 0; c < 3; ++c) h += ",kappa_bar" + std::to_string(n) + "_" + comps[c];
    for (int n = 1; n <= N; ++n)
        for (int c = 0; c < 3; ++c) h += ",kappa_tilde" + std::to_string(n) + "_" + comps[c];
    return h;
}

std::string csv_header_update(int N, bool verify) {
    std::string h = "xi";
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) h += ",Q" + std::to_string(r) + std::to_string(c);
    const char* comps = "xyz";
    for (int n = 0; n <= N; ++n)
        for (int c = 0; c < 3; ++c) h += ",kappa" + std::to_string(n) + "_" + comps[c];
    if (verify)
        for (int n = 0; n <= N; ++n) h += ",verify_err" + std::to_string(n);
    return h;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CurveSpec parse_curve_spec(const std::string& json_text) { return curve_from_json(parse_json(json_text)); }

std::pair<CurveSpec, CurveSpec> parse_update_spec(const std::string& json_text) {
    const ordered_json j = parse_json(json_text);
    if (!j.contains("initial") || !j.contains("incremental"))
        throw InvalidSpec("update spec needs 'initial' and 'incremental' curve objects");
    return {curve_from_json(j.at("initial")), curve_from_json(j.at("incremental"))};
}

std::vector<double> parse_xi_range(const std::string& text) {
    double a = 0.0;
    double b = 0.0;
    int count = 0;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a, &b, &count, &tail) != 3 || count < 1)
        throw InvalidSpec("--xi expects 'a:b:count' with count >= 1, got '" + text + "'");
    std::vector<double> pts;
    if (count == 1) {
        pts.push_back(a);
    } else {
        for (int i = 0; i < count; ++i) pts.push_back(a + (b - a) * static_cast<double>(i) / (count - 1));
    }
    return pts;
}

std::vector<double> parse_point_list(const std::string& text) {
    std::vector<double> pts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            pts.push_back(v);
        } catch (const std::exception&) {
            throw InvalidSpec("--points expects comma-separated numbers, got '" + item + "'");
        }
    }
    if (pts.empty()) throw InvalidSpec("--points yielded no evaluation points");
    return pts;
}

int run_eval(const JobConfig& job, std::ostream& out, std::ostream& err) {
    CurveSpec spec;
    ordered_json spec_echo;
    try {
        spec_echo = parse_json(job.spec_text);
        spec = curve_from_json(spec_echo);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    }

    std::vector<EvalSample> samples;
    for (double xi : job.points) {
        try {
            samples.push_back(eval_at(spec, xi, job.order));
        } catch (const Error& e) {
            err << "xi=" << format_double(xi) << ": " << e.what() << '\n';
            return 2;
        }
    }

    if (job.format == Format::Csv) {
        out << csv_header_eval(job.order) << '\n';
        for (const EvalSample& s : samples) {
            std::string line = format_double(s.xi);
            append_mat(line, s.q);
            for (const Vec3& r : s.kappa) append_vec(line, r);
            for (const Vec3& r : s.kappa_bar) append_vec(line, r);
            for (const Vec3& r : s.kappa_tilde) append_vec(line, r);
            out << line << '\n';
        }
    } else {
        ordered_json doc;
        doc["spec"] = spec_echo;
        doc["order"] = job.order;
        doc["samples"] = ordered_json::array();
        for (const EvalSample& s : samples) {
            ordered_json js;
            js["xi"] = s.xi;
            js["Q"] = json_mat(s.q);
            js["kappa"] = json_rows(s.kappa);
            js["kappa_bar"] = json_rows(s.kappa_bar);
            js["kappa_tilde"] = json_rows(s.kappa_tilde);
            doc["samples"].push_back(std::move(js));
        }
        out << doc.dump(2) << '\n';
    }
    return out.good() ? 0 : 1;
}

int run_update(const JobConfig& job, std::ostream& out, std::ostream& err) {
    CurveSpec initial;
    CurveSpec incremental;
    ordered_json spec_echo;
    try {
        spec_echo = parse_json(job.spec_text);
        auto pair = parse_update_spec(job.spec_text);
        initial = pair.first;
        incremental = pair.second;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    }

    std::vector<UpdateSample> samples;
    for (double xi : job.points) {
        try {
            samples.push_back(update_at(initial, incremental, xi, job.order, job.verify));
        } catch (const Error& e) {
            err << "xi=" << format_double(xi) << ": " << e.what() << '\n';
            return 2;
        }
    }

    if (job.format == Format::Csv) {
        out << csv_header_update(job.order, job.verify) << '\n';
        for (const UpdateSample& s : samples) {
            std::string line = format_double(s.xi);
            append_mat(line, s.q_f);
            for (const Vec3& r : s.kappa_f) append_vec(line, r);
            for (double e : s.verify_errors) line += ',' + format_double(e);
            out << line << '\n';
        }
    } else {
        ordered_json doc;
        doc["spec"] = spec_echo;
        doc["order"] = job.order;
        doc["samples"] = ordered_json::array();
        for (const UpdateSample& s : samples) {
            ordered_json js;
            js["xi"] = s.xi;
            js["Q"] = json_mat(s.q_f);
            js["kappa"] = json_rows(s.kappa_f);
            if (job.verify) js["verify_mixed_error"] = s.verify_errors;
            doc["samples"].push_back(std::move(js));
        }
        out << doc.dump(2) << '\n';
    }
    return out.good() ? 0 : 1;
}

int run_tables(int max_m, std::ostream& out, std::ostream& err) {
    if (max_m < 0 || max_m > 12) {
        err << "tables: max order must lie in [0, 12], got " << max_m << '\n';
        return 1;
    }
    out << "jmax(m) arranged by (n, i) with m = n - i\n";
    for (int n = 0; n <= max_m; ++n) {
        out << "n=" << n << ':';
        for (int i = 0; i <= n; ++i) out << ' ' << jmax(n - i);
        out << '\n';
    }
    out << "bcoef(m, j) for j = 0..jmax(m)\n";
    for (int m = 0; m <= max_m; ++m) {
        out << "m=" << m << ':';
        for (int j = 0; j <= jmax(m); ++j) out << ' ' << bcoef(m, j);
        out << '\n';
    }
    return out.good() ? 0 : 1;
}

int run_verify(const JobConfig& job, std::ostream& out, std::ostream& err) {
    CurveSpec spec;
    ordered_json spec_echo;
    try {
        spec_echo = parse_json(job.spec_text);
        spec = curve_from_json(spec_echo);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    }

    std::vector<VerificationReport> reports;
    for (double xi : job.points) reports.push_back(verify_curvature(spec, xi, job.order));

    bool all_pass = true;
    for (const VerificationReport& r : reports) all_pass = all_pass && r.all_pass();

    if (job.format == Format::Csv) {
        out << "xi,quantity,order,abs_error,mixed_error,tolerance,status,error\n";
        for (const VerificationReport& r : reports) {
            for (const VerificationRow& row : r.rows) {
                out << format_double(r.xi) << ',' << row.quantity << ',' << row.deriv_order << ','
                    << format_double(row.abs_error) << ',' << format_double(row.mixed_error) << ','
                    << format_double(row.tolerance) << ',' << (row.pass ? "pass" : "fail") << ','
                    << row.error << '\n';
            }
        }
    } else {
        ordered_json doc;
        doc["spec"] = spec_echo;
        doc["order"] = job.order;
        doc["reports"] = ordered_json::array();
        for (const VerificationReport& r : reports) {
            ordered_json jr;
            jr["xi"] = r.xi;
            jr["rows"] = ordered_json::array();
            for (const VerificationRow& row : r.rows) {
                ordered_json jrow;
                jrow["quantity"] = row.quantity;
                jrow["order"] = row.deriv_order;
                jrow["closed_form"] = row.closed_form;
                jrow["oracle"] = row.oracle;
                jrow["abs_error"] = row.abs_error;
                jrow["mixed_error"] = row.mixed_error;
                jrow["tolerance"] = row.tolerance;
                jrow["pass"] = row.pass;
                jrow["error"] = row.error;
                jr["rows"].push_back(std::move(jrow));
            }
            doc["reports"].push_back(std::move(jr));
        }
        out << doc.dump(2) << '\n';
    }
    if (!out.good()) return 1;
    return all_pass ? 0 : 2;
}

int run_to_destination(int (*runner)(const JobConfig&, std::ostream&, std::ostream&),
                       const JobConfig& job, std::ostream& err) {
    if (job.out_path.empty()) return runner(job, std::cout, err);
    std::ofstream file(job.out_path, std::ios::binary);
    if (!file) {
        err << "cannot open output file '" << job.out_path << "'\n";
        return 1;
    }
    const int code = runner(job, file, err);
    file.flush();
    if (!file.good()) {
        err << "failed writing output file '" << job.out_path << "'\n";
        return 1;
    }
    return code;
}

}  // namespace curvjet::cli
