#include "symref/cli_io.hpp"

#include "symref/catalog.hpp"
#include "symref/errors.hpp"

#include <json.hpp>

#include <iomanip>
#include <limits>
#include <sstream>

namespace symref {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Bounds that keep a hostile document from allocating without limit.
constexpr std::uint64_t kMaxConductor = 10000;
constexpr std::uint64_t kMaxDimension = 512;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("", e.what());
    }
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::uint64_t parse_positive(const json& j, const std::string& path, std::uint64_t max) {
    if (!j.is_number_integer()) throw ValidationError(path, "expected a positive integer");
    if (j.is_number_unsigned() ? j.get<std::uint64_t>() == 0 : j.get<std::int64_t>() <= 0)
        throw ValidationError(path, "expected a positive integer");
    const auto v = j.get<std::uint64_t>();
    if (v > max) throw ValidationError(path, "value " + std::to_string(v) + " exceeds the limit " + std::to_string(max));
    return v;
}

BigRational parse_rational(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return BigRational::parse(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ValidationError(path, "malformed rational \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw ValidationError(path, "integer out of range; write it as a string");
        return BigRational(static_cast<std::int64_t>(v));
    }
    if (j.is_number_integer()) return BigRational(j.get<std::int64_t>());
    if (j.is_number_float()) throw ValidationError(path, "floating-point value; write it as \"p/q\"");
    throw ValidationError(path, "expected a rational \"p/q\"");
}

CyclotomicNumber parse_entry(const json& j, Conductor m, const std::string& path) {
    if (!j.is_object()) return CyclotomicNumber(parse_rational(j, path), m);

    Conductor c = m;
    for (const auto& [key, value] : j.items()) {
        if (key != "conductor" && key != "coeffs") throw ValidationError(join(path, key), "unknown key");
    }
    if (j.contains("conductor")) {
        c = static_cast<Conductor>(parse_positive(j["conductor"], join(path, "conductor"), kMaxConductor));
        if (m % c != 0)
            throw ValidationError(join(path, "conductor"),
                                  std::to_string(c) + " does not divide the document conductor " + std::to_string(m));
    }
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ValidationError(join(path, "coeffs"), "expected a list");
    const json& coeffs = j["coeffs"];
    const std::size_t phi = euler_phi(c);
    if (coeffs.size() != phi)
        throw ValidationError(join(path, "coeffs"), "expected " + std::to_string(phi) + " coefficients for conductor " +
                                                        std::to_string(c) + ", got " + std::to_string(coeffs.size()));
    std::vector<BigRational> values;
    values.reserve(phi);
    for (std::size_t i = 0; i < phi; ++i) values.push_back(parse_rational(coeffs[i], at_index(join(path, "coeffs"), i)));
    return promote(CyclotomicNumber(c, std::move(values)), m);
}

ExactMatrix parse_matrix(const json& j, std::size_t n, Conductor m, const std::string& path) {
    if (!j.is_array() || j.size() != n) throw ValidationError(path, "expected " + std::to_string(n) + " rows");
    ExactMatrix out(n, n, m);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string row_path = at_index(path, r);
        const json& row = j[r];
        if (!row.is_array() || row.size() != n) throw ValidationError(row_path, "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) out.set(r, c, parse_entry(row[c], m, at_index(row_path, c)));
    }
    return out;
}

ordered_json entry_json(const CyclotomicNumber& x) {
    if (x.is_rational()) return x.coeffs().front().to_string();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.to_string());
    return ordered_json{{"coeffs", std::move(coeffs)}};
}

ordered_json matrix_json(const ExactMatrix& a) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(entry_json(a.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::complex<double> parse_complex(const json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ValidationError(path, "expected a number or [re, im]");
}

Eigen::MatrixXcd parse_complex_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw ValidationError(path, "expected a non-empty list of rows");
    const std::size_t n = j.size();
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const std::string row_path = at_index(path, r);
        if (!j[r].is_array() || j[r].size() != n)
            throw ValidationError(row_path, "expected " + std::to_string(n) + " entries (square matrix)");
        for (std::size_t c = 0; c < n; ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(j[r][c], at_index(row_path, c));
    }
    return out;
}

template <class F>
CommandResult guarded(F&& body) {
    try {
        return body();
    } catch (const OrderBoundExceeded& e) {
        return {kExitOrderBound, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitInputError, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace

GroupSpec parse_spec(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ValidationError("", "expected an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "name" && key != "dimension" && key != "conductor" && key != "symplectic_form" && key != "generators")
            throw ValidationError(key, "unknown key");
    }

    GroupSpec spec;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ValidationError("name", "expected a string");
        spec.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("dimension")) throw ValidationError("dimension", "missing");
    spec.dimension = parse_positive(doc["dimension"], "dimension", kMaxDimension);
    spec.conductor = doc.contains("conductor")
                         ? static_cast<Conductor>(parse_positive(doc["conductor"], "conductor", kMaxConductor))
                         : 1;

    const json form = doc.contains("symplectic_form") ? doc["symplectic_form"] : json();
    if (form.is_null()) {
        spec.form_kind = FormKind::None;
    } else if (form.is_string()) {
        if (form.get<std::string>() != "standard")
            throw ValidationError("symplectic_form", "expected \"standard\" or a matrix");
        if (spec.dimension % 2 != 0)
            throw ValidationError("symplectic_form", "odd dimension " + std::to_string(spec.dimension) +
                                                         " cannot carry a symplectic form");
        spec.form_kind = FormKind::Standard;
    } else {
        if (spec.dimension % 2 != 0)
            throw ValidationError("symplectic_form", "odd dimension " + std::to_string(spec.dimension) +
                                                         " cannot carry a symplectic form");
        spec.form_kind = FormKind::Explicit;
        spec.explicit_form = parse_matrix(form, spec.dimension, spec.conductor, "symplectic_form");
        try {
            validate_symplectic_form(spec.explicit_form);
        } catch (const BadForm& e) {
            throw ValidationError("symplectic_form", e.what());
        }
    }

    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw ValidationError("generators", "expected a list of matrices");
    const json& gens = doc["generators"];
    for (std::size_t i = 0; i < gens.size(); ++i)
        spec.generators.push_back(parse_matrix(gens[i], spec.dimension, spec.conductor, at_index("generators", i)));
    return spec;
}

std::string serialize_spec(const GroupSpec& spec) {
    ordered_json doc;
    doc["name"] = spec.name;
    doc["dimension"] = spec.dimension;
    doc["conductor"] = spec.conductor;
    if (spec.form_kind == FormKind::Standard) doc["symplectic_form"] = "standard";
    if (spec.form_kind == FormKind::Explicit)
        doc["symplectic_form"] = matrix_json(promote(spec.explicit_form, spec.conductor));
    ordered_json gens = ordered_json::array();
    for (const auto& g : spec.generators) gens.push_back(matrix_json(promote(g, spec.conductor)));
    doc["generators"] = std::move(gens);
    return doc.dump(2) + "\n";
}

ResolutionFiberData parse_fibers(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("fibers") || !doc["fibers"].is_object())
        throw ValidationError("fibers", "expected an object mapping stratum index to fiber dimension");
    ResolutionFiberData out;
    for (const auto& [key, value] : doc["fibers"].items()) {
        const std::string path = join("fibers", key);
        std::size_t index = 0;
        std::size_t used = 0;
        try {
            index = std::stoul(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != key.size() || key.front() == '-' || key.front() == '+')
            throw ValidationError(path, "stratum key must be a non-negative integer");
        if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() && value.get<std::int64_t>() < 0))
            throw ValidationError(path, "expected a non-negative integer");
        out[index] = value.get<std::size_t>();
    }
    return out;
}

FormSpectrumInput parse_spectrum_input(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("theta")) throw ValidationError("theta", "missing");
    FormSpectrumInput input;
    input.theta = parse_complex_matrix(doc["theta"], "theta");
    if (doc.contains("metric") && !doc["metric"].is_null()) {
        input.metric = parse_complex_matrix(doc["metric"], "metric");
    } else {
        input.metric = Eigen::MatrixXcd::Identity(input.theta.rows(), input.theta.cols());
    }
    return input;
}

AnalysisReport analyze(const GroupSpec& spec, bool with_strata, std::size_t max_order) {
    if (spec.form_kind == FormKind::None)
        throw ValidationError("symplectic_form", "analysis needs a symplectic form; double an action on W first");
    const FiniteMatrixGroup group = closure(spec, max_order);
    const ReflectionCensus c = census(group);
    const Subgroup g0 = reflection_subgroup(group, c);
    const Verdict v = verdict(group, g0);

    AnalysisReport report;
    report.name = spec.name;
    report.dimension = spec.dimension;
    report.group_order = group.order();
    report.reflection_count = c.symplectic_reflections.size();
    for (const auto& cls : conjugacy_classes(group)) {
        if (c.codimensions[cls.front()] == 2) ++report.reflection_conjugacy_class_count;
    }
    report.g0_order = v.g0_order;
    report.g0_index = v.g0_index;
    report.verdict = v.kind;
    report.dim2_duval_note = v.dim2_existence_note;
    report.z_min_codim = z_locus_min_codim(group, g0, c);
    if (with_strata) {
        const StratificationLattice lattice = build_lattice(group);
        std::vector<StratumSummary> strata;
        std::vector<bool> seen(lattice.orbit_count, false);
        for (const Stratum& s : lattice.strata) {
            if (seen[s.orbit]) continue;
            seen[s.orbit] = true;
            strata.push_back({s.codim, s.stabilizer_order, s.orbit_size});
        }
        report.strata = std::move(strata);
    }
    return report;
}

std::string report_to_json(const AnalysisReport& report) {
    ordered_json doc;
    doc["name"] = report.name;
    doc["dimension"] = report.dimension;
    doc["group_order"] = report.group_order;
    doc["reflection_count"] = report.reflection_count;
    doc["reflection_conjugacy_class_count"] = report.reflection_conjugacy_class_count;
    doc["g0_order"] = report.g0_order;
    doc["g0_index"] = report.g0_index;
    doc["verdict"] = std::string(to_string(report.verdict));
    doc["dim2_duval_note"] = report.dim2_duval_note;
    doc["z_min_codim"] = report.z_min_codim;
    if (report.strata) {
        ordered_json strata = ordered_json::array();
        for (const auto& s : *report.strata)
            strata.push_back(ordered_json{{"codim", s.codim}, {"stabilizer_order", s.stabilizer_order}, {"orbit_size", s.orbit_size}});
        doc["strata"] = std::move(strata);
    } else {
        doc["strata"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream os;
    os << "group " << (report.name.empty() ? "<unnamed>" : report.name) << "\n";
    os << "  dimension                  " << report.dimension << "\n";
    os << "  order                      " << report.group_order << "\n";
    os << "  symplectic reflections     " << report.reflection_count << " in "
       << report.reflection_conjugacy_class_count << " conjugacy classes\n";
    os << "  G0 order / index           " << report.g0_order << " / " << report.g0_index << "\n";
    os << "  min codim outside G0       ";
    if (report.z_min_codim > report.dimension) os << "none (G0 = G)\n";
    else os << report.z_min_codim << "\n";
    if (report.strata) {
        os << "  strata (one per orbit)     codim  stabilizer  orbit\n";
        for (const auto& s : *report.strata)
            os << "                             " << std::setw(5) << s.codim << "  " << std::setw(10) << s.stabilizer_order
               << "  " << std::setw(5) << s.orbit_size << "\n";
    }
    os << "verdict: " << to_string(report.verdict) << "\n";
    if (report.verdict == VerdictKind::NoSymplecticResolution)
        os << "  G is not generated by symplectic reflections; V/G admits no symplectic resolution.\n";
    else
        os << "  G is generated by symplectic reflections; a resolution is not excluded.\n";
    if (report.dim2_duval_note) os << "  dim V = 2: V/G is a Du Val singularity and has a symplectic resolution.\n";
    return os.str();
}

CommandResult run_analyze(std::string_view spec_text, const AnalyzeOptions& options) {
    return guarded([&] {
        const AnalysisReport report = analyze(parse_spec(spec_text), options.strata, options.max_order);
        CommandResult out;
        out.out = options.json ? report_to_json(report) : report_to_text(report);
        out.exit_code = report.verdict == VerdictKind::NoSymplecticResolution ? kExitNegative : kExitOk;
        return out;
    });
}

CommandResult run_semismall(std::string_view spec_text, std::string_view fibers_text, std::size_t max_order) {
    return guarded([&] {
        const GroupSpec spec = parse_spec(spec_text);
        const ResolutionFiberData fibers = parse_fibers(fibers_text);
        const FiniteMatrixGroup group = closure(spec, max_order);
        const StratificationLattice lattice = build_lattice(group);
        for (const auto& [index, dim] : fibers) {
            if (index >= lattice.strata.size())
                throw ValidationError("fibers." + std::to_string(index),
                                      "no such stratum; the lattice has " + std::to_string(lattice.strata.size()));
        }
        const SemismallResult result = semismall_check(lattice, fibers);

        std::ostringstream os;
        os << "stratum  codim  fiber  2*fiber<=codim\n";
        for (const auto& row : result.rows)
            os << std::setw(7) << row.stratum << "  " << std::setw(5) << row.codim << "  " << std::setw(5) << row.fiber_dim
               << "  " << (row.passes ? "pass" : "FAIL") << "\n";
        os << "semismall: " << (result.passes ? "yes" : "no") << "\n";
        return CommandResult{result.passes ? kExitOk : kExitNegative, os.str(), ""};
    });
}

CommandResult run_double(std::string_view spec_text) {
    return guarded([&] {
        const GroupSpec spec = parse_spec(spec_text);
        if (spec.form_kind != FormKind::None)
            throw ValidationError("symplectic_form", "double expects a plain action on W without a symplectic form");
        return CommandResult{kExitOk, serialize_spec(double_spec(spec)), ""};
    });
}

CommandResult run_catalog_list() {
    return guarded([] {
        std::ostringstream os;
        os << std::left << std::setw(28) << "name" << ' ' << std::setw(22) << "family" << ' ' << std::setw(30)
           << "parameters" << ' ' << std::setw(10) << "order" << ' ' << std::setw(11) << "reflections" << ' '
           << "verdict\n";
        for (const auto& e : catalog_entries()) {
            os << std::setw(28) << e.name << ' ' << std::setw(22) << e.family << ' ' << std::setw(30) << e.parameters
               << ' ' << std::setw(10) << e.expected_order << ' ' << std::setw(11)
               << (e.expected_reflections ? std::to_string(*e.expected_reflections) : std::string("-")) << ' '
               << (e.expected_verdict ? std::string(to_string(*e.expected_verdict)) : std::string("-")) << "\n";
        }
        return CommandResult{kExitOk, os.str(), ""};
    });
}

CommandResult run_catalog_emit(std::string_view name) {
    return guarded([&] { return CommandResult{kExitOk, serialize_spec(find_catalog_entry(name).spec()), ""}; });
}

CommandResult run_spectrum(std::string_view input_text) {
    return guarded([&] {
        const FormSpectrumInput input = parse_spectrum_input(input_text);
        const std::vector<double> lambda = symplectic_eigenvalues(input);
        ordered_json doc;
        doc["dimension"] = input.theta.rows();
        doc["symplectic_eigenvalues"] = lambda;
        return CommandResult{kExitOk, doc.dump(2) + "\n", ""};
    });
}

}  // namespace symref
