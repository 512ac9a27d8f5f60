#include "cli_commands.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gal2/json_io.hpp"
#include "gal2/plane.hpp"
#include "gal2/representations.hpp"
#include "gal2/verify.hpp"

namespace gal2::cli {

namespace {

struct Options {
    std::string scalar;  // "float", "rational", or "" (command decides)

    std::vector<std::string> compose_motions;
    std::string compose_file;

    std::string act_motion;
    std::string act_point;
    std::string act_rep;

    std::string convert_to;
    std::vector<std::string> convert_elements;
    std::string convert_file;

    std::uint64_t verify_seed = 0;
    int verify_trials = 1000;
    std::string verify_output = "text";

    std::string project_grid;
    std::string project_motion;
    std::string project_output = "csv";
};

std::vector<std::string> read_json_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    return lines;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON: " + text);
    return j;
}

RepId parse_rep_name(const std::string& name) {
    const auto rep = rep_from_name(name);
    if (!rep) throw std::invalid_argument("unknown representation '" + name + "'");
    return *rep;
}

template <Scalar S>
int run_compose(const Options& opt, std::ostream& out) {
    std::vector<std::string> inputs = opt.compose_motions;
    if (!opt.compose_file.empty()) {
        const auto lines = read_json_lines(opt.compose_file);
        inputs.insert(inputs.end(), lines.begin(), lines.end());
    }
    if (inputs.empty()) throw std::invalid_argument("compose requires at least one motion");
    GalileanMotion<S> acc = motion_from_json<S>(parse_json(inputs.front()));
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        acc = compose(acc, motion_from_json<S>(parse_json(inputs[i])));
    }
    out << to_json(acc).dump() << "\n";
    return kExitSuccess;
}

template <Scalar S>
int run_act(const Options& opt, std::ostream& out) {
    const auto m = motion_from_json<S>(parse_json(opt.act_motion));
    const auto p = point_from_json<S>(parse_json(opt.act_point));
    const GalileanPoint<S> image =
        opt.act_rep.empty() ? act(m, p) : act_via_rep(m, p, parse_rep_name(opt.act_rep));
    out << to_json(image).dump() << "\n";
    return kExitSuccess;
}

template <Scalar S>
int run_convert(const Options& opt, std::ostream& out) {
    const RepId target = parse_rep_name(opt.convert_to);
    std::vector<std::string> inputs = opt.convert_elements;
    if (!opt.convert_file.empty()) {
        const auto lines = read_json_lines(opt.convert_file);
        inputs.insert(inputs.end(), lines.begin(), lines.end());
    }
    if (inputs.empty()) throw std::invalid_argument("convert requires at least one element");
    for (const std::string& text : inputs) {
        const auto element = rep_element_from_json<S>(parse_json(text));
        const auto converted = to_rep(from_rep(element), target);
        out << to_json(converted).dump() << "\n";
    }
    return kExitSuccess;
}

int run_verify(const Options& opt, std::ostream& out) {
    ScalarMode mode = ScalarMode::Both;
    if (opt.scalar == "float") mode = ScalarMode::Float;
    if (opt.scalar == "rational") mode = ScalarMode::Rational;
    const VerifyReport report = run_verification(opt.verify_seed, opt.verify_trials, mode);
    if (opt.verify_output == "json") {
        json results = json::array();
        for (const auto& r : report.results) {
            results.push_back({{"name", r.name},
                               {"trials", r.trials},
                               {"passed", r.passed},
                               {"detail", r.detail}});
        }
        const json doc = {{"seed", opt.verify_seed},
                          {"trials", opt.verify_trials},
                          {"all_passed", report.all_passed()},
                          {"results", std::move(results)}};
        out << doc.dump() << "\n";
    } else if (opt.verify_output == "csv") {
        out << "name,trials,passed,detail\n";
        for (const auto& r : report.results) {
            out << r.name << ',' << r.trials << ',' << (r.passed ? "true" : "false") << ','
                << r.detail << "\n";
        }
    } else {
        for (const auto& r : report.results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials;
            if (!r.detail.empty()) out << " (" << r.detail << ")";
            out << "\n";
        }
    }
    return report.all_passed() ? kExitSuccess : kExitVerifyFailure;
}

// Grid spec "y0:y1:ny,z0:z1:nz" over the sphere coordinates.
template <Scalar S>
std::vector<SpherePoint<S>> parse_grid(const std::string& spec) {
    const auto parse_range = [](const std::string& part) {
        std::vector<std::string> fields;
        std::size_t begin = 0;
        for (;;) {
            const auto colon = part.find(':', begin);
            fields.push_back(part.substr(begin, colon - begin));
            if (colon == std::string::npos) break;
            begin = colon + 1;
        }
        if (fields.size() != 3) throw std::invalid_argument("bad grid spec: expected lo:hi:count");
        S lo, hi;
        long count = 0;
        try {
            lo = detail::scalar_from_text<S>(fields[0]);
            hi = detail::scalar_from_text<S>(fields[1]);
            count = std::stol(fields[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid spec: cannot parse '" + part + "'");
        }
        if (count < 1) throw std::invalid_argument("bad grid spec: count must be >= 1");
        std::vector<S> values;
        values.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            values.push_back(lo);
        } else {
            const S step = (hi - lo) / scalar_traits<S>::from_int(count - 1);
            for (long i = 0; i < count; ++i) {
                values.push_back(lo + scalar_traits<S>::from_int(i) * step);
            }
        }
        return values;
    };
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("bad grid spec: expected two ranges separated by ','");
    }
    const auto ys = parse_range(spec.substr(0, comma));
    const auto zs = parse_range(spec.substr(comma + 1));
    std::vector<SpherePoint<S>> points;
    points.reserve(ys.size() * zs.size());
    for (const S& y : ys) {
        for (const S& z : zs) points.push_back({y, z});
    }
    return points;
}

template <Scalar S>
int run_project(const Options& opt, std::ostream& out) {
    const auto m = motion_from_json<S>(parse_json(opt.project_motion));
    const auto points = parse_grid<S>(opt.project_grid);
    const auto rows = projection_figure(points, m);
    using T = scalar_traits<S>;
    if (opt.project_output == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"y", scalar_to_json(r.y)},
                           {"z", scalar_to_json(r.z)},
                           {"y_image", scalar_to_json(r.y_image)},
                           {"z_image", scalar_to_json(r.z_image)},
                           {"proj_y", scalar_to_json(r.proj_y)},
                           {"proj_z", scalar_to_json(r.proj_z)},
                           {"proj_y_image", scalar_to_json(r.proj_y_image)},
                           {"proj_z_image", scalar_to_json(r.proj_z_image)}});
        }
        out << arr.dump() << "\n";
    } else {
        out << "y,z,y_image,z_image,proj_y,proj_z,proj_y_image,proj_z_image\n";
        for (const auto& r : rows) {
            out << T::to_string(r.y) << ',' << T::to_string(r.z) << ',' << T::to_string(r.y_image)
                << ',' << T::to_string(r.z_image) << ',' << T::to_string(r.proj_y) << ','
                << T::to_string(r.proj_z) << ',' << T::to_string(r.proj_y_image) << ','
                << T::to_string(r.proj_z_image) << "\n";
        }
    }
    return kExitSuccess;
}

template <typename Fn>
int dispatch_scalar(const std::string& scalar, Fn&& fn) {
    if (scalar == "rational") return fn(Rational{});
    return fn(double{});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Motions of the Galilean plane over the Pimenov algebra"};
    app.require_subcommand(1);
    app.add_option("--scalar", opt.scalar, "Scalar backend: float or rational")
        ->check(CLI::IsMember({"float", "rational"}));

    auto* compose_cmd =
        app.add_subcommand("compose", "Compose motions left to right and print the result");
    compose_cmd->add_option("motions", opt.compose_motions, "Motions as JSON objects");
    compose_cmd->add_option("--file", opt.compose_file, "File of JSON-lines motions");

    auto* act_cmd = app.add_subcommand("act", "Apply a motion to a point");
    act_cmd->add_option("--motion", opt.act_motion, "Motion as JSON")->required();
    act_cmd->add_option("--point", opt.act_point, "Point as JSON")->required();
    act_cmd->add_option("--rep", opt.act_rep, "Act through the given representation");

    auto* convert_cmd = app.add_subcommand("convert", "Convert elements between representations");
    convert_cmd->add_option("--to", opt.convert_to, "Target representation")->required();
    convert_cmd->add_option("elements", opt.convert_elements, "Elements as JSON objects");
    convert_cmd->add_option("--file", opt.convert_file, "File of JSON-lines elements");

    auto* verify_cmd = app.add_subcommand("verify", "Run the property verification suites");
    verify_cmd->add_option("--seed", opt.verify_seed, "Generator seed");
    verify_cmd->add_option("--trials", opt.verify_trials, "Trials per property")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--output", opt.verify_output, "Report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* project_cmd =
        app.add_subcommand("project", "Emit stereographic projection figure data for a point grid");
    project_cmd->add_option("--grid", opt.project_grid, "Grid spec y0:y1:ny,z0:z1:nz")->required();
    project_cmd->add_option("--motion", opt.project_motion, "Motion as JSON")->required();
    project_cmd->add_option("--output", opt.project_output, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gal2");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (compose_cmd->parsed()) {
            return dispatch_scalar(opt.scalar, [&](auto s) {
                return run_compose<decltype(s)>(opt, out);
            });
        }
        if (act_cmd->parsed()) {
            return dispatch_scalar(opt.scalar, [&](auto s) {
                return run_act<decltype(s)>(opt, out);
            });
        }
        if (convert_cmd->parsed()) {
            return dispatch_scalar(opt.scalar, [&](auto s) {
                return run_convert<decltype(s)>(opt, out);
            });
        }
        if (verify_cmd->parsed()) {
            return run_verify(opt, out);
        }
        if (project_cmd->parsed()) {
            return dispatch_scalar(opt.scalar, [&](auto s) {
                return run_project<decltype(s)>(opt, out);
            });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace gal2::cli
