#include "planar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "planar/errors.hpp"
#include "planar/invariants.hpp"
#include "planar/io.hpp"
#include "planar/lattice.hpp"
#include "planar/presentation.hpp"
#include "planar/realize.hpp"

namespace planar {

namespace {

using nlohmann::json;

constexpr int kDomainError = 1;
constexpr int kParseError = 2;

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw InputError("cannot open '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

json integer_json(const mpz_class& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

json homology_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion)
        torsion.push_back(integer_json(d));
    return {{"rank", g.free_rank}, {"torsion", torsion}};
}

json book_json(const OpenBook& ob) {
    json j;
    j["openbook"] = print_openbook(ob);
    j["planar"] = true;
    j["holes"] = ob.holes();
    j["word_length"] = ob.word().size();
    j["laminar"] = laminar_word(ob.word());
    j["h1"] = j["laminar"].get<bool>() ? homology_json(first_homology(ob)) : json(nullptr);
    if (ob.contact()) {
        j["surgery"] = print_surgery(ob.contact()->record);
        j["d3"] = to_fraction_string(d3_invariant(ob.contact()->record));
    } else {
        j["surgery"] = nullptr;
        j["d3"] = nullptr;
    }
    j["d2"] = ob.tracking() ? json(ob.tracking()->d2) : json(nullptr);
    return j;
}

json inertia_json(const Inertia& in) { return json::array({in.positive, in.negative, in.zero}); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"planarob: planar open books, contact surgery invariants and planarity obstructions"};
    app.require_subcommand(1);

    std::string file_a, file_b;
    std::vector<int> through, curve;
    std::vector<long> d2;
    int orient = 1;
    std::string d3_target;
    std::string base_file;

    auto* invariants_cmd = app.add_subcommand("invariants", "H1 and word data of an open book");
    invariants_cmd->add_option("openbook", file_a, "open book file (default stdin)");
    auto* d3_cmd = app.add_subcommand("d3", "d3 invariant of a contact surgery record");
    d3_cmd->add_option("surgery", file_a, "surgery file (default stdin)");
    auto* obstruct_cmd = app.add_subcommand("obstruct", "planarity obstruction from a filling's intersection form");
    obstruct_cmd->add_option("form", file_a, "form file (default stdin)");
    auto* stabilize_cmd = app.add_subcommand("stabilize", "positive stabilization");
    stabilize_cmd->add_option("openbook", file_a, "open book file (default stdin)");
    stabilize_cmd->add_option("--through", through, "holes crossed by the plumbing arc");
    auto* sum_cmd = app.add_subcommand("sum", "Murasugi sum of two open books");
    sum_cmd->add_option("a", file_a, "first open book")->required();
    sum_cmd->add_option("b", file_b, "second open book")->required();
    auto* lutz_cmd = app.add_subcommand("lutz", "Lutz twist along a page curve");
    lutz_cmd->add_option("openbook", file_a, "open book file (default stdin)");
    lutz_cmd->add_option("--curve", curve, "holes enclosed by the curve")->required();
    lutz_cmd->add_option("--orient", orient, "orientation, +1 or -1")->check(CLI::IsMember({1, -1}));
    auto* realize_cmd = app.add_subcommand("realize-ot", "planar open book for an overtwisted structure");
    realize_cmd->add_option("--d3", d3_target, "target d3 as a half-integer, e.g. -3/2")->required();
    realize_cmd->add_option("--d2", d2, "d2 difference over the base holes");
    realize_cmd->add_option("--base", base_file, "base open book (default: disk book of S3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << json{{"help", app.help()}}.dump(2) << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        out << json{{"error", "UsageError"}, {"message", e.what()}}.dump(2) << "\n";
        err << e.what() << "\n";
        return kParseError;
    }

    try {
        json result;
        if (invariants_cmd->parsed()) {
            const OpenBook ob = parse_openbook(read_source(file_a, in));
            result["h1"] = homology_json(first_homology(ob));
            result["planar"] = true;
            result["word_length"] = ob.word().size();
        } else if (d3_cmd->parsed()) {
            const ContactSurgeryRecord r = parse_surgery(read_source(file_a, in));
            result["d3"] = to_fraction_string(d3_invariant(r));
        } else if (obstruct_cmd->parsed()) {
            const IntersectionForm f = parse_form(read_source(file_a, in));
            const PlanarVerdict v = planar_support_verdict(f, limits_from_environment());
            result["status"] = to_string(v.status);
            result["reasons"] = v.reasons;
            result["inertia"] = inertia_json(inertia(f));
        } else if (stabilize_cmd->parsed()) {
            const OpenBook ob = parse_openbook(read_source(file_a, in));
            const Stabilization s = positive_stabilization(ob, through);
            result = book_json(s.book);
            result["new_hole"] = s.new_hole;
        } else if (sum_cmd->parsed()) {
            if (file_a == "-" && file_b == "-")
                throw InputError("at most one summand can be read from stdin");
            const OpenBook a = parse_openbook(read_source(file_a, in));
            const OpenBook b = parse_openbook(read_source(file_b, in));
            result = book_json(murasugi_sum(a, b));
        } else if (lutz_cmd->parsed()) {
            const OpenBook ob = parse_openbook(read_source(file_a, in));
            result = book_json(lutz_twist(ob, make_curve(ob.page(), curve), orient));
        } else if (realize_cmd->parsed()) {
            const auto target = parse_fraction(d3_target);
            if (!target)
                throw InputError("--d3 expects a rational such as 1/2 or -3/2, got '" + d3_target + "'");
            const OpenBook base =
                base_file.empty() ? standard_s3_open_book() : parse_openbook(read_source(base_file, in));
            std::vector<Int> delta(d2.begin(), d2.end());
            if (d2.empty())
                delta.assign(static_cast<std::size_t>(base.holes()), 0);

            const OpenBook twisted = realize_overtwisted(base, delta, {});
            const auto base_d3 = d3_of(twisted);
            // Without contact data on the base, the target is the d3 of the S3 summand.
            const D3Steps steps = base_d3 ? steps_for_d3(*target, *base_d3) : steps_for_s3_d3(*target);
            result = book_json(realize_overtwisted(base, delta, steps));
            result["blocks"] = {{"half", steps.half}, {"neg_three_half", steps.neg_three_half}};
            result["d3_target"] = to_fraction_string(*target);
            result["d3_target_scope"] = base_d3 ? "manifold" : "s3-summand";
        }
        out << result.dump(2) << "\n";
        return 0;
    } catch (const ParseError& e) {
        out << json{{"error", "ParseError"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}}.dump(2)
            << "\n";
        err << e.what() << "\n";
        return kParseError;
    } catch (const InputError& e) {
        out << json{{"error", "InputError"}, {"message", e.what()}}.dump(2) << "\n";
        err << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        out << json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
        err << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace planar
