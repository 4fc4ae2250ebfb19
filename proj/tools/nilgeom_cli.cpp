// nilgeom: forge, verify and classify metric germs with parallel structures.
#include "nilgeom/pipeline.hpp"
#include "nilgeom/schema.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

const std::map<std::string, std::string>& embedded_schemas();

using namespace nilgeom;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& src)
{
    if (src == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(src);
    if (!in)
        throw InputError("cannot read '" + src + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// inline JSON text or a path
json load_json(const std::string& arg)
{
    std::string text = (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) ? arg : read_source(arg);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

void check_schema(const std::string& command, const json& doc)
{
    json schema = json::parse(embedded_schemas().at(command));
    validate_schema(doc, schema);
}

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

struct Common {
    std::string spec;
    std::uint64_t seed = 0;
    std::string out;
    int points = 5;
    int holonomy_order = 1;
};

int emit(const std::string& command, const json& spec, const Common& c, json result, bool pass)
{
    result["command"] = command;
    result["spec_sha256"] = sha256_hex(spec.dump());
    result["seed"] = c.seed;
    result["schema_version"] = "v1";
    result["status"] = pass ? "pass" : "fail";
    std::string text = result.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f)
            throw InputError("cannot write '" + c.out + "'");
        f << text;
    }
    return pass ? kPass : kFail;
}

int run_forge(const Common& c, const std::string& kind)
{
    json spec = load_json(c.spec);
    check_schema("forge", spec);
    MetricGerm g = forge_from_spec(kind, spec, c.seed);
    g.validate();
    json r = {{"germ", to_json(g)}, {"kind", kind}, {"degree_bound", g.degree_bound()}};
    return emit("forge", spec, c, r, true);
}

int run_verify(const Common& c)
{
    json spec = load_json(c.spec);
    check_schema("verify", spec);
    MetricGerm g = germ_from_json(spec);
    VerificationReport rep = verify(g, c.points, c.holonomy_order, c.seed);
    json r = to_json(rep);
    return emit("verify", spec, c, r, rep.all_passed());
}

int run_classify(const Common& c)
{
    json spec = load_json(c.spec);
    check_schema("classify", spec);
    return emit("classify", spec, c, classify_pair(spec), true);
}

int run_commutant(const Common& c, json spec)
{
    check_schema("commutant", spec);
    std::string label = spec.at("case");
    ModuleShape shape = shape_from_json(spec.at("shape"));
    std::optional<CharacteristicSignatures> sigs;
    if (spec.contains("sigs")) {
        CharacteristicSignatures s;
        s.shape = shape;
        for (const auto& p : spec.at("sigs"))
            s.sigs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
        sigs = s;
    }
    CommutantBasis cb = commutant_basis(label, shape, sigs);
    json r = to_json(cb);
    r["structural_dim"] = commutant_dim(label, shape);
    bool pass = cb.dim == r["structural_dim"].get<int>();
    if (spec.value("bicommutant", false))
        r["bicommutant"] = to_json(bicommutant(label, shape, sigs));
    return emit("commutant", spec, c, r, pass);
}

int run_cartan(const Common& c, json spec)
{
    check_schema("cartan-test", spec);
    std::optional<ModuleShape> shape;
    if (spec.contains("shape"))
        shape = shape_from_json(spec.at("shape"));
    CartanResult res = cartan_character_test(spec.at("delta").get<int>(),
                                             parse_epsilon(spec.at("epsilon").get<std::string>()), shape);
    bool pass = res.ordinary() && res.main.relations_hold;
    return emit("cartan-test", spec, c, to_json(res), pass);
}

int run_roundtrip(const Common& c)
{
    json spec = load_json(c.spec);
    check_schema("roundtrip", spec);
    int points = spec.value("points", c.points);
    int order = spec.value("holonomy_order", c.holonomy_order);
    RoundtripResult rt = forge_and_verify(spec.at("kind"), spec.at("payload"), c.seed, points, order);
    json r = {{"germ", to_json(rt.germ)},
              {"report", to_json(rt.report)},
              {"draws", rt.draws},
              {"genericity", rt.generic ? "generic" : "non-generic draw"},
              {"json_roundtrip", rt.json_roundtrip},
              {"degree_bound", rt.germ.degree_bound()}};
    return emit("roundtrip", spec, c, r, rt.report.all_passed() && rt.json_roundtrip);
}

void add_common(CLI::App* sub, Common& c, bool spec_required, bool geometry)
{
    auto* o = sub->add_option("--spec", c.spec, "JSON spec file, or - for stdin");
    if (spec_required)
        o->required();
    sub->add_option("--seed", c.seed, "seed for random draws and sample points");
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    if (geometry) {
        sub->add_option("--points", c.points, "number of sample points")->check(CLI::Range(1, 50));
        sub->add_option("--holonomy-order", c.holonomy_order, "covariant derivative order for the holonomy span")
            ->check(CLI::Range(0, 2));
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact construction and verification of metric germs with parallel nilpotent structures"};
    app.require_subcommand(1);
    Common c;

    std::string kind;
    auto* forge = app.add_subcommand("forge", "forge a metric germ and print it as JSON");
    forge->add_option("--kind", kind, "construction")
        ->required()
        ->check(CLI::IsMember({"nilpotent", "kahler", "parakahler", "complex", "tensor", "two-nilpotents", "lorentz",
                               "tangent-lift"}));
    add_common(forge, c, true, false);

    auto* verify_cmd = app.add_subcommand("verify", "check parallelism, curvature identities and holonomy");
    std::string germ_path;
    verify_cmd->add_option("--germ", germ_path, "germ JSON (same as --spec)");
    add_common(verify_cmd, c, false, true);

    auto* classify = app.add_subcommand("classify", "characteristic signatures of a pair (N, g)");
    add_common(classify, c, true, false);

    auto* commutant = app.add_subcommand("commutant", "commutant basis for a case and shape");
    std::string case_label, shape_arg, sigs_arg;
    bool bicomm = false;
    commutant->add_option("--case", case_label, "case label: 1, 2, 2p, 3, 3p, 1C, 2C or 3C");
    commutant->add_option("--shape", shape_arg, "shape JSON {\"n\", \"d\", \"delta\"}");
    commutant->add_option("--sigs", sigs_arg, "characteristic signatures [[r, s], ...]");
    commutant->add_flag("--bicommutant", bicomm, "also compute the bicommutant");
    add_common(commutant, c, false, false);

    auto* cartan = app.add_subcommand("cartan-test", "Cartan characters of the integrability system");
    int delta = 1;
    std::string eps = "-1";
    cartan->add_option("--delta", delta, "block size")->check(CLI::Range(1, 3));
    cartan->add_option("--epsilon", eps, "-1, +1 or C");
    cartan->add_option("--shape", shape_arg, "shape JSON for the layered test");
    add_common(cartan, c, false, false);

    auto* roundtrip = app.add_subcommand("roundtrip", "forge then verify in one run");
    add_common(roundtrip, c, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (forge->parsed())
            return run_forge(c, kind);
        if (verify_cmd->parsed()) {
            if (!germ_path.empty())
                c.spec = germ_path;
            if (c.spec.empty())
                throw InputError("verify needs --germ or --spec");
            return run_verify(c);
        }
        if (classify->parsed())
            return run_classify(c);
        if (commutant->parsed()) {
            json spec;
            if (!c.spec.empty())
                spec = load_json(c.spec);
            else {
                spec["case"] = case_label;
                if (!shape_arg.empty())
                    spec["shape"] = load_json(shape_arg);
                if (!sigs_arg.empty())
                    spec["sigs"] = load_json(sigs_arg);
                if (bicomm)
                    spec["bicommutant"] = true;
            }
            return run_commutant(c, spec);
        }
        if (cartan->parsed()) {
            json spec;
            if (!c.spec.empty())
                spec = load_json(c.spec);
            else {
                spec = {{"delta", delta}, {"epsilon", eps}};
                if (!shape_arg.empty())
                    spec["shape"] = load_json(shape_arg);
            }
            return run_cartan(c, spec);
        }
        if (roundtrip->parsed())
            return run_roundtrip(c);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const nilgeom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
