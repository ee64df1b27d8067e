#include "qlat/ncalg/presets.hpp"

#include "qlat/error.hpp"
#include "qlat/ncalg/parser.hpp"

namespace qlat::nc {

namespace {

std::vector<Presentation::Generator> gens(std::initializer_list<const char *> coords,
                                          std::initializer_list<const char *> ops = {}) {
    std::vector<Presentation::Generator> out;
    for (const char *c : coords)
        out.push_back({c, false});
    for (const char *o : ops)
        out.push_back({o, true});
    return out;
}

std::vector<std::string> names(const std::vector<Presentation::Generator> &g) {
    std::vector<std::string> out;
    for (const auto &x : g)
        out.push_back(x.name);
    return out;
}

std::vector<RewriteRule> rules(const std::vector<Presentation::Generator> &g,
                               std::initializer_list<const char *> texts) {
    std::vector<RewriteRule> out;
    for (const char *t : texts)
        out.push_back(parse_rule(t, names(g)));
    return out;
}

// Relations of the algebra, solved for the out-of-order products:
//   (1/q) Tp Tm - q Tm Tp = T3
//   q^2 T3 Tp - q^-2 Tp T3 = (q + 1/q) Tp
//   q^-2 T3 Tm - q^2 Tm T3 = -(q + 1/q) Tm
constexpr const char *kTmTp = "Tm*Tp -> q^(-2)*Tp*Tm - q^(-1)*T3";
constexpr const char *kTpT3 = "Tp*T3 -> q^4*T3*Tp - (q^3 + q)*Tp";
constexpr const char *kTmT3 = "Tm*T3 -> q^(-4)*T3*Tm + (q^(-1) + q^(-3))*Tm";

// Action on the plane coordinates.
constexpr const char *kTpX = "Tp*x -> q*x*Tp + q^(-1/2)*y";
constexpr const char *kTpY = "Tp*y -> q^(-1)*y*Tp";
constexpr const char *kTmX = "Tm*x -> q*x*Tm";
constexpr const char *kTmY = "Tm*y -> q^(-1)*y*Tm + q*x";
constexpr const char *kT3X = "T3*x -> q^2*x*T3 - q*x";
constexpr const char *kT3Y = "T3*y -> q^(-2)*y*T3 + q^(-1)*y";

} // namespace

PresentationPtr manin_plane() {
    auto g = gens({"x", "y"});
    return std::make_shared<Presentation>("manin", g, rules(g, {"y*x -> q^(-1)*x*y"}));
}

PresentationPtr counterexample_plane() {
    auto g = gens({"x", "y"});
    return std::make_shared<Presentation>("counterexample", g,
                                          rules(g, {"y*x -> x*y + x^2 + y^2"}));
}

PresentationPtr q_heisenberg() {
    auto g = gens({"x", "p"});
    return std::make_shared<Presentation>("qheisenberg", g, rules(g, {"p*x -> q*x*p - i"}));
}

PresentationPtr wz_calculus() {
    auto g = gens({"x", "y"}, {"dx", "dy"});
    return std::make_shared<Presentation>(
        "wz-calculus", g,
        rules(g, {"y*x -> q^(-1)*x*y", "dx*x -> 1 + q^2*x*dx + (q^2 - 1)*y*dy",
                  "dx*y -> q*y*dx", "dy*x -> q*x*dy", "dy*y -> 1 + q^2*y*dy"}),
        std::vector<std::pair<std::uint8_t, std::uint8_t>>{{3, 2}});
}

PresentationPtr suq2_module() {
    auto g = gens({"x", "y"}, {"T3", "Tp", "Tm"});
    return std::make_shared<Presentation>(
        "suq2-module", g,
        rules(g, {"y*x -> q^(-1)*x*y", kTmTp, kTpT3, kTmT3, kTpX, kTpY, kTmX, kTmY, kT3X, kT3Y}));
}

PresentationPtr suq2_module_free_plane() {
    auto g = gens({"x", "y"}, {"T3", "Tp", "Tm"});
    return std::make_shared<Presentation>(
        "suq2-module-free", g,
        rules(g, {kTmTp, kTpT3, kTmT3, kTpX, kTpY, kTmX, kTmY, kT3X, kT3Y}),
        std::vector<std::pair<std::uint8_t, std::uint8_t>>{{1, 0}});
}

PresentationPtr suq2_algebra() {
    auto g = gens({}, {"T3", "Tp", "Tm"});
    return std::make_shared<Presentation>("suq2", g, rules(g, {kTmTp, kTpT3, kTmT3}));
}

PresentationPtr preset(const std::string &name) {
    if (name == "manin")
        return manin_plane();
    if (name == "counterexample")
        return counterexample_plane();
    if (name == "qheisenberg")
        return q_heisenberg();
    if (name == "wz-calculus")
        return wz_calculus();
    if (name == "suq2-module")
        return suq2_module();
    if (name == "suq2-module-free")
        return suq2_module_free_plane();
    if (name == "suq2")
        return suq2_algebra();
    throw InvalidArgument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"manin", "counterexample", "qheisenberg", "wz-calculus",
            "suq2-module", "suq2-module-free", "suq2"};
}

} // namespace qlat::nc
