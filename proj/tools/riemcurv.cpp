#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "riemcurv/verify.hpp"

using nlohmann::ordered_json;
using namespace riemcurv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct GlobalConfig {
    long order = 12;
    std::string lambda_text = "symbolic";
    std::string format = "text";

    bool lambda_symbolic() const { return lambda_text == "symbolic"; }
    ExactScalar lambda_scalar() const {
        if (lambda_symbolic()) return ExactScalar::lambda();
        return ExactScalar(rat_from_string(lambda_text));
    }
    /// Applies the configured curvature to a coefficient carrying the symbol.
    ExactScalar resolve(const ExactScalar& c) const {
        if (lambda_symbolic()) return c;
        return c.eval_lambda(rat_from_string(lambda_text));
    }
};

// ---- element rendering ------------------------------------------------------

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_header() { return "basis,k,p,coeff_rational,pi_exp,lambda_half_exp"; }

void csv_scalar_rows(std::ostream& out, const std::string& basis, const std::string& k,
                     const std::string& p, const ExactScalar& c) {
    for (const auto& [key, rat] : c.terms())
        out << basis << "," << k << "," << p << "," << rat_to_string(rat) << "," << key.first
            << "," << key.second << "\n";
}

void render_r_element(const GlobalConfig& cfg, const RElement& e) {
    if (cfg.format == "json") {
        ordered_json j;
        j["basis"] = "C";
        j["order"] = e.order();
        j["terms"] = ordered_json::array();
        for (const auto& t : e.render())
            j["terms"].push_back({{"k", t.k}, {"p", t.p}, {"coeff", t.coeff.to_string()}});
        emit(j);
    } else if (cfg.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& t : e.render())
            csv_scalar_rows(std::cout, "C", std::to_string(t.k), std::to_string(t.p), t.coeff);
    } else {
        for (const auto& t : e.render())
            std::cout << "C[" << t.k << "," << t.p << "] = " << t.coeff.to_string() << "\n";
    }
}

void render_sphere_element(const GlobalConfig& cfg, const SphereElement& e) {
    if (cfg.format == "json") {
        ordered_json j;
        j["basis"] = "tau";
        j["order"] = e.order();
        j["lambda"] = cfg.lambda_text;
        j["terms"] = ordered_json::array();
        for (const auto& [k, c] : e.coeffs())
            j["terms"].push_back({{"k", k}, {"coeff", cfg.resolve(c).to_string()}});
        emit(j);
    } else if (cfg.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& [k, c] : e.coeffs())
            csv_scalar_rows(std::cout, "tau", std::to_string(k), "", cfg.resolve(c));
    } else {
        for (const auto& [k, c] : e.coeffs())
            std::cout << "tau[" << k << "] = " << cfg.resolve(c).to_string() << "\n";
    }
}

void render_herm_element(const GlobalConfig& cfg, const HermitianElement& e) {
    std::string basis = e.basis() == HermBasis::TildeDelta ? "TD" : "D";
    if (cfg.format == "json") {
        ordered_json j;
        j["basis"] = basis;
        j["order"] = e.order();
        j["lambda"] = cfg.lambda_text;
        j["terms"] = ordered_json::array();
        for (const auto& t : e.render())
            j["terms"].push_back({{"k", t.k}, {"q", t.q}, {"coeff", t.coeff.to_string()}});
        emit(j);
    } else if (cfg.format == "csv") {
        std::cout << csv_header() << "\n";
        for (const auto& t : e.render())
            csv_scalar_rows(std::cout, basis, std::to_string(t.k), std::to_string(t.q), t.coeff);
    } else {
        for (const auto& t : e.render())
            std::cout << basis << "[" << t.k << "," << t.q << "] = " << t.coeff.to_string()
                      << "\n";
    }
}

// ---- element specs ----------------------------------------------------------

struct ElementSpec {
    Rat scale = Rat(1);
    std::string basis;
    std::vector<unsigned> indices;
};

ElementSpec parse_element_spec(const std::string& text) {
    ElementSpec spec;
    std::string body = text;
    if (auto star = text.find('*'); star != std::string::npos) {
        spec.scale = rat_from_string(text.substr(0, star));
        body = text.substr(star + 1);
    }
    auto colon = body.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("element spec '" + text + "': expected BASIS:k[,p[,l]]");
    spec.basis = body.substr(0, colon);
    if (spec.basis != "C" && spec.basis != "G" && spec.basis != "TD" && spec.basis != "D")
        throw std::invalid_argument("element spec '" + text + "': unknown basis " + spec.basis);
    std::string rest = body.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string field =
            rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        long v = std::stol(field, &used);
        if (used != field.size() || v < 0)
            throw std::invalid_argument("element spec '" + text + "': bad index " + field);
        spec.indices.push_back(static_cast<unsigned>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (spec.indices.empty() || spec.indices.size() > 3)
        throw std::invalid_argument("element spec '" + text + "': need 1 to 3 indices");
    return spec;
}

// ---- subcommands --------------------------------------------------------------

int cmd_expand(const GlobalConfig& cfg, const std::string& kind, unsigned k, unsigned p,
               const std::string& out_basis) {
    RElement e = RElement::zero(cfg.order);
    if (kind == "lk") {
        e = lk_bar(k, cfg.order);
    } else if (kind == "lk-normalized") {
        e = lk_normalized(k, cfg.order);
    } else if (kind == "basis") {
        e = RElement::basis_element(k, p, cfg.order);
    } else {
        throw std::invalid_argument("expand: unknown kind " + kind);
    }

    if (out_basis == "c") {
        render_r_element(cfg, e);
    } else if (out_basis == "tau") {
        render_sphere_element(cfg, globalize_on_sphere(e, cfg.order));
    } else if (out_basis == "tilde-delta") {
        render_herm_element(cfg, tilde_from_C(e, cfg.lambda_scalar(), cfg.order));
    } else {
        throw std::invalid_argument("expand: unknown output basis " + out_basis);
    }
    return kExitOk;
}

int cmd_act(const GlobalConfig& cfg, const std::string& action, long power,
            const std::string& on) {
    ElementSpec spec = parse_element_spec(on);
    if (action == "t" || action == "t-power") {
        if (spec.basis != "C")
            throw std::invalid_argument("act " + action + ": element must be in the C basis");
        if (spec.indices.size() != 2)
            throw std::invalid_argument("act: C elements take indices k,p");
        RElement e = RElement::basis_element(spec.indices[0], spec.indices[1], cfg.order)
                         .scaled(ExactScalar(spec.scale));
        RElement out = action == "t" ? t_act(e) : t_power_act(static_cast<unsigned>(power), e);
        render_r_element(cfg, out);
        return kExitOk;
    }
    if (action == "t-lambda") {
        if (spec.basis != "TD" && spec.basis != "D")
            throw std::invalid_argument("act t-lambda: element must be in the TD or D basis");
        if (cfg.lambda_scalar().is_zero())
            throw MathDomainError("act t-lambda: curvature must be nonzero");
        if (spec.indices.size() != 2)
            throw std::invalid_argument("act: hermitian elements take indices k,q");
        HermBasis basis = spec.basis == "TD" ? HermBasis::TildeDelta : HermBasis::Delta;
        HermitianElement e =
            HermitianElement::basis_element(spec.indices[0], spec.indices[1], basis, cfg.order)
                .scaled(ExactScalar(spec.scale));
        if (basis == HermBasis::Delta) e = delta_to_tilde(e);
        render_herm_element(cfg, t_lambda_act_closed(e, cfg.lambda_scalar(), cfg.order));
        return kExitOk;
    }
    throw std::invalid_argument("act: unknown action " + action);
}

int cmd_verify(const GlobalConfig& cfg, std::vector<std::string> suites) {
    if (suites.empty()) suites = suite_names();
    VerifyOptions opts;
    opts.order = cfg.order;
    opts.lambda = cfg.lambda_scalar();
    for (const auto& name : suites)
        if (suite_needs_invertible_lambda(name) && opts.lambda.is_zero())
            throw MathDomainError("verify: suite " + name + " needs nonzero curvature");

    bool all_pass = true;
    ordered_json jreport = ordered_json::array();
    if (cfg.format == "csv") std::cout << "suite,check,pass,detail\n";
    for (const auto& name : suites) {
        SuiteReport report = run_suite(name, opts);
        all_pass = all_pass && report.all_pass();
        for (const auto& c : report.checks) {
            if (cfg.format == "json") {
                jreport.push_back({{"suite", name},
                                   {"check", c.name},
                                   {"pass", c.pass},
                                   {"detail", c.detail}});
            } else if (cfg.format == "csv") {
                std::cout << name << ",\"" << c.name << "\"," << (c.pass ? "1" : "0") << ",\""
                          << c.detail << "\"\n";
            } else {
                std::cout << (c.pass ? "ok   " : "FAIL ") << name << ": " << c.name;
                if (!c.pass) std::cout << " -- " << c.detail;
                std::cout << "\n";
            }
        }
    }
    if (cfg.format == "json") emit(jreport);
    return all_pass ? kExitOk : 1;
}

int cmd_oracle_mu(const GlobalConfig& cfg, unsigned n, const std::string& radius_text) {
    Rat radius = rat_from_string(radius_text);
    if (radius <= 0) throw std::invalid_argument("oracle-mu: R must be positive");
    IntrinsicVolumeVector mu = sphere_intrinsic_volumes(n, radius);
    if (cfg.format == "json") {
        ordered_json j;
        j["n"] = n;
        j["R"] = rat_to_string(radius);
        j["mu"] = ordered_json::array();
        for (unsigned i = 0; i <= n; ++i)
            j["mu"].push_back({{"j", i}, {"coeff", mu.at(i).to_string()}});
        emit(j);
    } else if (cfg.format == "csv") {
        std::cout << csv_header() << "\n";
        for (unsigned i = 0; i <= n; ++i)
            csv_scalar_rows(std::cout, "mu", std::to_string(i), "", mu.at(i));
    } else {
        for (unsigned i = 0; i <= n; ++i)
            std::cout << "mu_" << i << " = " << mu.at(i).to_string() << "\n";
    }
    return kExitOk;
}

int cmd_tables(const GlobalConfig& cfg, const std::string& which, unsigned k) {
    if (which == "sphere") {
        // Expansions of t^k and phi^k in the tau basis up to the order.
        if (cfg.format == "json") {
            ordered_json j;
            j["order"] = cfg.order;
            j["lambda"] = cfg.lambda_text;
            j["t_in_tau"] = ordered_json::array();
            j["phi_in_tau"] = ordered_json::array();
            for (unsigned kk = 0; static_cast<long>(kk) <= cfg.order; ++kk) {
                SphereElement tk = t_power_in_tau(kk, cfg.order);
                for (const auto& [jj, c] : tk.coeffs())
                    j["t_in_tau"].push_back(
                        {{"k", kk}, {"j", jj}, {"coeff", cfg.resolve(c).to_string()}});
                SphereElement pk = phi_in_tau(kk, cfg.order);
                for (const auto& [jj, c] : pk.coeffs())
                    j["phi_in_tau"].push_back(
                        {{"k", kk}, {"j", jj}, {"coeff", cfg.resolve(c).to_string()}});
            }
            emit(j);
        } else {
            std::cout << "table,k,j,coeff\n";
            for (unsigned kk = 0; static_cast<long>(kk) <= cfg.order; ++kk) {
                SphereElement tk = t_power_in_tau(kk, cfg.order);
                for (const auto& [jj, c] : tk.coeffs())
                    std::cout << "t," << kk << "," << jj << ",\""
                              << cfg.resolve(c).to_string() << "\"\n";
                SphereElement pk = phi_in_tau(kk, cfg.order);
                for (const auto& [jj, c] : pk.coeffs())
                    std::cout << "phi," << kk << "," << jj << ",\""
                              << cfg.resolve(c).to_string() << "\"\n";
            }
        }
        return kExitOk;
    }
    if (which == "hermitian") {
        auto fwd = c_in_tilde_matrix(k, cfg.lambda_scalar());
        auto inv = tilde_in_c_matrix(k, cfg.lambda_scalar());
        if (cfg.format == "json") {
            ordered_json j;
            j["degree"] = k;
            j["lambda"] = cfg.lambda_text;
            auto dump_matrix = [](const std::vector<std::vector<ExactScalar>>& m) {
                ordered_json rows = ordered_json::array();
                for (const auto& row : m) {
                    ordered_json r = ordered_json::array();
                    for (const auto& entry : row) r.push_back(entry.to_string());
                    rows.push_back(std::move(r));
                }
                return rows;
            };
            j["c_in_tilde"] = dump_matrix(fwd);
            j["tilde_in_c"] = dump_matrix(inv);
            emit(j);
        } else {
            std::cout << "matrix,row,col,entry\n";
            for (size_t r = 0; r < fwd.size(); ++r)
                for (size_t c = 0; c < fwd[r].size(); ++c)
                    std::cout << "c_in_tilde," << r << "," << c << ",\""
                              << fwd[r][c].to_string() << "\"\n";
            for (size_t r = 0; r < inv.size(); ++r)
                for (size_t c = 0; c < inv[r].size(); ++c)
                    std::cout << "tilde_in_c," << r << "," << c << ",\""
                              << inv[r][c].to_string() << "\"\n";
        }
        return kExitOk;
    }
    throw std::invalid_argument("tables: unknown table " + which);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of Riemannian curvature measures"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalConfig cfg;
    app.add_option("--order", cfg.order, "truncation order (weighted degree, inclusive)")
        ->envname("RIEMCURV_ORDER")
        ->check(CLI::Range(1L, 256L));
    app.add_option("--lambda", cfg.lambda_text,
                   "curvature: 'symbolic' or a rational like 1 or 3/4");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* expand = app.add_subcommand("expand", "expand an element in a basis");
    std::string expand_kind;
    unsigned expand_k = 0, expand_p = 0;
    std::string expand_basis = "c";
    expand->add_option("kind", expand_kind, "lk | lk-normalized | basis")->required();
    expand->add_option("--k", expand_k, "degree index")->required();
    expand->add_option("--p", expand_p, "secondary index (basis elements)");
    expand->add_option("--basis", expand_basis, "output basis: c | tau | tilde-delta");

    auto* act = app.add_subcommand("act", "apply an action to a basis element");
    std::string act_action;
    long act_power = 0;
    std::string act_on;
    act->add_option("action", act_action, "t | t-power | t-lambda")->required();
    act->add_option("i", act_power, "exponent for t-power");
    act->add_option("--on", act_on, "element spec, e.g. C:0,0 or TD:2,1 or 3/4*C:1,0")
        ->required();

    auto* verify = app.add_subcommand("verify", "run identity suites");
    std::vector<std::string> verify_suites;
    verify->add_option("--suite", verify_suites, "suite name (repeatable; default: all)");

    auto* oracle = app.add_subcommand("oracle-mu", "intrinsic volumes of a round sphere");
    unsigned oracle_n = 0;
    std::string oracle_radius = "1";
    oracle->add_option("--n", oracle_n, "sphere dimension")->required();
    oracle->add_option("--R", oracle_radius, "radius (rational)");

    auto* tables = app.add_subcommand("tables", "emit conversion tables");
    std::string tables_which;
    unsigned tables_k = 0;
    tables->add_option("which", tables_which, "sphere | hermitian")->required();
    tables->add_option("--k", tables_k, "degree (hermitian tables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*expand) return cmd_expand(cfg, expand_kind, expand_k, expand_p, expand_basis);
        if (*act) return cmd_act(cfg, act_action, act_power, act_on);
        if (*verify) return cmd_verify(cfg, verify_suites);
        if (*oracle) return cmd_oracle_mu(cfg, oracle_n, oracle_radius);
        if (*tables) return cmd_tables(cfg, tables_which, tables_k);
    } catch (const MathDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
