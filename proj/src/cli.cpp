#include "qbps/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "qbps/cache.hpp"
#include "qbps/io.hpp"
#include "qbps/version.hpp"

namespace qbps {

namespace {

struct DtOptions {
    std::string quiver_file;
    std::string stability_file;
    int max_dim = 0;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
};

// Every dimension vector with 0 < |m| <= trunc, in lexicographic order; the
// rendered table lists zero entries explicitly.
std::vector<DimVector> table_keys(int rank, int trunc) {
    std::vector<DimVector> keys;
    DimVector current(static_cast<std::size_t>(rank));
    auto advance = [&]() {
        for (std::size_t i = current.rank(); i-- > 0;) {
            if (current[i] < trunc) {
                ++current[i];
                for (std::size_t j = i + 1; j < current.rank(); ++j) current[j] = 0;
                return true;
            }
        }
        return false;
    };
    while (advance()) {
        if (current.total() <= trunc) keys.push_back(current);
    }
    return keys;
}

std::string render_bps(const BpsTable& table, int rank, const std::string& format) {
    const std::vector<DimVector> keys = table_keys(rank, table.trunc);
    if (format == "tsv") {
        std::ostringstream out;
        out << "dim\tomega\n";
        for (const DimVector& m : keys) {
            std::string dim;
            for (std::size_t i = 0; i < m.rank(); ++i) {
                if (i) dim += ",";
                dim += std::to_string(m[i]);
            }
            out << dim << "\t" << table.entry(m).to_string("v") << "\n";
        }
        return out.str();
    }
    nlohmann::json j;
    j["trunc"] = table.trunc;
    nlohmann::json entries = nlohmann::json::array();
    for (const DimVector& m : keys) {
        entries.push_back({{"dim", m.entries()}, {"omega", table.entry(m).to_string("v")}});
    }
    j["entries"] = entries;
    if (table.xi) {
        j["stability"] = stability_to_json(*table.xi);
    } else {
        j["stability"] = "trivial";
    }
    return j.dump(2) + "\n";
}

int cmd_dt(const DtOptions& opt, std::ostream& out) {
    nlohmann::json quiver_json = load_json_file(opt.quiver_file);
    Quiver quiver = quiver_from_json(quiver_json);
    std::optional<StabilityXi> xi;
    std::string stability_canonical = "trivial";
    if (!opt.stability_file.empty()) {
        nlohmann::json stability_json = load_json_file(opt.stability_file);
        xi = stability_from_json(stability_json);
        stability_canonical = stability_to_json(*xi).dump();
    }
    if (!is_symmetric(quiver)) throw input_error("quiver is not symmetric");

    // Canonical inputs: re-serialized parsed JSON, invariant under formatting.
    const std::string key = content_hash({kVersion, "dt", std::to_string(opt.max_dim),
                                          opt.format, quiver_to_json(quiver).dump(),
                                          stability_canonical});
    CacheStore cache(CacheStore::resolve_directory(opt.cache_dir));
    if (!opt.no_cache) {
        if (auto hit = cache.lookup(key)) {
            out << *hit;
            return 0;
        }
    }
    BpsTable table = xi ? bps_xi(quiver, *xi, opt.max_dim) : bps_trivial(quiver, opt.max_dim);
    const std::string rendered = render_bps(table, quiver.num_vertices(), opt.format);
    if (!opt.no_cache) cache.store(key, rendered);
    out << rendered;
    return 0;
}

struct HnOptions {
    std::string quiver_file;
    std::string stability_file;
    std::string dim;
    std::string format = "json";
};

int cmd_hn(const HnOptions& opt, std::ostream& out) {
    Quiver quiver = quiver_from_json(load_json_file(opt.quiver_file));
    StabilityXi xi = stability_from_json(load_json_file(opt.stability_file));
    DimVector m = parse_dim_vector(opt.dim);
    if (m.is_zero()) throw input_error("dimension vector must be nonzero");
    if (static_cast<int>(m.rank()) != quiver.num_vertices()) {
        throw input_error("dimension vector length does not match vertex count");
    }

    SemistableCounter counter(quiver, xi);
    std::vector<HNType> strata = hn_strata(xi, m);
    RationalFunction total;
    nlohmann::json strata_json = nlohmann::json::array();
    for (const HNType& type : strata) {
        RationalFunction contribution = counter.stratum_contribution(type);
        total += contribution;
        nlohmann::json parts = nlohmann::json::array();
        for (const DimVector& part : type) parts.push_back(part.entries());
        strata_json.push_back(
            {{"parts", parts}, {"contribution", contribution.to_q_string()}});
    }
    RationalFunction stack = stack_count(quiver, m);
    const bool identity_ok = (total == stack);

    if (opt.format == "tsv") {
        std::ostringstream os;
        os << "strata\t" << strata.size() << "\n";
        os << "semistable\t" << counter.count(m).to_q_string() << "\n";
        os << "stack_count\t" << stack.to_q_string() << "\n";
        os << "identity\t" << (identity_ok ? "ok" : "FAIL") << "\n";
        out << os.str();
    } else {
        nlohmann::json j;
        j["dim"] = m.entries();
        j["strata"] = strata_json;
        j["semistable"] = counter.count(m).to_q_string();
        j["stack_count"] = stack.to_q_string();
        j["identity"] = identity_ok ? "ok" : "FAIL";
        out << j.dump(2) << "\n";
    }
    if (!identity_ok) {
        throw convention_violation("HN sum identity failed; twist convention broken");
    }
    return 0;
}

int cmd_gv(const std::string& phi_text, const std::string& format, std::ostream& out) {
    LaurentPoly phi = LaurentPoly::parse(phi_text, "y");
    std::vector<Integer> n = gv_extract(phi);
    if (format == "tsv") {
        for (std::size_t g = 0; g < n.size(); ++g) {
            out << g << "\t" << to_string(n[g]) << "\n";
        }
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t g = 0; g < n.size(); ++g) {
            j.push_back({{"g", g}, {"n", to_string(n[g])}});
        }
        out << j.dump(2) << "\n";
    }
    return 0;
}

Eigen::MatrixXi matrix_argument(const std::string& arg) {
    if (!arg.empty() && arg[0] == '[') {
        try {
            return int_matrix_from_json(nlohmann::json::parse(arg));
        } catch (const nlohmann::json::parse_error& e) {
            throw input_error(std::string("cannot parse matrix: ") + e.what());
        }
    }
    return int_matrix_from_json(load_json_file(arg));
}

Eigen::VectorXi int_vector_argument(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            entries.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw input_error("cannot parse integer vector: '" + text + "'");
        }
    }
    if (entries.empty()) throw input_error("empty integer vector");
    return Eigen::Map<const Eigen::VectorXi>(entries.data(),
                                             static_cast<Eigen::Index>(entries.size()));
}

std::string cycle_to_string(const CycleData& gamma) {
    if (gamma.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (i) s += " + ";
        std::string cls = "(";
        for (Eigen::Index j = 0; j < gamma[i].cls.size(); ++j) {
            if (j) cls += ",";
            cls += std::to_string(gamma[i].cls[j]);
        }
        cls += ")";
        s += std::to_string(gamma[i].mult) + "[" + cls + "]";
    }
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact wall-crossing, BPS and curve-lattice calculator"};
    app.set_version_flag("--version", std::string("qbps ") + kVersion);
    app.require_subcommand(1);

    // dt
    DtOptions dt;
    CLI::App* dt_cmd = app.add_subcommand("dt", "BPS table of a symmetric quiver");
    dt_cmd->add_option("--quiver", dt.quiver_file, "quiver JSON file")->required();
    dt_cmd->add_option("--stability", dt.stability_file, "stability JSON file");
    dt_cmd->add_option("--max-dim", dt.max_dim, "truncation bound on total dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    dt_cmd->add_option("--format", dt.format)->check(CLI::IsMember({"json", "tsv"}));
    dt_cmd->add_option("--cache", dt.cache_dir, "cache directory (default QBPS_CACHE)");
    dt_cmd->add_flag("--no-cache", dt.no_cache, "bypass the result cache");

    // hn
    HnOptions hn;
    CLI::App* hn_cmd = app.add_subcommand("hn", "HN strata and semistable counts");
    hn_cmd->add_option("--quiver", hn.quiver_file)->required();
    hn_cmd->add_option("--stability", hn.stability_file)->required();
    hn_cmd->add_option("--dim", hn.dim, "dimension vector, e.g. \"1,1\"")->required();
    hn_cmd->add_option("--format", hn.format)->check(CLI::IsMember({"json", "tsv"}));

    // gv
    std::string gv_phi, gv_format = "json";
    CLI::App* gv_cmd = app.add_subcommand("gv", "genus decomposition of a symmetric polynomial");
    gv_cmd->add_option("--phi", gv_phi, "Laurent polynomial in y, e.g. \"y^-1+2+y\"")->required();
    gv_cmd->add_option("--format", gv_format)->check(CLI::IsMember({"json", "tsv"}));

    // gamma
    CLI::App* gamma_cmd = app.add_subcommand("gamma", "curve-lattice computations");
    gamma_cmd->require_subcommand(1);

    std::string walls_gamma, walls_kahler, walls_cone;
    long walls_mbound = 0;
    CLI::App* walls_cmd = gamma_cmd->add_subcommand("walls", "destabilizing decompositions");
    walls_cmd->add_option("--gamma", walls_gamma, "class JSON file")->required();
    walls_cmd->add_option("--kahler", walls_kahler, "Kahler JSON file")->required();
    walls_cmd->add_option("--cone", walls_cone, "effective cone JSON file")->required();
    walls_cmd->add_option("--mbound", walls_mbound, "bound on |m_i|")->required();

    std::string delta_beta, delta_h, delta_omega, delta_cone;
    CLI::App* delta_cmd = gamma_cmd->add_subcommand("delta", "wall-free radius");
    delta_cmd->add_option("--beta", delta_beta, "curve class, e.g. \"1,1\"")->required();
    delta_cmd->add_option("--divisor", delta_h, "perturbing divisor pairing, e.g. \"1,0\"")->required();
    delta_cmd->add_option("--omega", delta_omega, "Kahler form pairing, e.g. \"1,2\"")->required();
    delta_cmd->add_option("--cone", delta_cone, "effective cone JSON file")->required();

    std::string flop_matrix, flop_beta, flop_divisor;
    long flop_m = 0;
    CLI::App* flop_cmd = gamma_cmd->add_subcommand("flop", "push a class through a flop");
    flop_cmd->add_option("--matrix", flop_matrix, "curve transform, JSON file or inline [[..]]")
        ->required();
    flop_cmd->add_option("--beta", flop_beta, "curve class, e.g. \"2\"")->required();
    flop_cmd->add_option("--m", flop_m, "holomorphic Euler characteristic")->required();
    flop_cmd->add_option("--divisor", flop_divisor,
                         "divisor transform for the pairing compatibility check");

    std::string blowup_matrix, blowup_cycle;
    CLI::App* blowup_cmd = gamma_cmd->add_subcommand("blowup", "pull a cycle back along a blow-up");
    blowup_cmd->add_option("--matrix", blowup_matrix, "class pullback matrix")->required();
    blowup_cmd->add_option("--cycle", blowup_cycle, "cycle JSON file")->required();

    // oracle
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "independent brute-force checks");
    oracle_cmd->require_subcommand(1);
    std::string or_quiver, or_stability, or_dim;
    int or_field = 2;
    CLI::App* ss_cmd = oracle_cmd->add_subcommand("ss-count", "count semistable points over F_q");
    ss_cmd->add_option("--quiver", or_quiver)->required();
    ss_cmd->add_option("--stability", or_stability)->required();
    ss_cmd->add_option("--dim", or_dim)->required();
    ss_cmd->add_option("--field", or_field)->required()->check(CLI::IsMember({2, 3, 4}));

    // ext-quiver
    std::string ext_file;
    CLI::App* ext_cmd = app.add_subcommand("ext-quiver", "build the quiver of an Ext matrix");
    ext_cmd->add_option("--ext", ext_file, "Ext-dimension matrix JSON file")->required();

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    std::string prog = "qbps";
    argv.push_back(prog.data());
    for (std::string& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*dt_cmd) return cmd_dt(dt, out);
        if (*hn_cmd) return cmd_hn(hn, out);
        if (*gv_cmd) return cmd_gv(gv_phi, gv_format, out);
        if (*walls_cmd) {
            GammaClass v = gamma_from_json(load_json_file(walls_gamma));
            KahlerParam k = kahler_from_json(load_json_file(walls_kahler));
            EffectiveCone cone = cone_from_json(load_json_file(walls_cone));
            auto walls = wall_membership(k, v, cone, walls_mbound);
            if (walls.empty()) {
                out << "no wall for " << v.to_string() << " within |m| <= " << walls_mbound
                    << "\n";
            } else {
                for (const WallDecomposition& w : walls) {
                    out << w.v1.to_string() << " + " << w.v2.to_string() << "\n";
                }
            }
            return 0;
        }
        if (*delta_cmd) {
            Eigen::VectorXi beta = int_vector_argument(delta_beta);
            VectorQ h = parse_rational_vector(delta_h);
            VectorQ omega = parse_rational_vector(delta_omega);
            EffectiveCone cone = cone_from_json(load_json_file(delta_cone));
            auto delta0 = generic_delta(beta, h, omega, cone);
            if (delta0) {
                out << "delta0 = " << to_string(*delta0) << "\n";
            } else {
                out << "delta0 = infinity\n";
            }
            return 0;
        }
        if (*flop_cmd) {
            Eigen::MatrixXi m = matrix_argument(flop_matrix);
            GammaClass v{int_vector_argument(flop_beta), flop_m};
            std::optional<Eigen::MatrixXi> divisor;
            if (!flop_divisor.empty()) divisor = matrix_argument(flop_divisor);
            out << flop_transform(m, v, divisor).to_string() << "\n";
            return 0;
        }
        if (*blowup_cmd) {
            Eigen::MatrixXi p = matrix_argument(blowup_matrix);
            CycleData gamma = cycle_from_json(load_json_file(blowup_cycle));
            out << cycle_to_string(blowup_pullback(p, gamma)) << "\n";
            return 0;
        }
        if (*ss_cmd) {
            Quiver quiver = quiver_from_json(load_json_file(or_quiver));
            StabilityXi xi = stability_from_json(load_json_file(or_stability));
            DimVector m = parse_dim_vector(or_dim);
            out << brute_force_ss_count(quiver, xi, m, or_field) << "\n";
            return 0;
        }
        if (*ext_cmd) {
            ExtMatrix eps = ext_matrix_from_json(load_json_file(ext_file));
            ExtQuiverResult result = ext_quiver(eps);
            if (!result.warning.empty()) err << "warning: " << result.warning << "\n";
            out << quiver_to_json(result.quiver).dump(2) << "\n";
            return 0;
        }
    } catch (const convention_violation& e) {
        err << "convention violation: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace qbps
