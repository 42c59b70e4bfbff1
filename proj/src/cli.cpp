// Copyright 2026 The bellport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellport/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <CLI11.hpp>

#include "bellport/bell.hpp"
#include "bellport/channels.hpp"
#include "bellport/errors.hpp"
#include "bellport/protocol3.hpp"
#include "bellport/qudit.hpp"

#ifndef BELLPORT_VERSION
#define BELLPORT_VERSION "0.0.0"
#endif

namespace bellport::cli {

namespace {

constexpr double kUnitFidelity = 1e-10;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

int require_even(const std::optional<int>& value, int fallback, int lo, int hi, const char* what) {
    const int v = value.value_or(fallback);
    if (v < lo || v > hi || v % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " must be even and in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "], got " + std::to_string(v));
    }
    return v;
}

std::size_t trials_or(const ExperimentConfig& c, std::size_t fallback) {
    const std::size_t t = c.trials.value_or(fallback);
    if (t < 1) {
        throw std::invalid_argument("trials must be positive");
    }
    return t;
}

struct Table {
    std::ostream& out;
    bool violation = false;

    void row(std::initializer_list<std::string> cells) {
        bool first = true;
        for (const std::string& c : cells) {
            out << (first ? "" : ",") << c;
            first = false;
        }
        out << '\n';
    }
};

void run_teleport(const ExperimentConfig& c, Table& t) {
    const int sites = require_even(c.qubits, 4, 2, 16, "qubits");
    const std::size_t trials = trials_or(c, 100);
    const std::vector<SitePair> pairing = parse_pairing(c.pairing);
    const Rng root(c.seed);
    t.row({"trial", "channel_class", "measured_class", "joint_probability", "fidelity"});
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng = root.split(i);
        std::vector<BellLabel> labels;
        for (int p = 0; p < sites / 2; ++p) {
            labels.push_back(BellLabel::from_index(static_cast<int>(rng.below(4))));
        }
        const BellClass cls = class_of(labels);
        const PureState client = random_state(1, 2, rng);
        const TeleportResult r =
            teleport(client, bell_basis_state(labels), cls, pairing, OutcomeChooser(rng));
        t.violation |= std::abs(r.fidelity - 1.0) > kUnitFidelity;
        t.row({std::to_string(i), to_string(cls), to_string(r.record.aggregate_class), num(r.record.joint_probability),
               num(r.fidelity)});
    }
}

void run_fig2(const ExperimentConfig& c, Table& t) {
    Fig2Options opts;
    opts.trials = trials_or(c, 2000);
    opts.seed = c.seed;
    opts.ensemble = parse_fig2_ensemble(c.ensemble);
    opts.enumerate_branches = c.enumerate_branches;
    const std::vector<Fig2Row> rows = fig2_run(opts);
    if (c.enumerate_branches) {
        t.row({"trial", "assumed_class", "omega", "measured_class", "fidelity", "branch_min_fidelity"});
    } else {
        t.row({"trial", "assumed_class", "omega", "measured_class", "fidelity"});
    }
    for (const Fig2Row& r : rows) {
        if (c.enumerate_branches) {
            t.row({std::to_string(r.trial), to_string(r.assumed_class), num(r.omega), to_string(r.measured_class),
                   num(r.fidelity), num(r.branch_min_fidelity)});
        } else {
            t.row({std::to_string(r.trial), to_string(r.assumed_class), num(r.omega), to_string(r.measured_class),
                   num(r.fidelity)});
        }
    }
    t.violation |= count_bound_violations(rows) > 0;
    if (!c.plot.empty()) {
        emit_plotdata(rows, c.plot);
    }
}

void run_appendix_a(const ExperimentConfig& c, Table& t) {
    const double phi = c.phi.value_or(0.3);
    const PureState client = random_state(1, 2, c.seed);
    const std::vector<double> probs = branch_probabilities(client, appendix_a_channel(phi));
    const double s = std::sin(2.0 * phi);
    std::array<double, 4> class_prob{};
    t.row({"first", "second", "aggregate_class", "probability", "expected"});
    for (std::size_t code = 0; code < probs.size(); ++code) {
        const BellLabel a = BellLabel::from_index(static_cast<int>(code / 4));
        const BellLabel b = BellLabel::from_index(static_cast<int>(code % 4));
        const double hi = (1.0 + s) / 16.0;
        const double lo = (1.0 - s) / 16.0;
        const double expected = std::abs(probs[code] - hi) <= std::abs(probs[code] - lo) ? hi : lo;
        t.violation |= std::abs(probs[code] - expected) > 1e-12;
        const BellClass agg = as_class(a) * as_class(b);
        class_prob[static_cast<std::size_t>(agg.index())] += probs[code];
        t.row({to_string(a), to_string(b), to_string(agg), num(probs[code]), num(expected)});
    }
    for (double p : class_prob) {
        t.violation |= std::abs(p - 0.25) > 1e-12;
    }
}

void run_order_param(const ExperimentConfig& c, Table& t) {
    const int sites = require_even(c.qubits, 4, 2, 16, "qubits");
    const std::size_t trials = trials_or(c, 1000);
    const Rng root(c.seed);
    t.row({"trial", "state", "u1", "u2", "u3", "efficiency", "omega_pp", "omega_pm", "omega_mp", "omega_mm"});
    auto emit = [&](std::size_t i, const char* kind, const OrderParameter& op) {
        t.row({std::to_string(i), kind, num(op.expectations.u1), num(op.expectations.u2), num(op.expectations.u3),
               num(op.efficiency), num(op.omega[0]), num(op.omega[1]), num(op.omega[2]), num(op.omega[3])});
    };
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng = root.split(i);
        const OrderParameter product = order_parameter(random_product_state(sites, 2, rng));
        t.violation |= product.efficiency > 1.0 / 3.0 + 1e-12;
        emit(i, "product", product);
        std::vector<BellLabel> labels;
        for (int p = 0; p < sites / 2; ++p) {
            labels.push_back(BellLabel::from_index(static_cast<int>(rng.below(4))));
        }
        const OrderParameter bell = order_parameter(bell_basis_state(labels));
        t.violation |= std::abs(bell.efficiency - 1.0) > 1e-10;
        emit(i, "bell", bell);
    }
}

void run_cluster_check(const ExperimentConfig& c, Table& t) {
    const int sites = require_even(c.qubits, 6, 4, 16, "qubits");
    const PureState s = cluster_state(sites);
    t.row({"sites", "quantity", "operator", "value", "deviation"});
    for (int j = 1; j <= sites; ++j) {
        const SiteOperatorString k = cluster_stabilizer(sites, j);
        const StabilizerReport r = stabilizer_report("K" + std::to_string(j), k, s);
        t.violation |= r.deviation > 1e-10;
        t.row({std::to_string(sites), r.name, k.to_string(), num(r.eigenvalue), num(r.deviation)});
    }
    const ClusterGOperators g = cluster_g_operators(sites);
    for (const auto& [name, op] : {std::pair{"G1", g.g1}, std::pair{"G2", g.g2}}) {
        const StabilizerReport r = stabilizer_report(name, op, s);
        t.violation |= r.deviation > 1e-10;
        t.row({std::to_string(sites), r.name, op.to_string(), num(r.eigenvalue), num(r.deviation)});
    }
    const double w = decompose_classes(s).max_weight();
    t.violation |= w >= 1.0 - 1e-6;
    t.row({std::to_string(sites), "max_class_weight", "", num(w), num(1.0 - w)});
}

void run_aklt_check(const ExperimentConfig& c, Table& t) {
    const int sites = require_even(c.qubits, 6, 4, 16, "qubits");
    const PureState s = aklt_state(sites);
    const double so = string_order(s);
    const double u2 = upsilon_expectations(s).u2;
    const double expected_u2 = -((sites / 2) % 2 == 0 ? 1.0 : -1.0) * so;
    const ClassDecomposition dec = decompose_classes(s);
    t.row({"sites", "quantity", "value", "expected", "deviation"});
    t.row({std::to_string(sites), "string_order", num(so), num(-1.0), num(std::abs(so + 1.0))});
    t.row({std::to_string(sites), "upsilon2", num(u2), num(expected_u2), num(std::abs(u2 - expected_u2))});
    t.row({std::to_string(sites), "max_class_weight", num(dec.max_weight()), num(1.0),
           num(std::abs(1.0 - dec.max_weight()))});
    t.violation |= std::abs(so + 1.0) > 1e-10 || std::abs(u2 - expected_u2) > 1e-10 || !dec.pure_class();
}

void run_bound_scan(const ExperimentConfig& c, Table& t) {
    std::vector<double> thetas{0.2, 0.6, 1.0, 1.4};
    if (c.theta) {
        thetas = {*c.theta};
    }
    t.row({"theta", "minimum", "cos_theta", "re_a", "im_a", "abs_b", "abs_c", "evaluations"});
    for (double theta : thetas) {
        const BoundScanResult r = min_fidelity_scan(theta);
        t.violation |= std::abs(r.minimum - std::cos(theta)) > 1e-3;
        t.row({num(theta), num(r.minimum), num(std::cos(theta)), num(r.a.real()), num(r.a.imag()), num(std::abs(r.b)),
               num(r.c_abs), std::to_string(r.evaluations)});
    }
}

void run_three_qubit(const ExperimentConfig& c, Table& t) {
    const PureState client = random_state(1, 2, c.seed);
    t.row({"channel", "mode", "outcome", "probability", "fidelity", "purity"});
    for (const Bell3Label& ch : all_bell3_labels()) {
        const PureState channel = bell3_state(ch);
        const BellClass assumed{ch.j, ch.l};
        for (Measure3Mode mode : {Measure3Mode::full, Measure3Mode::reduced}) {
            const std::vector<double> probs = outcome_distribution3(client, channel, mode);
            for (std::size_t i = 0; i < probs.size(); ++i) {
                const int idx = static_cast<int>(i);
                const Bell3Label outcome = mode == Measure3Mode::full
                                               ? Bell3Label::from_index(idx)
                                               : Bell3Label{BellLabel::from_index(idx).j,
                                                            BellLabel::from_index(idx).k, kPlus};
                if (probs[i] <= kZeroProbability) {
                    continue;
                }
                const Teleport3Result r = teleport3(client, channel, assumed, mode, outcome);
                t.violation |= std::abs(r.fidelity - 1.0) > kUnitFidelity;
                const std::string label = mode == Measure3Mode::full
                                              ? to_string(outcome)
                                              : to_string(BellLabel{outcome.j, outcome.k});
                t.row({to_string(ch), to_string(mode), label, num(r.probability), num(r.fidelity),
                       num(r.recipient_purity)});
            }
        }
    }
}

void run_qudit_demo(const ExperimentConfig& c, Table& t) {
    const int d = c.dim.value_or(3);
    if (d < 2 || d > 7) {
        throw std::invalid_argument("dim must be in [2, 7], got " + std::to_string(d));
    }
    const int sites = require_even(c.qubits, 2, 2, d <= 3 ? 6 : 4, "qudits");
    const int pairs = sites / 2;
    Rng rng(c.seed);
    std::vector<QuditBellLabel> labels;
    for (int p = 0; p < pairs; ++p) {
        labels.push_back(QuditBellLabel::from_index(static_cast<int>(rng.below(static_cast<std::uint64_t>(d * d))), d));
    }
    const QuditBellLabel cls = qudit_class_of(labels);
    const PureState channel = qudit_bell_product(labels);
    const PureState client = random_state(1, d, rng);
    t.row({"dim", "channel_class", "outcomes", "aggregate", "joint_probability", "fidelity"});
    std::size_t total = 1;
    for (int p = 0; p < pairs; ++p) {
        total *= static_cast<std::size_t>(d * d);
    }
    std::vector<QuditBellLabel> forced(static_cast<std::size_t>(pairs));
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t r = code;
        for (auto it = forced.rbegin(); it != forced.rend(); ++it) {
            *it = QuditBellLabel::from_index(static_cast<int>(r % static_cast<std::size_t>(d * d)), d);
            r /= static_cast<std::size_t>(d * d);
        }
        const QuditTeleportResult res = qudit_teleport(client, channel, cls, forced);
        std::string tuple;
        for (const QuditBellLabel& l : forced) {
            tuple += (tuple.empty() ? "" : " ") + to_string(l);
        }
        t.violation |= std::abs(res.fidelity - 1.0) > kUnitFidelity;
        t.row({std::to_string(d), to_string(cls), tuple, to_string(res.aggregate), num(res.joint_probability),
               num(res.fidelity)});
    }
}

void run_heisenberg_check(const ExperimentConfig& c, Table& t) {
    std::vector<int> sizes{4, 6};
    if (c.qubits) {
        sizes = {require_even(c.qubits, 4, 4, kMaxHeisenbergSites, "qubits")};
    }
    const Rng root(c.seed);
    t.row({"sites", "energy", "gap", "efficiency", "bell_class", "branches", "min_fidelity"});
    for (int sites : sizes) {
        const HeisenbergGround g = heisenberg_ground_state(sites);
        const ClassDecomposition dec = decompose_classes(g.state);
        Rng rng = root.split(static_cast<std::uint64_t>(sites));
        const PureState client = random_state(1, 2, rng);
        const BranchSummary b = enumerate_branches(client, g.state, dec.dominant());
        t.violation |= std::abs(dec.efficiency() - 1.0) > 1e-8 || std::abs(b.min_fidelity - 1.0) > 1e-8;
        t.row({std::to_string(sites), num(g.energy), num(g.gap), num(dec.efficiency()), to_string(dec.dominant()),
               std::to_string(b.branches), num(b.min_fidelity)});
    }
}

using Handler = std::function<void(const ExperimentConfig&, Table&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"teleport", run_teleport},
        {"fig2", run_fig2},
        {"appendix-a", run_appendix_a},
        {"order-param", run_order_param},
        {"cluster-check", run_cluster_check},
        {"aklt-check", run_aklt_check},
        {"bound-scan", run_bound_scan},
        {"three-qubit", run_three_qubit},
        {"qudit-demo", run_qudit_demo},
        {"heisenberg-check", run_heisenberg_check},
    };
    return table;
}

const std::map<std::string, std::string>& schemas() {
    static const std::map<std::string, std::string> table{
        {"teleport",
         "Random Bell-product channel of -L qubits, random client, sampled outcomes.\n"
         "CSV: trial,channel_class,measured_class,joint_probability,fidelity"},
        {"fig2",
         "Random clients and 4-qubit channels, one sampled run per assumed class.\n"
         "CSV: trial,assumed_class,omega,measured_class,fidelity[,branch_min_fidelity]"},
        {"appendix-a",
         "Branch probabilities of the cos(phi)/sin(phi) class [-:-] channel.\n"
         "CSV: first,second,aggregate_class,probability,expected"},
        {"order-param",
         "Order parameter of random product and Bell-product states.\n"
         "CSV: trial,state,u1,u2,u3,efficiency,omega_pp,omega_pm,omega_mp,omega_mm"},
        {"cluster-check",
         "Stabilizer and G-operator eigenvalues of the 1D cluster state.\n"
         "CSV: sites,quantity,operator,value,deviation"},
        {"aklt-check", "String order and class purity of the AKLT state.\nCSV: sites,quantity,value,expected,deviation"},
        {"bound-scan",
         "Minimum recipient fidelity over coherent errors of angle theta.\n"
         "CSV: theta,minimum,cos_theta,re_a,im_a,abs_b,abs_c,evaluations"},
        {"three-qubit",
         "All three-qubit basis channels in full and reduced measurement modes.\n"
         "CSV: channel,mode,outcome,probability,fidelity,purity"},
        {"qudit-demo",
         "Generalized Bell-product channel of -L qudits of dimension -d, every branch.\n"
         "CSV: dim,channel_class,outcomes,aggregate,joint_probability,fidelity"},
        {"heisenberg-check",
         "Heisenberg ring ground states as teleportation channels.\n"
         "CSV: sites,energy,gap,efficiency,bell_class,branches,min_fidelity"},
    };
    return table;
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
    if (!v) {
        return "default";
    }
    if constexpr (std::is_floating_point_v<T>) {
        return num(*v);
    } else {
        return std::to_string(*v);
    }
}

}  // namespace

const char* version() { return BELLPORT_VERSION; }

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

std::string header(const ExperimentConfig& c) {
    std::ostringstream h;
    h << "# version=" << version() << '\n';
    h << "# subcommand=" << c.subcommand << '\n';
    h << "# seed=" << c.seed << '\n';
    h << "# trials=" << opt_str(c.trials) << '\n';
    h << "# qubits=" << opt_str(c.qubits) << '\n';
    h << "# dim=" << opt_str(c.dim) << '\n';
    h << "# phi=" << opt_str(c.phi) << '\n';
    h << "# theta=" << opt_str(c.theta) << '\n';
    h << "# pairing=" << (c.pairing.empty() ? "default" : c.pairing) << '\n';
    h << "# ensemble=" << c.ensemble << '\n';
    h << "# enumerate_branches=" << (c.enumerate_branches ? "true" : "false") << '\n';
    if (!c.deterministic) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        h << "# timestamp=" << buf << '\n';
    }
    return h.str();
}

std::vector<SitePair> parse_pairing(const std::string& text) {
    std::vector<SitePair> pairs;
    if (text.empty()) {
        return pairs;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::size_t dash = item.find('-');
        if (dash == std::string::npos) {
            throw std::invalid_argument("pairing entry '" + item + "' is not of the form a-b");
        }
        try {
            std::size_t used_a = 0;
            std::size_t used_b = 0;
            const std::string sa = item.substr(0, dash);
            const std::string sb = item.substr(dash + 1);
            const int a = std::stoi(sa, &used_a);
            const int b = std::stoi(sb, &used_b);
            if (used_a != sa.size() || used_b != sb.size()) {
                throw std::invalid_argument("trailing characters");
            }
            pairs.emplace_back(a, b);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("pairing entry '" + item + "' is not of the form a-b");
        }
    }
    return pairs;
}

int run(const ExperimentConfig& config, std::ostream& out) {
    const auto it = handlers().find(config.subcommand);
    if (it == handlers().end()) {
        std::cerr << "bellport: unknown subcommand '" << config.subcommand << "'\n";
        return kExitUsage;
    }
    std::ostringstream body;
    Table table{body};
    try {
        it->second(config, table);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bellport: " << e.what() << '\n';
        return kExitUsage;
    }
    const std::string text = header(config) + body.str();
    if (config.out.empty()) {
        out << text;
    } else {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            std::cerr << "bellport: cannot write " << config.out << '\n';
            return kExitUsage;
        }
        file << text;
    }
    if (table.violation) {
        std::cerr << "bellport: " << config.subcommand << " detected a claim violation\n";
        return kExitViolation;
    }
    return kExitOk;
}

std::string plotdata(std::span<const Fig2Row> rows) {
    if (rows.empty()) {
        throw EmptyData("no fig2 rows to plot");
    }
    std::ostringstream p;
    p << "# omega fidelity\n";
    for (const Fig2Row& r : rows) {
        p << num(r.omega) << ' ' << num(r.fidelity) << '\n';
    }
    p << "\n\n# omega bound\n";
    for (int i = 0; i < 100; ++i) {
        const double x = -1.0 + 4.0 * i / 99.0;
        p << num(x) << ' ' << num((x - 1.0) / 2.0) << '\n';
    }
    return p.str();
}

void emit_plotdata(std::span<const Fig2Row> rows, const std::string& path) {
    const std::string text = plotdata(rows);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot write plot data to " + path);
    }
    file << text;
}

int main(int argc, char** argv) {
    CLI::App app{"bellport: Bell-measurement teleportation experiments"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);
    ExperimentConfig config;
    std::size_t trials = 0;
    int qubits = 0;
    int dim = 0;
    double phi = 0.0;
    double theta = 0.0;
    std::vector<CLI::App*> subs;
    for (const std::string& name : subcommands()) {
        CLI::App* sub = app.add_subcommand(name, schemas().at(name));
        sub->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
        sub->add_option("--trials", trials, "Number of trials");
        sub->add_option("-L,--qubits", qubits, "Channel sites");
        sub->add_option("-d,--dim", dim, "Qudit dimension");
        sub->add_option("--phi", phi, "Appendix A mixing angle");
        sub->add_option("--theta", theta, "Coherent error angle");
        sub->add_option("--pairing", config.pairing, "Measured site pairs, e.g. 0-1,2-3");
        sub->add_option("--out", config.out, "CSV output path (stdout when omitted)");
        sub->add_flag("--deterministic", config.deterministic, "Omit the timestamp header line");
        sub->add_flag("--enumerate-branches", config.enumerate_branches, "Also report the minimum over branches");
        sub->add_option("--ensemble", config.ensemble, "fig2 channel ensemble")
            ->check(CLI::IsMember({"perturbed", "uniform"}))
            ->capture_default_str();
        sub->add_option("--plot", config.plot, "fig2 scatter and bound line output path");
        subs.push_back(sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    for (CLI::App* sub : subs) {
        if (!sub->parsed()) {
            continue;
        }
        config.subcommand = sub->get_name();
        if (sub->count("--trials") > 0) {
            config.trials = trials;
        }
        if (sub->count("--qubits") > 0) {
            config.qubits = qubits;
        }
        if (sub->count("--dim") > 0) {
            config.dim = dim;
        }
        if (sub->count("--phi") > 0) {
            config.phi = phi;
        }
        if (sub->count("--theta") > 0) {
            config.theta = theta;
        }
    }
    try {
        return run(config, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "bellport: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace bellport::cli
