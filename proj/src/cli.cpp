/* Copyright 2026 The mixshuffle Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "mixshuffle/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mixshuffle/rota_baxter.hpp"
#include "mixshuffle/verify.hpp"

namespace mixshuffle {

namespace {

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::uint64_t to_u64(const std::string& s)
{
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + s + "'");
    }
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

SemigroupPtr parse_semigroup_preset(const std::string& text)
{
    if (!text.empty() && text.front() == '{') {
        try {
            return OrderedSemigroup::from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("semigroup JSON: ") + e.what());
        }
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos) return OrderedSemigroup::from_json(read_json_file(text));
    const std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
    if (kind == "free") return OrderedSemigroup::free_abelian(split_commas(rest));
    if (kind == "set") return OrderedSemigroup::ordered_set(split_commas(rest));
    if (kind == "monoid") return OrderedSemigroup::unitarize(OrderedSemigroup::free_abelian(split_commas(rest)));
    if (kind == "mu") {
        const auto parts = split_commas(rest);
        if (parts.empty() || parts.size() > 2) throw ParseError("mu preset is mu:p or mu:p,k");
        return OrderedSemigroup::elementary_p_group(to_u64(parts[0]), parts.size() == 2 ? to_u64(parts[1]) : 1);
    }
    if (kind == "cyclic") return OrderedSemigroup::unitarized_cyclic(to_u64(rest));
    if (kind == "idem3") return three_element_idempotent(to_u64(rest));
    if (kind == "idem") return OrderedSemigroup::from_json(read_json_file(rest));
    throw ParseError("unknown semigroup preset '" + kind + "'");
}

namespace {

struct Config {
    std::string ring = "Q";
    std::uint64_t p = 2;
    unsigned precision = 6;
    std::string lambda = "1";
    std::string sg = "free:x";
    unsigned deg = 4;
    std::optional<unsigned> len;
    std::string format = "table";
    std::uint64_t seed = 1;
    unsigned trials = 200;
    unsigned nested = 0;
    bool ascii = false;
    bool parallel = false;

    FormatOptions fmt() const { return {ascii}; }
    bool json() const { return format == "json"; }

    RingSpec ring_spec() const
    {
        if (ring == "Fp") return RingSpec::prime_field(p);
        if (ring == "Zp") return RingSpec::truncated_padic(p, precision);
        return RingSpec::parse(ring);
    }
    mpq_class lambda_q() const { return RingElem::parse(RingSpec::rationals(), lambda).value(); }
};

void print_word_groups(std::ostream& out, const OrderedSemigroup& s, const WordSet& ws, const Config& cfg,
                       const std::string& title)
{
    if (cfg.json()) {
        nlohmann::json j = {{"set", title}, {"size", ws.size()}};
        if (s.degree_zero_letters()) {
            nlohmann::json groups = nlohmann::json::array();
            const unsigned L = cfg.len ? *cfg.len : cfg.deg;
            for (unsigned l = 1; l <= L; ++l) {
                nlohmann::json words = nlohmann::json::array();
                for (const auto& w : ws.words)
                    if (w.length() == l) words.push_back(word_to_json(s, w));
                groups.push_back({{"length", l}, {"words", std::move(words)}});
            }
            j["groups"] = std::move(groups);
        } else {
            j["groups"] = word_set_to_json(s, ws, cfg.deg);
        }
        out << j.dump(2) << "\n";
        return;
    }
    auto line = [&](const std::string& label, const std::vector<const Word*>& words) {
        out << label << " (" << words.size() << "):";
        for (const auto* w : words) out << "  " << format_word(s, *w, cfg.fmt());
        out << "\n";
    };
    std::vector<std::size_t> counts;
    if (s.degree_zero_letters()) {
        const unsigned L = cfg.len ? *cfg.len : cfg.deg;
        for (unsigned l = 1; l <= L; ++l) {
            std::vector<const Word*> ws_l;
            for (const auto& w : ws.words)
                if (w.length() == l) ws_l.push_back(&w);
            counts.push_back(ws_l.size());
            line("length " + std::to_string(l), ws_l);
        }
    } else {
        for (unsigned d = 0; d <= cfg.deg; ++d) {
            std::vector<const Word*> ws_d;
            for (const auto& w : ws.words)
                if (word_degree(s, w) == d) ws_d.push_back(&w);
            if (d == 0 && ws_d.empty()) continue;
            counts.push_back(ws_d.size());
            line("degree " + std::to_string(d), ws_d);
        }
    }
    out << title << " counts:";
    for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? "," : " ") << counts[i];
    out << "\n";
}

int emit_report(std::ostream& out, const VerificationReport& r, const Config& cfg)
{
    if (cfg.json()) out << r.to_json().dump(2) << "\n";
    else out << r.to_table();
    return r.pass() ? 0 : 1;
}

int cmd_verify(std::ostream& out, const std::string& theorem, const Config& cfg)
{
    VerifyOptions vo;
    vo.parallel = cfg.parallel;
    const mpq_class lambda = cfg.lambda_q();
    auto sg = [&] { return parse_semigroup_preset(cfg.sg); };
    if (theorem == "radford") return emit_report(out, verify_radford_hoffman(sg(), 0, cfg.deg, cfg.len, vo), cfg);
    if (theorem == "msq") return emit_report(out, verify_radford_hoffman(sg(), lambda, cfg.deg, cfg.len, vo), cfg);
    if (theorem == "psh") return emit_report(out, verify_fp_weight0(sg(), cfg.p, cfg.deg, cfg.len, vo), cfg);
    if (theorem == "pmsh") return emit_report(out, verify_fp_nonzero(sg(), cfg.p, lambda, cfg.deg, cfg.len, vo), cfg);
    if (theorem == "isomor")
        return emit_report(out, verify_zp(sg(), cfg.p, cfg.precision, lambda, cfg.deg, true, vo), cfg);
    if (theorem == "intfr") {
        VerificationReport r = verify_z_polynomial(sg(), lambda, cfg.deg, vo);
        if (cfg.nested > 1)
            for (auto& c : nested_alphabet_checks(lambda, cfg.nested, std::min(cfg.deg, 3u))) r.add_check(c.name, c.pass, c.detail);
        return emit_report(out, r, cfg);
    }
    if (theorem == "props") return emit_report(out, verify_properties(cfg.seed, cfg.trials), cfg);
    static const std::map<std::string, RBTheorem> rb{{"rbl", RBTheorem::Rbl},       {"rbafp1", RBTheorem::Rbafp1},
                                                     {"rbafp2", RBTheorem::Rbafp2}, {"rbafp3", RBTheorem::Rbafp3},
                                                     {"rbafp4", RBTheorem::Rbafp4}, {"rbazp", RBTheorem::Rbazp},
                                                     {"rbaz", RBTheorem::Rbaz}};
    auto it = rb.find(theorem);
    if (it == rb.end()) throw ParseError("unknown theorem id '" + theorem + "'");
    RBParams params;
    const SemigroupPtr s = sg();
    if (s->kind() == SemigroupKind::FreeAbelian) params.alphabet = s->generator_names();
    else if (s->kind() == SemigroupKind::Unitarized && s->left()->kind() == SemigroupKind::FreeAbelian)
        params.alphabet = s->left()->generator_names();
    params.p = cfg.p;
    params.precision = cfg.precision;
    params.lambda = lambda;
    params.degree_bound = cfg.deg;
    params.length_bound = cfg.len ? *cfg.len : cfg.deg;
    return emit_report(out, verify_rb_structure(it->second, params, vo), cfg);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Mixable shuffle and free commutative Rota-Baxter algebras: products, generator sets and "
                 "structure verification",
                 "mixshuffle"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--ring", cfg.ring, "Q, Z, F_p, Z/p^N, or Fp / Zp together with --p and --precision");
    app.add_option("--p", cfg.p, "prime");
    app.add_option("--precision", cfg.precision, "p-adic precision N");
    app.add_option("--lambda", cfg.lambda, "weight, an exact literal such as 1, -1 or 5/3");
    app.add_option("--sg", cfg.sg, "semigroup preset or JSON path");
    app.add_option("--deg", cfg.deg, "degree bound");
    app.add_option("--len", cfg.len, "tensor length bound");
    app.add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized runs");
    app.add_option("--trials", cfg.trials, "trials per configuration for props");
    app.add_option("--nested", cfg.nested, "intfr: also check nested alphabets X1 < ... < Xk");
    app.add_flag("--ascii", cfg.ascii, "ASCII output: (x) for the tensor sign");
    app.add_flag("--parallel", cfg.parallel, "run verification cells concurrently");

    std::string a, b, word, set_name, theorem, rb_op;
    auto* mul = app.add_subcommand("mul", "mixable shuffle product of two words");
    mul->add_option("a", a)->required();
    mul->add_option("b", b)->required();
    auto* lyndon = app.add_subcommand("lyndon", "Lyndon words by degree");
    auto* cfl = app.add_subcommand("cfl", "Chen-Fox-Lyndon factorization");
    cfl->add_option("word", word)->required();
    auto* gens = app.add_subcommand("gens", "generator sets lyn, el, tl, tel, tl1, tl2, tel1, tel2, eetl2");
    gens->add_option("set", set_name)->required();
    auto* verify = app.add_subcommand("verify", "structure verification");
    verify->add_option("theorem", theorem, "radford msq psh pmsh isomor intfr rbl rbafp1..4 rbazp rbaz props")
        ->required();
    auto* rb = app.add_subcommand("rb", "Rota-Baxter algebra: mul, P, check-identity");
    rb->add_option("op", rb_op)->required()->check(CLI::IsMember({"mul", "P", "check-identity"}));
    rb->add_option("a", a)->required();
    rb->add_option("b", b);
    auto* cls = app.add_subcommand("classify", "PG / JG / IG / EG / FG membership");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const FormatOptions fo = cfg.fmt();
        if (*mul) {
            const AlgebraPtr alg = ShuffleAlgebra::make(parse_semigroup_preset(cfg.sg), cfg.ring_spec(),
                                                        RingElem::parse(cfg.ring_spec(), cfg.lambda).value());
            const Word wa = parse_word(alg->semigroup(), a), wb = parse_word(alg->semigroup(), b);
            const TensorPoly r = shuffle_words(alg, wa, wb);
            if (cfg.json()) out << r.to_json().dump(2) << "\n";
            else out << r.to_string(fo) << "\n";
            return 0;
        }
        if (*lyndon) {
            const SemigroupPtr s = parse_semigroup_preset(cfg.sg);
            print_word_groups(out, *s, enumerate_lyndon(*s, Bounds{cfg.deg, cfg.len}), cfg, "Lyn");
            return 0;
        }
        if (*cfl) {
            const SemigroupPtr s = parse_semigroup_preset(cfg.sg);
            const auto factors = cfl_factorize(*s, parse_word(*s, word));
            if (cfg.json()) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& f : factors) j.push_back({{"lyndon", word_to_json(*s, f.lyndon)}, {"multiplicity", f.multiplicity}});
                out << j.dump(2) << "\n";
            } else {
                std::string line;
                for (const auto& f : factors)
                    for (std::size_t k = 0; k < f.multiplicity; ++k)
                        line += (line.empty() ? "" : " | ") + format_word(*s, f.lyndon, fo);
                out << line << "\n";
            }
            return 0;
        }
        if (*gens) {
            const SemigroupPtr s = parse_semigroup_preset(cfg.sg);
            const Bounds bounds{cfg.deg, (s->degree_zero_letters() || s->has_identity()) ? std::optional<unsigned>(cfg.len ? *cfg.len : cfg.deg) : cfg.len};
            const GeneratorSets g = generator_sets(s, cfg.p, bounds);
            const std::map<std::string, const WordSet*> sets{{"lyn", &g.lyn}, {"el", &g.el},   {"tl", &g.tl},
                                                             {"tel", &g.tel}, {"tl1", &g.tl1}, {"tl2", &g.tl2},
                                                             {"tel1", &g.tel1}, {"tel2", &g.tel2}};
            if (set_name == "eetl2") {
                const AlgebraPtr alg = ShuffleAlgebra::make(s, RingSpec::prime_field(cfg.p), 1);
                nlohmann::json j = nlohmann::json::array();
                for (const auto& w : g.tl2.words) {
                    const TensorPoly e = eettl_representative(alg, w, cfg.p);
                    if (cfg.json()) j.push_back(e.to_json());
                    else out << e.to_string(fo) << "\n";
                }
                if (cfg.json()) out << j.dump(2) << "\n";
                else out << "EETL2 count: " << g.tl2.size() << "\n";
                return 0;
            }
            auto it = sets.find(set_name);
            if (it == sets.end()) throw ParseError("unknown generator set '" + set_name + "'");
            std::string title = set_name;
            for (auto& c : title) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            print_word_groups(out, *s, *it->second, cfg, title);
            return 0;
        }
        if (*verify) return cmd_verify(out, theorem, cfg);
        if (*rb) {
            SemigroupPtr s = parse_semigroup_preset(cfg.sg);
            if (!s->has_identity()) s = OrderedSemigroup::unitarize(s);
            const RingSpec ring = cfg.ring_spec();
            const AlgebraPtr alg = ShuffleAlgebra::make(s, ring, RingElem::parse(ring, cfg.lambda).value());
            const RBElement x = RBElement::parse(alg, a);
            auto print = [&](const RBElement& e) {
                if (cfg.json()) out << e.to_json().dump(2) << "\n";
                else out << e.to_string(fo) << "\n";
            };
            if (rb_op == "P") {
                print(rb_operator_P(x));
                return 0;
            }
            if (b.empty()) throw ParseError("rb " + rb_op + " needs two operands");
            const RBElement y = RBElement::parse(alg, b);
            if (rb_op == "mul") {
                print(rb_product(x, y));
                return 0;
            }
            const RBIdentityCheck c = check_rb_identity(x, y);
            if (cfg.json()) {
                nlohmann::json j = {{"holds", c.holds}};
                if (!c.holds) j["detail"] = c.detail;
                out << j.dump(2) << "\n";
            } else {
                out << (c.holds ? "identity holds" : "identity FAILS: " + c.detail) << "\n";
            }
            return c.holds ? 0 : 1;
        }
        if (*cls) {
            const SemigroupPtr s = parse_semigroup_preset(cfg.sg);
            const Classification c = classify(s, cfg.p, cfg.deg);
            if (cfg.json()) {
                out << c.to_json().dump(2) << "\n";
            } else {
                out << "classes:";
                for (auto t : c.tags) out << " " << class_tag_name(t);
                if (c.tags.empty()) out << " none";
                out << "\n" << (c.exhaustive ? "exhaustive" : "checked up to degree " + std::to_string(c.degree_bound))
                    << ", " << c.elements_checked << " elements\n";
                for (const auto& n : c.notes) out << "note: " << n << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace mixshuffle
