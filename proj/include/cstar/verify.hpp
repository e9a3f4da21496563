#pragma once

#include <cstar/parser.hpp>
#include <cstar/report.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sys/wait.h>

namespace cstar {

struct CriterionResult {
    std::string id;
    bool pass = true;
    std::string detail;
};

/** cli_path enables the subprocess checks; golden_dir the on-disk golden files. */
struct VerifyOptions {
    std::string cli_path;
    std::string golden_dir;
};

inline bool all_pass(const std::vector<CriterionResult> &rs) {
    for (const auto &r : rs)
        if (!r.pass)
            return false;
    return true;
}

namespace detail {

/** First failing locus wins; cells are counted for the success report. */
struct Check {
    bool pass = true;
    std::string detail;
    long cells = 0;

    void expect(bool ok, const std::string &locus) {
        ++cells;
        if (!ok && pass) {
            pass = false;
            detail = locus;
        }
    }

    CriterionResult done(const std::string &id) const {
        CriterionResult r{id, pass, detail};
        if (pass)
            r.detail = std::to_string(cells) + " cells";
        return r;
    }
};

struct RunResult {
    bool ran = false;
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string &s) {
    std::string q = "'";
    for (char c : s)
        q += (c == '\'') ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

inline RunResult run_cli(const std::string &cli, const std::vector<std::string> &args) {
    RunResult r;
    std::string cmd = shell_quote(cli);
    for (const auto &a : args)
        cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int status = pclose(p);
    if (status >= 0 && WIFEXITED(status)) {
        r.ran = true;
        r.exit_code = WEXITSTATUS(status);
    }
    return r;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string pow_str(const char *v, long e) {
    if (e == 1)
        return v;
    return std::string(v) + "^" + std::to_string(e);
}

inline DPDPair dg_pair(long n, long d) {
    DPDPair p;
    p.plus = QDivisor::point(Rational(0), Rational(-1, d));
    p.minus = QDivisor::point(Rational(1), Rational(-1, n - d));
    return p;
}

/** The frozen content of the golden file for the hyperbolic family grid. */
inline std::string dg_family_golden() {
    std::string out;
    for (long n = 2; n <= 8; ++n)
        for (long d = 1; d < n; ++d) {
            long k = n - d;
            out += "n=" + std::to_string(n) + " d=" + std::to_string(d);
            out += " F=" + pow_str("x", k) + "*y+z*" + pow_str("s", k) + "-s^" +
                   std::to_string(n);
            out += " weights=(1," + std::to_string(d) + "," + std::to_string(d) + ",1)";
            out += " degree=" + std::to_string(n);
            out += " cover=" + pow_str("x", k) + "*y-s^" + std::to_string(n) + "+" +
                   pow_str("s", k);
            out += "\n";
        }
    return out;
}

struct GridQ {
    const char *label;
    UniPoly Q;
};

inline std::vector<GridQ> grid_qs() {
    UniPoly t = UniPoly::variable();
    return {{"1", UniPoly(1)},
            {"t-1", UniPoly::linear(Rational(1))},
            {"(t-1)(t-2)", UniPoly::linear(Rational(1)) * UniPoly::linear(Rational(2))},
            {"t^2-2", t * t - UniPoly(2)}};
}

template <class Fn> inline void for_relation_grid(Fn &&fn) {
    for (long d = 1; d <= 4; ++d)
        for (long ep = 1; ep <= d; ++ep)
            for (long em = -ep; em <= 2; ++em)
                for (long k = 1; k <= 3; ++k)
                    for (const auto &gq : grid_qs()) {
                        NormalForm nf(d, ep, em, k, gq.Q);
                        std::string locus = "d=" + std::to_string(d) +
                                            " e+=" + std::to_string(ep) +
                                            " e-=" + std::to_string(em) +
                                            " k=" + std::to_string(k) + " Q=" + gq.label;
                        fn(nf, locus);
                    }
}

inline long degree0_count(long e, long d, long bound) {
    long count = 0;
    for (long j = 0; j * d <= (1 + e) * bound; ++j)
        for (long b = 0; e * b <= j * d; ++b) {
            long a = j * d - e * b;
            if (a + b <= bound)
                ++count;
        }
    return count;
}

inline Rational random_rational(std::mt19937 &rng, long num_lo, long num_hi, long den_hi) {
    long num = num_lo + (long)(rng() % (unsigned long)(num_hi - num_lo + 1));
    long den = 1 + (long)(rng() % (unsigned long)den_hi);
    return Rational(num, den);
}

inline std::vector<UniPoly> poly_pool() {
    UniPoly t = UniPoly::variable();
    return {t,
            UniPoly::linear(Rational(1)),
            UniPoly::linear(Rational(-1)),
            UniPoly::linear(Rational(2)),
            t * t - UniPoly(2),
            t * t + UniPoly(1)};
}

inline DPDPair random_valid_pair(std::mt19937 &rng) {
    std::vector<UniPoly> pool = poly_pool();
    long npolys = 1 + (long)(rng() % 3);
    std::vector<size_t> idx(pool.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    DPDPair p;
    for (long i = 0; i < npolys; ++i) {
        const UniPoly &P = pool[idx[(size_t)i]];
        Rational a = random_rational(rng, -4, 4, 5);
        Rational slack = random_rational(rng, 0, 6, 5);
        Rational b = -a - slack;
        if (!a.is_zero())
            p.plus = p.plus + QDivisor::of_poly(P, a);
        if (!b.is_zero())
            p.minus = p.minus + QDivisor::of_poly(P, b);
    }
    return p;
}

inline QDivisor random_divisor(std::mt19937 &rng) {
    std::vector<UniPoly> pool = poly_pool();
    long n = 1 + (long)(rng() % 4);
    std::vector<size_t> idx(pool.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    QDivisor d;
    for (long i = 0; i < n; ++i) {
        Rational c = random_rational(rng, -6, 6, 4);
        if (c.is_zero())
            c = Rational(1);
        d = d + QDivisor::of_poly(pool[idx[(size_t)i]], c);
    }
    return d;
}

} // namespace detail

// ------------------------------------------------------------------ criteria

/** Hyperbolic family grid against the frozen golden strings and files. */
inline CriterionResult criterion_a1(const VerifyOptions &opt) {
    auto t0 = std::chrono::steady_clock::now();
    detail::Check c;
    std::string generated;
    UniPoly qexp = UniPoly::linear(Rational(1));
    for (long n = 2; n <= 8; ++n)
        for (long d = 1; d < n; ++d) {
            std::string locus = "n=" + std::to_string(n) + " d=" + std::to_string(d);
            auto [nf, tr] = to_normal_form(detail::dg_pair(n, d));
            c.expect(nf == NormalForm(d, 1, 0, n - d, qexp), locus + ": normal form");
            Embedding e = build_embedding(nf);
            Covering cov = dehomogenize(e);
            std::string line = locus + " F=" + e.F.str() + " weights=" +
                               ambient_str(e.weights).substr(1) + " degree=" +
                               std::to_string(e.degree) + " cover=" + cov.relation.str();
            // ambient_str gives "P(…)", the golden keeps only "(…)"
            generated += line + "\n";
            c.expect(e.weights == WeightVector{1, d, d, 1}, locus + ": weights");
            c.expect(e.degree == n, locus + ": degree");
        }
    c.expect(generated == detail::dg_family_golden(), "golden string mismatch");
    if (!opt.golden_dir.empty()) {
        std::ifstream in(opt.golden_dir + "/dg_family.txt", std::ios::binary);
        std::string disk((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        c.expect(in.good() || in.eof(), "golden file unreadable");
        c.expect(disk == generated, "golden file mismatch");
    }
    if (!opt.cli_path.empty()) {
        std::vector<std::string> args = {"dg", "--n", "5", "--d", "2", "--json"};
        auto r1 = detail::run_cli(opt.cli_path, args);
        auto r2 = detail::run_cli(opt.cli_path, args);
        c.expect(r1.ran && r1.exit_code == 0, "cli dg exit code");
        c.expect(r1.out == r2.out && !r1.out.empty(), "cli dg determinism");
    }
    c.expect(detail::seconds_since(t0) < 1.0, "time budget exceeded");
    return c.done("A1");
}

/** Relation grid: homogeneity, dehomogenization, parametrization, character. */
inline CriterionResult criterion_a2() {
    auto t0 = std::chrono::steady_clock::now();
    detail::Check c;
    detail::for_relation_grid([&](const NormalForm &nf, const std::string &locus) {
        Embedding e = build_embedding(nf);
        long degq = nf.Q.degree();
        long want = nf.k * (nf.e_plus + nf.e_minus) + nf.d * degq;
        WeightedDegree wd = weighted_degree_check(e.F, e.weights);
        c.expect(wd.homogeneous && wd.degree == want && e.degree == want,
                 locus + ": homogeneity");
        MultiPoly expected =
            MultiPoly::monomial(Rational(1), nf.k, 1, 0, 0) -
            MultiPoly::monomial(Rational(1), 0, 0, 0, nf.k * (nf.e_plus + nf.e_minus)) *
                MultiPoly::from_unipoly(nf.Q.compose_power(nf.d), 3);
        c.expect(dehomogenize(e).relation == expected, locus + ": dehomogenization");
        c.expect(parametrization_check(nf), locus + ": parametrization");
        c.expect(character_check(nf), locus + ": character");
    });
    c.expect(detail::seconds_since(t0) < 10.0, "time budget exceeded");
    return c.done("A2");
}

/** Positive-weight variant: strict positivity, minimal alpha, z = 1 match. */
inline CriterionResult criterion_a3() {
    detail::Check c;
    detail::for_relation_grid([&](const NormalForm &nf, const std::string &locus) {
        Embedding base = build_embedding(nf);
        Embedding pos = positive_weight_embedding(nf);
        bool positive = true;
        for (long w : pos.weights)
            positive = positive && w > 0;
        c.expect(positive, locus + ": positivity");
        long wy = nf.k * nf.e_minus + nf.d * nf.Q.degree();
        if (pos.alpha == 0)
            c.expect(wy > 0, locus + ": alpha zero but weight not positive");
        else
            c.expect(wy + nf.d * pos.alpha > 0 && wy + nf.d * (pos.alpha - 1) <= 0,
                     locus + ": alpha not minimal");
        c.expect(pos.F.substitute_z_one() == base.F.substitute_z_one(),
                 locus + ": z=1 specialization");
    });
    return c.done("A3");
}

/** Normality certificates, toric replacement, and the smooth family flags. */
inline CriterionResult criterion_a4() {
    detail::Check c;
    detail::for_relation_grid([&](const NormalForm &nf, const std::string &locus) {
        NormalityFlags fl = normality_flags(nf);
        bool reduced = nf.Q.is_one() || nf.Q.is_squarefree();
        bool want = nf.k == 1 || (nf.e_plus + nf.e_minus == 0 && reduced);
        c.expect(fl.certified == want, locus + ": certificate");
        auto rep = toric_replacement(nf);
        if (nf.Q.is_one()) {
            MultiPoly form =
                MultiPoly::monomial(Rational(1), 1, 1, 0, 0) -
                MultiPoly::monomial(Rational(1), 0, 0, 0, nf.e_plus + nf.e_minus);
            c.expect(rep && rep->F == form, locus + ": replacement equation");
            c.expect(rep && rep->weights ==
                               WeightVector{nf.e_plus, nf.e_minus, nf.d, 1},
                     locus + ": replacement ambient");
            if (nf.k > 1 && nf.e_plus + nf.e_minus > 0)
                c.expect(!fl.certified, locus + ": k>1 toric must be uncertified");
        } else {
            c.expect(!rep, locus + ": replacement only for Q=1");
        }
    });
    for (long n = 2; n <= 8; ++n)
        for (long d = 1; d < n; ++d) {
            SmoothnessReport sm = smoothness_check(detail::dg_pair(n, d));
            c.expect(sm.literal && sm.pointwise,
                     "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": smoothness");
        }
    return c.done("A4");
}

/** Quotient-plane grid: arithmetic constraints plus both consistency oracles. */
inline CriterionResult criterion_a5() {
    auto t0 = std::chrono::steady_clock::now();
    detail::Check c;
    for (long m = 2; m <= 6; ++m)
        for (long e = 1; e < m; ++e) {
            if (to_long(big_gcd(BigInt(e), BigInt(m))) != 1)
                continue;
            for (long cc = 1; cc <= 5; ++cc) {
                std::string locus = "e=" + std::to_string(e) + " m=" + std::to_string(m) +
                                    " c=" + std::to_string(cc);
                GizatullinParams gp(e, m, cc, Rational(0), Rational(1));
                PlaneEmbedding pe = plane_embedding(gp);
                c.expect(pe.a + pe.b == cc * m && pe.d == cc * m, locus + ": a+b");
                c.expect(to_long(big_gcd(BigInt(pe.a), BigInt(pe.b))) == 1,
                         locus + ": gcd(a,b)");
                c.expect(pe.a >= 1 && pe.a < cc * m, locus + ": range of a");
                c.expect(mod_residue(pe.a - e, m) == 0, locus + ": a mod m");
                c.expect(mod_residue(pe.b + e, m) == 0, locus + ": b mod m");
                long gamma = find_gamma(e, m, cc);
                c.expect(gamma >= 0 && gamma <= cc, locus + ": gamma range");
                c.expect(generator_relations_check(gp), locus + ": generator relations");
                c.expect(action_consistency_check(pe, gp), locus + ": action consistency");
            }
        }
    c.expect(detail::seconds_since(t0) < 5.0, "time budget exceeded");
    return c.done("A5");
}

/** Randomized pairs: section generators stay effective and multiply closed. */
inline CriterionResult criterion_a6() {
    detail::Check c;
    std::mt19937 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        DPDPair p = detail::random_valid_pair(rng);
        std::string locus = "trial " + std::to_string(trial) + " pair " + pair_str(p);
        c.expect(ring_closure_check(p, 6), locus + ": closure");
        for (long i = 1; i <= 6; ++i) {
            RationalFunction gp = section_generator(p, i);
            RationalFunction gm = section_generator(p, -i);
            c.expect((QDivisor::div_of(gp) + Rational(i) * p.plus).is_effective(),
                     locus + ": generator " + std::to_string(i));
            c.expect((QDivisor::div_of(gm) + Rational(i) * p.minus).is_effective(),
                     locus + ": generator " + std::to_string(-i));
        }
    }
    return c.done("A6");
}

/** Invariant-monomial counts from the two independent enumerations. */
inline CriterionResult criterion_a7() {
    auto t0 = std::chrono::steady_clock::now();
    detail::Check c;
    for (long d = 2; d <= 12; ++d)
        for (long e = 1; e < d; ++e) {
            if (to_long(big_gcd(BigInt(e), BigInt(d))) != 1)
                continue;
            long quotient = (long)invariant_monomials({1, e}, d, 12).size();
            long localized = detail::degree0_count(e, d, 12);
            c.expect(quotient == localized, "d=" + std::to_string(d) +
                                                " e=" + std::to_string(e) + ": counts " +
                                                std::to_string(quotient) + " vs " +
                                                std::to_string(localized));
        }
    c.expect(detail::seconds_since(t0) < 5.0, "time budget exceeded");
    return c.done("A7");
}

/** Open-subset eliminations and the smooth cover presentations. */
inline CriterionResult criterion_a8() {
    detail::Check c;
    UniPoly q = UniPoly::linear(Rational(1));
    for (long e = 1; e <= 3; ++e)
        for (long d = e; d <= 6; ++d) {
            if (to_long(big_gcd(BigInt(e), BigInt(d))) != 1)
                continue;
            for (long k = 2; k <= 3; ++k) {
                std::string locus = "e=" + std::to_string(e) + " d=" + std::to_string(d) +
                                    " k=" + std::to_string(k);
                NormalForm nf(d, e, -e, k, q);
                auto red = eliminate_z(build_embedding(nf));
                MultiPoly g = MultiPoly::monomial(Rational(1), k, 1, 0, 0) -
                              MultiPoly::monomial(Rational(1), 0, 0, 0, d);
                c.expect(red.has_value(), locus + ": eliminable");
                if (red) {
                    c.expect(red->G == g, locus + ": reduced equation");
                    c.expect(red->weights == (std::array<long, 3>{e, d - k * e, 1}),
                             locus + ": reduced weights");
                    c.expect(red->all_weights_positive == (d - k * e > 0),
                             locus + ": positivity flag");
                }
                Covering cov = universal_cover_form(e, d, k);
                MultiPoly rel = MultiPoly::monomial(Rational(1), k, 1, 0, 0) -
                                MultiPoly::monomial(Rational(1), 0, 0, 0, d) +
                                MultiPoly::constant(Rational(1));
                c.expect(cov.relation == rel, locus + ": cover equation");
                c.expect(cov.action == (std::array<long, 3>{mod_residue(1, d),
                                                            mod_residue(-k, d),
                                                            mod_residue(e, d)}) &&
                             cov.order == d,
                         locus + ": cover action");
            }
        }
    return c.done("A8");
}

// ------------------------------------------------------- negative controls

struct NegativeControl {
    std::string oracle;
    std::string locus;
    bool detected = false;
};

/** Single-coefficient corruptions; every oracle must flag its own. */
inline std::vector<NegativeControl> run_negative_controls() {
    std::vector<NegativeControl> out;
    UniPoly t = UniPoly::variable();
    UniPoly q1 = UniPoly::linear(Rational(1));
    NormalForm nf(2, 1, 0, 2, q1);
    Embedding base = build_embedding(nf);

    {
        MultiPoly bad = base.F + MultiPoly::monomial(Rational(1), 0, 0, 0, 1);
        out.push_back({"weighted_degree_check", "extra s term in the degree-4 relation",
                       !weighted_degree_check(bad, base.weights).homogeneous});
    }
    {
        UniPoly qbad = UniPoly::linear(Rational(2)); // constant term -1 -> -2
        MultiPoly expected =
            MultiPoly::monomial(Rational(1), nf.k, 1, 0, 0) -
            MultiPoly::monomial(Rational(1), 0, 0, 0, nf.k * (nf.e_plus + nf.e_minus)) *
                MultiPoly::from_unipoly(qbad.compose_power(nf.d), 3);
        out.push_back({"dehomogenization_match", "Q constant term shifted by one",
                       !(dehomogenize(base).relation == expected)});
    }
    {
        MultiPoly bad =
            dehomogenize(base).relation + MultiPoly::monomial(Rational(1), 1, 0, 0, 0);
        bool nonzero = !parametrization_residual(bad, nf).is_zero();
        out.push_back({"parametrization_check", "extra x term in the covering relation",
                       nonzero});
    }
    {
        Covering cov = dehomogenize(base);
        MultiPoly bad = cov.relation + MultiPoly::monomial(Rational(1), 0, 0, 0, 1);
        auto ch = relation_character(bad, cov.action, cov.order);
        out.push_back({"character_check", "extra s term breaks the character",
                       !ch.has_value()});
    }
    {
        GizatullinParams gp(1, 2, 1, Rational(0), Rational(1));
        Laurent up = Laurent::term(RationalFunction(t) * Rational(2), 1);
        Laurent um = Laurent::term(RationalFunction(q1), -1);
        Laurent vp = Laurent::term(RationalFunction(t), 2);
        Laurent vm = Laurent::term(RationalFunction(q1 * q1) / RationalFunction(t), -2);
        bool ok = detail::generator_relations(up, um, vp, vm, gp.e, gp.m, gp.c);
        out.push_back({"generator_relations_check", "u+ scaled by two", !ok});
    }
    {
        GizatullinParams gp(1, 2, 1, Rational(0), Rational(1));
        PlaneEmbedding pe = plane_embedding(gp);
        pe.action[0] += 1;
        out.push_back({"action_consistency_check", "first action exponent shifted",
                       !action_consistency_check(pe, gp)});
    }
    {
        DPDPair p = detail::dg_pair(3, 1);
        RationalFunction g1 = section_generator(p, 1) + RationalFunction(1);
        out.push_back({"graded_piece_contains", "generator constant term shifted",
                       !graded_piece_contains(p, g1, 1)});
    }
    {
        long a = (long)invariant_monomials({1, 1}, 5, 12).size();
        long b = detail::degree0_count(1, 4, 12); // group order corrupted
        out.push_back({"invariant_monomial_counts", "group order 5 vs 4",
                       a != b});
    }
    {
        DPDPair p = detail::dg_pair(4, 2);
        p.minus = QDivisor::point(Rational(1), Rational(-3, 2)); // was -1/2
        SmoothnessReport sm = smoothness_check(p);
        out.push_back({"smoothness_check", "boundary coefficient -1/2 -> -3/2",
                       !sm.literal && !sm.pointwise});
    }
    {
        QDivisor d = QDivisor::point(Rational(0), Rational(-1, 2));
        std::string printed = d.str();
        std::string corrupted = printed.substr(0, printed.size() - 1); // drop ')'
        bool detected = false;
        try {
            detected = !(parse_divisor(corrupted) == d);
        } catch (const ParseError &) {
            detected = true;
        }
        out.push_back({"parse_print_roundtrip", "closing parenthesis dropped", detected});
    }
    return out;
}

inline CriterionResult criterion_a9(const VerifyOptions &opt) {
    detail::Check c;
    for (const auto &nc : run_negative_controls())
        c.expect(nc.detected, nc.oracle + " missed: " + nc.locus);
    if (!opt.cli_path.empty()) {
        auto r = detail::run_cli(opt.cli_path, {"verify", "--grid", "negative", "--json"});
        c.expect(r.ran && r.exit_code == 3, "negative grid must exit with code 3");
        c.expect(r.out.find("\"locus\"") != std::string::npos,
                 "negative grid must report loci");
    }
    return c.done("A9");
}

/** Parser round-trips, byte-identical reruns, and the documented exit codes. */
inline CriterionResult criterion_a10(const VerifyOptions &opt) {
    detail::Check c;
    std::mt19937 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        QDivisor d = detail::random_divisor(rng);
        std::string printed = d.str();
        bool ok = false;
        std::string why;
        try {
            ok = parse_divisor(printed) == d;
        } catch (const ParseError &e) {
            why = e.what();
        }
        c.expect(ok, "trial " + std::to_string(trial) + ": " + printed + " " + why);
    }
    {
        DPDPair p;
        p.plus = QDivisor::point(Rational(0), Rational(-1, 2));
        p.minus = QDivisor::point(Rational(1), Rational(-1, 3));
        c.expect(parse_pair(pair_str(p)).plus == p.plus, "pair round-trip");
    }
    if (!opt.cli_path.empty()) {
        std::vector<std::vector<std::string>> cmds = {
            {"normalize", "--pair", "(-1/2*[0]; -1/3*[1])", "--json"},
            {"embed", "--pair", "(-1/2*[0]; -1/3*[1])"},
            {"gizatullin", "--e", "2", "--m", "3", "--c", "2", "--json"},
            {"classify", "--pair", "(-1/2*div(t); 1/2*div(t)-2*div(t-1))", "--json"},
        };
        for (const auto &args : cmds) {
            auto r1 = detail::run_cli(opt.cli_path, args);
            auto r2 = detail::run_cli(opt.cli_path, args);
            c.expect(r1.ran && r1.exit_code == 0, args[0] + ": exit code");
            c.expect(!r1.out.empty() && r1.out == r2.out, args[0] + ": determinism");
        }
        auto bad = detail::run_cli(opt.cli_path, {"normalize", "--pair", "((("});
        c.expect(bad.ran && bad.exit_code == 2, "parse error must exit 2");
        auto inv = detail::run_cli(opt.cli_path, {"normalize", "--pair", "(1/2*[0]; 0)"});
        c.expect(inv.ran && inv.exit_code == 1, "invalid pair must exit 1");
        auto neg = detail::run_cli(opt.cli_path, {"verify", "--grid", "negative"});
        c.expect(neg.ran && neg.exit_code == 3, "negative grid must exit 3");
    }
    return c.done("A10");
}

inline std::vector<CriterionResult> run_acceptance(const VerifyOptions &opt) {
    return {criterion_a1(opt), criterion_a2(), criterion_a3(), criterion_a4(),
            criterion_a5(),    criterion_a6(), criterion_a7(), criterion_a8(),
            criterion_a9(opt), criterion_a10(opt)};
}

// ------------------------------------------------------------------ reports

inline json verify_json(const std::vector<CriterionResult> &rs) {
    json arr = json::array();
    for (const auto &r : rs)
        arr.push_back(json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    return json{{"grid", "default"}, {"criteria", arr}, {"pass", all_pass(rs)}};
}

inline std::string verify_text(const std::vector<CriterionResult> &rs) {
    std::string s;
    for (const auto &r : rs)
        s += r.id + ": " + (r.pass ? "pass" : "FAIL") + " (" + r.detail + ")\n";
    s += all_pass(rs) ? "all criteria pass\n" : "criteria failed\n";
    return s;
}

inline json negative_json(const std::vector<NegativeControl> &cs) {
    json arr = json::array();
    bool all = true;
    for (const auto &c : cs) {
        arr.push_back(json{{"oracle", c.oracle}, {"locus", c.locus}, {"detected", c.detected}});
        all = all && c.detected;
    }
    return json{{"grid", "negative"}, {"controls", arr}, {"all_detected", all}};
}

inline std::string negative_text(const std::vector<NegativeControl> &cs) {
    std::string s;
    for (const auto &c : cs)
        s += c.oracle + ": " + (c.detected ? "detected" : "MISSED") + " (" + c.locus + ")\n";
    return s;
}

} // namespace cstar
