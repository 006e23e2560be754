// Scan/verify command-line front end over the public C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>
#include <algorithm>

#include <CLI11.hpp>
#include <json.hpp>

#include "k2lp/k2lp.h"
#include "golden_data.h"

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecision = 2;
constexpr int kExitContradiction = 3;
constexpr int kExitBadArgs = 4;

struct CtxDeleter {
    void operator()(k2lp_ctx* c) const { k2lp_ctx_free(c); }
};
using Ctx = std::unique_ptr<k2lp_ctx, CtxDeleter>;

struct OutputSink {
    std::string path;
    std::ofstream file;
    std::ostream& stream() {
        if (!path.empty() && !file.is_open()) file.open(path);
        return path.empty() ? std::cout : static_cast<std::ostream&>(file);
    }
};

const char* verdict_str(int v) {
    return v == K2LP_EQUALITY ? "equality" : v == K2LP_INEQUALITY ? "inequality" : "na";
}

ojson nullable(int v) { return v < 0 ? ojson(nullptr) : ojson(v); }

ojson row_json(const char* kind, const k2lp_row& r, const long long* poly) {
    ojson field;
    field["kind"] = kind;
    if (std::string(kind) == "quadratic")
        field["m"] = r.label;
    else if (std::string(kind) == "cubic")
        field["f"] = r.label;
    else
        field["ell"] = r.label;
    if (poly) field["poly"] = std::vector<long long>(poly, poly + 4);
    ojson j;
    j["field"] = field;
    j["p"] = r.p;
    j["vT"] = nullable(r.vT);
    j["vK2"] = nullable(r.vK2);
    j["vR2"] = nullable(r.vR2);
    j["C"] = nullable(r.C);
    j["verdict"] = verdict_str(r.verdict);
    j["n_used"] = r.n_used;
    j["stable"] = (bool)r.stable;
    ojson checks;
    checks["congruence_ok"] = (bool)r.congruence_ok;
    checks["c"] = r.c;
    j["source_checks"] = checks;
    return j;
}

std::string opt_num(int v) { return v < 0 ? "-" : std::to_string(v); }

void emit_tsv_header(std::ostream& os) {
    os << "kind\tid\tpoly\tp\tvT\tvK2\tvR2\tC\tverdict\tn_used\tstable\tcongruence_ok\tc\n";
}

void emit_tsv(std::ostream& os, const char* kind, const k2lp_row& r, const long long* poly) {
    os << kind << '\t' << r.label << '\t';
    if (poly)
        os << poly[0] << ',' << poly[1] << ',' << poly[2] << ',' << poly[3];
    else
        os << '-';
    os << '\t' << r.p << '\t' << opt_num(r.vT) << '\t' << opt_num(r.vK2) << '\t'
       << opt_num(r.vR2) << '\t' << opt_num(r.C) << '\t' << verdict_str(r.verdict) << '\t'
       << r.n_used << '\t' << (r.stable ? 1 : 0) << '\t' << (r.congruence_ok ? 1 : 0) << '\t'
       << r.c << '\n';
}

std::string poly_str(const long long* P) {
    // x^3 [+ b x^2] + c x + d in the appendix print style
    std::string s = "x^3";
    auto term = [&](long long v, const char* mono) {
        if (!v) return;
        s += (v > 0 ? "+" : "-");
        long long a = v > 0 ? v : -v;
        if (a != 1 || !*mono) s += std::to_string(a);
        if (*mono) {
            if (a != 1) s += "*";
            s += mono;
        }
    };
    term(P[1], "x^2");
    term(P[2], "x");
    term(P[3], "");
    return s;
}

void emit_paper(std::ostream& os, const char* kind, const k2lp_row& r, const long long* poly) {
    if (std::string(kind) == "quadratic" && r.p == 2) {
        os << "m=" << r.label << " c=" << r.c << " v(T)=" << opt_num(r.vT)
           << " v(R_2Z)=" << opt_num(r.vR2) << " C(s)=" << opt_num(r.C) << " "
           << (r.verdict == K2LP_EQUALITY    ? "Equality"
               : r.verdict == K2LP_INEQUALITY ? "Inequality"
                                              : "-")
           << "\n";
    } else if (std::string(kind) == "quadratic") {
        os << "m=" << r.label << " v_3(K_2Z)=" << opt_num(r.vK2) << " v_3(T)=" << opt_num(r.vT)
           << "\n";
    } else if (std::string(kind) == "cubic" && r.p == 3) {
        os << "f=" << r.label << " P=" << poly_str(poly) << " v_3(K_2Z)=" << opt_num(r.vK2)
           << " C(s)=" << opt_num(r.C) << " "
           << (r.verdict == K2LP_EQUALITY    ? "Equality"
               : r.verdict == K2LP_INEQUALITY ? "Inequality"
                                              : "-")
           << "\n";
    } else if (std::string(kind) == "cubic") {
        os << "f=" << r.label << " P=" << poly_str(poly) << " v_2(R_2Z)=" << opt_num(r.vR2)
           << " v_2(T)=" << opt_num(r.vT) << "\n";
    } else {
        os << "p=" << r.p << " ell=" << r.label << " v(K_2Z)=" << opt_num(r.vK2) << "\n";
    }
}

struct RowCollector {
    std::string format = "json";
    OutputSink* sink = nullptr;
    ojson arr = ojson::array();
    bool tsv_started = false;

    void add(const char* kind, const k2lp_row& r, const long long* poly = nullptr) {
        if (format == "json") {
            arr.push_back(row_json(kind, r, poly));
        } else if (format == "tsv") {
            if (!tsv_started) {
                emit_tsv_header(sink->stream());
                tsv_started = true;
            }
            emit_tsv(sink->stream(), kind, r, poly);
        } else {
            emit_paper(sink->stream(), kind, r, poly);
        }
    }
    void finish() {
        if (format == "json") sink->stream() << arr.dump(2) << "\n";
    }
};

bool is_squarefree_ll(long long m) {
    for (long long d = 2; d * d <= m; ++d)
        if (m % (d * d) == 0) return false;
    return true;
}

int run_scan_quadratic(k2lp_ctx* ctx, int p, long long from, long long to, bool allow_unstable,
                       RowCollector& rows) {
    int rc = kExitOk;
    for (long long m = from; m <= to; ++m) {
        if (m < 2 || !is_squarefree_ll(m)) continue;
        k2lp_row r;
        int st = k2lp_quad_row(ctx, m, p, &r);
        if (st == K2LP_ECONTRADICTION) {
            std::cerr << "contradiction at m=" << m << ": " << k2lp_last_error(ctx) << "\n";
            return kExitContradiction;
        }
        if (st == K2LP_EPRECISION) {
            std::cerr << "precision exhausted at m=" << m << "\n";
            if (!allow_unstable) rc = kExitPrecision;
            continue;
        }
        if (st != K2LP_OK) {
            std::cerr << "m=" << m << ": " << k2lp_last_error(ctx) << "\n";
            return kExitBadArgs;
        }
        rows.add("quadratic", r);
    }
    return rc;
}

int run_scan_cubic(k2lp_ctx* ctx, int p, long long from, long long to, bool allow_unstable,
                   RowCollector& rows) {
    int rc = kExitOk;
    for (long long f = from; f <= to; ++f) {
        k2lp_cubic_row buf[16];
        int count = 0;
        int st = k2lp_cubic_rows(ctx, f, p, buf, 16, &count);
        if (st == K2LP_ECONTRADICTION) {
            std::cerr << "contradiction at f=" << f << ": " << k2lp_last_error(ctx) << "\n";
            return kExitContradiction;
        }
        if (st == K2LP_EPRECISION) {
            std::cerr << "precision exhausted at f=" << f << "\n";
            if (!allow_unstable) rc = kExitPrecision;
            continue;
        }
        if (st != K2LP_OK) continue;  // f below 7 / not a conductor
        for (int i = 0; i < count; ++i) rows.add("cubic", buf[i].row, buf[i].poly);
    }
    return rc;
}

int run_scan_degp(k2lp_ctx* ctx, int p, long long from, long long to, int higher_n,
                  RowCollector& rows) {
    for (long long ell = from; ell <= to; ++ell) {
        if ((ell - 1) % p != 0) continue;
        k2lp_row r;
        int st = k2lp_degp_row(ctx, ell, p, higher_n, &r);
        if (st == K2LP_EBADARG) continue;  // not prime
        if (st != K2LP_OK) {
            std::cerr << "ell=" << ell << ": " << k2lp_last_error(ctx) << "\n";
            return st == K2LP_EPRECISION ? kExitPrecision : kExitBadArgs;
        }
        rows.add("degree-p", r);
    }
    return kExitOk;
}

ojson dengli_json(const k2lp_dengli& d) {
    ojson j;
    j["m"] = d.m;
    j["primes"] = std::vector<long long>(d.primes, d.primes + d.nprimes);
    j["conditions_ok"] = (bool)d.conditions_ok;
    j["matrix_rank"] = d.matrix_rank;
    j["h"] = d.h;
    j["h2_valuation"] = d.h2_valuation;
    j["vT"] = d.vT;
    j["predicted_vK2"] = d.predicted_vK2;
    ojson unit;
    unit["ok"] = (bool)d.unit_ok;
    unit["a_mod_8"] = d.a_mod_8;
    unit["a_quarter_odd"] = (bool)d.a_quarter_odd;
    unit["b_odd"] = (bool)d.b_odd;
    unit["norm"] = d.unit_norm;
    unit["square_congruence"] = (bool)d.square_congruence;
    j["unit"] = unit;
    ojson rel;
    rel["u"] = d.rel_u;
    rel["v"] = d.rel_v;
    rel["sign"] = d.rel_sign;
    rel["l2"] = d.rel_l2;
    rel["c"] = d.rel_c;
    j["relation"] = rel;
    return j;
}

void dengli_paper(std::ostream& os, const k2lp_dengli& d) {
    os << "m=" << d.m << " primes=[";
    for (int i = 0; i < d.nprimes; ++i) os << (i ? "," : "") << d.primes[i];
    os << "] rank=" << d.matrix_rank << " h=" << d.h << " v2(h)=" << d.h2_valuation
       << " v2(T)=" << d.vT << "\n";
    os << "u=" << (d.rel_sign < 0 ? "-" : "") << d.rel_u << " v=" << d.rel_v << " S=" << d.rel_c
       << " [2," << d.rel_l2 << "]\n";
}

int run_dengli(k2lp_ctx* ctx, int n, long long bound, long long m, const std::string& format,
               OutputSink& sink) {
    std::vector<long long> ms;
    if (m > 0) {
        ms.push_back(m);
    } else {
        std::vector<long long> buf(4096);
        int count = 0;
        if (k2lp_dengli_search(ctx, n, bound, buf.data(), (int)buf.size(), &count) != K2LP_OK) {
            std::cerr << "search failed: " << k2lp_last_error(ctx) << "\n";
            return kExitBadArgs;
        }
        ms.assign(buf.begin(), buf.begin() + count);
    }
    ojson arr = ojson::array();
    int rc = kExitOk;
    for (long long mm : ms) {
        k2lp_dengli d;
        int st = k2lp_dengli_report(ctx, mm, &d);
        if (st == K2LP_EBADARG) {
            std::cerr << "m=" << mm << ": " << k2lp_last_error(ctx) << "\n";
            return kExitBadArgs;
        }
        if (st == K2LP_ECONTRADICTION || (st == K2LP_OK && (d.matrix_rank != d.nprimes ||
                                                            !d.unit_ok))) {
            std::cerr << "family invariant failed at m=" << mm << ": " << k2lp_last_error(ctx)
                      << "\n";
            rc = kExitContradiction;
            continue;
        }
        if (st != K2LP_OK) {
            std::cerr << "m=" << mm << ": " << k2lp_last_error(ctx) << "\n";
            return kExitPrecision;
        }
        if (format == "json")
            arr.push_back(dengli_json(d));
        else
            dengli_paper(sink.stream(), d);
    }
    if (format == "json") sink.stream() << arr.dump(2) << "\n";
    return rc;
}

int run_verify_golden(k2lp_ctx* ctx) {
    using namespace k2lp::golden;
    int bad = 0;
    auto miss = [&](const char* src, const std::string& detail) {
        std::cerr << "MISMATCH " << src << ": " << detail << "\n";
        ++bad;
    };
    for (const auto& g : kQuadP2) {
        k2lp_row r;
        if (k2lp_quad_row(ctx, g.m, 2, &r) != K2LP_OK) {
            miss(g.source, k2lp_last_error(ctx));
            continue;
        }
        bool eq = r.verdict == K2LP_EQUALITY;
        if (r.vT != g.vT || r.vR2 != g.vR2 || r.C != g.C || eq != g.equality || r.c != g.c)
            miss(g.source, "row differs");
    }
    for (const auto& g : kQuadP3) {
        k2lp_row r;
        if (k2lp_quad_row(ctx, g.m, 3, &r) != K2LP_OK) {
            miss(g.source, k2lp_last_error(ctx));
            continue;
        }
        if (r.vK2 != g.vK2 || (g.vT >= 0 && r.vT != g.vT) || !r.congruence_ok)
            miss(g.source, "row differs");
    }
    for (const auto& g : kCubicP3) {
        k2lp_cubic_row buf[8];
        int count = 0;
        if (k2lp_cubic_rows(ctx, g.f, 3, buf, 8, &count) != K2LP_OK) {
            miss(g.source, k2lp_last_error(ctx));
            continue;
        }
        bool found = false;
        for (int i = 0; i < count; ++i) {
            if (buf[i].poly[3] != g.k3) continue;
            found = true;
            bool eq = buf[i].row.verdict == K2LP_EQUALITY;
            if (buf[i].row.vK2 != g.vK2 || buf[i].row.vT != g.vT || buf[i].row.C != g.C ||
                eq != g.equality)
                miss(g.source, "row differs");
        }
        if (!found) miss(g.source, "instance not found");
    }
    for (const auto& g : kCubicP2) {
        k2lp_cubic_row buf[8];
        int count = 0;
        if (k2lp_cubic_rows(ctx, g.f, 2, buf, 8, &count) != K2LP_OK || count != 1) {
            miss(g.source, k2lp_last_error(ctx));
            continue;
        }
        if (buf[0].row.vR2 != g.vR2 || buf[0].row.vT != g.vT || !buf[0].row.congruence_ok)
            miss(g.source, "row differs");
    }
    for (const auto& g : kDegP) {
        k2lp_row r;
        if (k2lp_degp_row(ctx, g.ell, g.p, -1, &r) != K2LP_OK || r.vK2 != g.v)
            miss(g.source, "value differs");
    }
    for (const auto& g : kHigherK) {
        k2lp_row r;
        if (k2lp_degp_row(ctx, g.ell, g.p, 2, &r) != K2LP_OK || r.vK2 != g.v)
            miss(g.source, "value differs");
    }
    for (long long m : kDengLi) {
        k2lp_dengli d;
        if (k2lp_dengli_report(ctx, m, &d) != K2LP_OK) {
            miss("A1 family", k2lp_last_error(ctx));
            continue;
        }
        if (d.matrix_rank != 4 || d.h2_valuation != 3 || d.vT != 4 || !d.unit_ok)
            miss("A1 family", "report differs at m=" + std::to_string(m));
    }
    if (bad) {
        std::cerr << bad << " golden mismatches\n";
        return kExitContradiction;
    }
    std::cout << "all golden rows match\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic L-valuation scans for real abelian fields"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("K2LP_THREADS")) threads = std::max(1, std::atoi(env));
    std::string format = "json";
    OutputSink sink;
    int n0 = -1, nmax = -1, guard = -1;
    bool allow_unstable = false;
    app.add_option("--threads", threads, "parallelism degree");
    app.add_option("--format", format, "json | tsv | paper-text")
        ->check(CLI::IsMember({"json", "tsv", "paper-text"}));
    app.add_option("--out", sink.path, "output file (default stdout)");
    app.add_option("--n0", n0, "precision schedule floor");
    app.add_option("--nmax", nmax, "precision schedule ceiling");
    app.add_option("--guard", guard, "stability guard digits");
    app.add_flag("--allow-unstable", allow_unstable, "do not fail on BelowPrecision rows");

    int p = 2;
    long long from = 0, to = 0;
    auto* sq = app.add_subcommand("scan-quadratic", "appendix B1/B2 scan");
    sq->add_option("--p", p)->check(CLI::IsMember({2, 3}))->required();
    sq->add_option("--m-from", from)->required();
    sq->add_option("--m-to", to)->required();

    auto* sc = app.add_subcommand("scan-cubic", "appendix C1/C2 scan");
    sc->add_option("--p", p)->check(CLI::IsMember({2, 3}))->required();
    sc->add_option("--f-from", from)->required();
    sc->add_option("--f-to", to)->required();

    int higher_n = -1;
    auto* sd = app.add_subcommand("scan-degree-p", "appendix D1/D3 scan");
    sd->add_option("--p", p)->required();
    sd->add_option("--ell-from", from)->required();
    sd->add_option("--ell-to", to)->required();
    sd->add_option("--higher-n", higher_n, "Bernoulli weight level (D3 path)");

    int dn = 4;
    long long dbound = 0, dm = 0;
    auto* dl = app.add_subcommand("dengli", "family verifier");
    dl->add_option("--n", dn);
    dl->add_option("--bound", dbound);
    dl->add_option("--m", dm);

    auto* vg = app.add_subcommand("verify-golden", "replay all golden tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArgs;
    }

    Ctx ctx(k2lp_ctx_new());
    if (!ctx) return kExitBadArgs;
    k2lp_set_threads(ctx.get(), threads);
    if (n0 > 0 || nmax > 0 || guard >= 0) {
        // override only the requested knobs, per-path defaults otherwise
        const int d0[4] = {8, 5, 3, 8}, d1[4] = {16, 9, 6, 12};
        for (int path = 0; path < 4; ++path) {
            int s0 = n0 > 0 ? n0 : d0[path];
            int s1 = std::max(s0, nmax > 0 ? nmax : d1[path]);
            int sg = guard >= 0 ? guard : 2;
            if (k2lp_set_schedule(ctx.get(), path, s0, s1, sg) != K2LP_OK) {
                std::cerr << "bad schedule\n";
                return kExitBadArgs;
            }
        }
    }

    if ((*sq || *sc || *sd) && (from < 2 || to < from)) {
        std::cerr << "empty or invalid scan range\n";
        return kExitBadArgs;
    }

    RowCollector rows;
    rows.format = format;
    rows.sink = &sink;
    int rc = kExitOk;
    if (*sq) {
        rc = run_scan_quadratic(ctx.get(), p, from, to, allow_unstable, rows);
        rows.finish();
    } else if (*sc) {
        rc = run_scan_cubic(ctx.get(), p, from, to, allow_unstable, rows);
        rows.finish();
    } else if (*sd) {
        rc = run_scan_degp(ctx.get(), p, from, to, higher_n, rows);
        rows.finish();
    } else if (*dl) {
        if (dm <= 0 && dbound <= 0) {
            std::cerr << "dengli requires --m or --n/--bound\n";
            return kExitBadArgs;
        }
        rc = run_dengli(ctx.get(), dn, dbound, dm, format, sink);
    } else if (*vg) {
        rc = run_verify_golden(ctx.get());
    }
    return rc;
}
