#include "k2lp/k2lp.h"

#include <cstring>
#include <string>

#include "invariants.h"
#include "quadlab.h"

using namespace k2lp;

struct k2lp_ctx {
    int threads = 1;
    Schedule sched[4] = {default_schedule_quad(2), default_schedule_quad(3),
                         default_schedule_cubic(3), default_schedule_cubic(2)};
    std::string last_error;
};

namespace {

int fail(k2lp_ctx* ctx, int code, const std::string& msg) {
    if (ctx) ctx->last_error = msg;
    return code;
}

template <typename Fn>
int guarded(k2lp_ctx* ctx, Fn&& fn) {
    try {
        return fn();
    } catch (const PrecisionError& e) {
        return fail(ctx, K2LP_EPRECISION, e.what());
    } catch (const ContradictionDetected& e) {
        return fail(ctx, K2LP_ECONTRADICTION, e.what());
    } catch (const ArithError& e) {
        return fail(ctx, K2LP_EBADARG, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, K2LP_EINTERNAL, e.what());
    }
}

void fill_row(k2lp_row* out, const InvariantRow& r) {
    out->label = r.label;
    out->p = r.p;
    out->vT = r.vT;
    out->vK2 = r.vK2;
    out->vR2 = r.vR2;
    out->C = r.C;
    out->verdict = r.verdict == Verdict::Equality     ? K2LP_EQUALITY
                   : r.verdict == Verdict::Inequality ? K2LP_INEQUALITY
                                                      : K2LP_NA;
    out->n_used = r.n_used;
    out->stable = r.stable ? 1 : 0;
    out->congruence_ok = r.congruence_ok ? 1 : 0;
    out->c = r.c;
}

const Schedule& sched_for(const k2lp_ctx* ctx, int p, bool cubic) {
    if (cubic) return ctx->sched[p == 3 ? K2LP_PATH_CUBIC_P3 : K2LP_PATH_CUBIC_P2];
    return ctx->sched[p == 2 ? K2LP_PATH_QUAD_P2 : K2LP_PATH_QUAD_P3];
}

}  // namespace

extern "C" {

k2lp_ctx* k2lp_ctx_new(void) { return new (std::nothrow) k2lp_ctx; }
void k2lp_ctx_free(k2lp_ctx* ctx) { delete ctx; }
const char* k2lp_last_error(const k2lp_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void k2lp_set_threads(k2lp_ctx* ctx, int threads) {
    if (ctx && threads >= 1) ctx->threads = threads;
}

int k2lp_set_schedule(k2lp_ctx* ctx, int path, int n0, int nmax, int guard) {
    if (!ctx || path < 0 || path > 3 || n0 < 1 || nmax < n0 || guard < 0)
        return fail(ctx, K2LP_EBADARG, "bad schedule");
    ctx->sched[path] = Schedule{n0, nmax, guard};
    return K2LP_OK;
}

int k2lp_quad_row(k2lp_ctx* ctx, long long m, int p, k2lp_row* out) {
    if (!ctx || !out || m < 2 || (p != 2 && p != 3))
        return fail(ctx, K2LP_EBADARG, "bad quad arguments");
    return guarded(ctx, [&] {
        if (!is_squarefree(m)) throw ArithError("NotSquarefree");
        fill_row(out, quad_row(m, p, sched_for(ctx, p, false), ctx->threads));
        return (int)K2LP_OK;
    });
}

int k2lp_cubic_rows(k2lp_ctx* ctx, long long f, int p, k2lp_cubic_row* out, int cap, int* count) {
    if (!ctx || !out || !count || f < 7 || (p != 2 && p != 3))
        return fail(ctx, K2LP_EBADARG, "bad cubic arguments");
    return guarded(ctx, [&] {
        auto insts = cubic_field_instances(f);
        *count = (int)insts.size();
        if ((int)insts.size() > cap) return fail(ctx, K2LP_ERANGE, "row buffer too small");
        for (size_t i = 0; i < insts.size(); ++i) {
            fill_row(&out[i].row, cubic_row(insts[i], p, sched_for(ctx, p, true), ctx->threads));
            for (int j = 0; j < 4; ++j) out[i].poly[j] = insts[i].poly[(size_t)j];
            out[i].a = insts[i].a;
            out[i].b = insts[i].b;
        }
        return (int)K2LP_OK;
    });
}

int k2lp_degp_row(k2lp_ctx* ctx, long long ell, int p, int higher_n, k2lp_row* out) {
    if (!ctx || !out || p < 3 || !is_prime((u64)p) || ell <= p)
        return fail(ctx, K2LP_EBADARG, "bad degree-p arguments");
    return guarded(ctx, [&] {
        *out = k2lp_row{};
        out->label = ell;
        out->p = p;
        out->vT = out->vR2 = out->C = -1;
        out->verdict = K2LP_NA;
        out->stable = 1;
        out->congruence_ok = 1;
        if (higher_n < 0)
            out->vK2 = degp_k2_valuation_exact(ell, (unsigned)p);
        else
            out->vK2 = (int)higher_k_valuation(ell, (unsigned)p, higher_n);
        return (int)K2LP_OK;
    });
}

int k2lp_dengli_search(k2lp_ctx* ctx, int n, long long bound, long long* out, int cap, int* count) {
    if (!ctx || !out || !count || n < 2 || n % 2 != 0 || bound < 2)
        return fail(ctx, K2LP_EBADARG, "bad search arguments");
    return guarded(ctx, [&] {
        auto ms = dengli_search(n, bound);
        *count = (int)ms.size();
        if ((int)ms.size() > cap) return fail(ctx, K2LP_ERANGE, "result buffer too small");
        for (size_t i = 0; i < ms.size(); ++i) out[i] = ms[i];
        return (int)K2LP_OK;
    });
}

int k2lp_dengli_report(k2lp_ctx* ctx, long long m, k2lp_dengli* out) {
    if (!ctx || !out || m < 2) return fail(ctx, K2LP_EBADARG, "bad report arguments");
    return guarded(ctx, [&] {
        DengLiReport rep = dengli_report(m);
        std::memset(out, 0, sizeof(*out));
        out->m = rep.m;
        out->conditions_ok = rep.conditions_ok ? 1 : 0;
        if (!rep.conditions_ok) return fail(ctx, K2LP_EBADARG, "NotDengLi");
        out->nprimes = (int)rep.primes.size();
        if (out->nprimes > 16) return fail(ctx, K2LP_ERANGE, "too many primes");
        for (size_t i = 0; i < rep.primes.size(); ++i) out->primes[i] = rep.primes[i];
        out->matrix_rank = rep.matrix_rank;
        out->h = rep.h;
        out->h2_valuation = rep.h2_valuation;
        out->vT = rep.vT;
        out->predicted_vK2 = rep.predicted_vK2;
        out->unit_ok = rep.unit.ok ? 1 : 0;
        out->a_mod_8 = rep.unit.a_mod_8;
        out->a_quarter_odd = rep.unit.a_quarter_odd ? 1 : 0;
        out->b_odd = rep.unit.b_odd ? 1 : 0;
        out->unit_norm = rep.unit.unit_norm;
        out->square_congruence = rep.unit.square_congruence ? 1 : 0;
        std::string u = rep.relation.u.get_str(), v = rep.relation.v.get_str();
        if (u.size() >= sizeof(out->rel_u) || v.size() >= sizeof(out->rel_v))
            return fail(ctx, K2LP_ERANGE, "relation witness too large");
        std::strcpy(out->rel_u, u.c_str());
        std::strcpy(out->rel_v, v.c_str());
        out->rel_sign = rep.relation.sign;
        out->rel_l2 = rep.relation.l2;
        out->rel_c = rep.relation.c;
        return (int)K2LP_OK;
    });
}

int k2lp_birch_tate_valuation(k2lp_ctx* ctx, long long m, int p, long* out) {
    if (!ctx || !out || m < 2 || (p != 2 && p != 3))
        return fail(ctx, K2LP_EBADARG, "bad birch-tate arguments");
    return guarded(ctx, [&] {
        if (!is_squarefree(m)) throw ArithError("NotSquarefree");
        *out = birch_tate_k2_valuation(m, (unsigned)p);
        return (int)K2LP_OK;
    });
}

}  // extern "C"
