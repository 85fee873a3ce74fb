"""
Verification suite comparing every route to the counts against the others.

Each group returns a result dict ``{'res': bool, 'msg': str, 'compared': int}``.
Groups read shared tables only, so they may run on a thread pool; results
are always reported in the fixed group order.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .config import get_config
from .localization import _
from .paths import Direction, FamilyTag, OracleBoundError, oracle_counts
from .recurrences import CountTable, family_tables, residue_violations, smotzkin_count
from .series import (series_for, ternary_tree_series, ternary_tree_series_iterated, inversion_residual,
                     coeff_t_pow, coeff_t_pow_contour, functional_equation_residual, system_residuals,
                     consistency_residuals, binet_poly, girard_waring_poly)
from .closed_forms import CLOSED_FORMS
from . import determinants as dt

log = logging.getLogger(__name__)

# Typing
Result = dict
Fault = tuple[int, int]

SERIES_NAMES = {FamilyTag.A: 'f', FamilyTag.B: 'g', FamilyTag.C: 'phi', FamilyTag.D: 'psi'}


@dataclass(frozen=True)
class CheckPlan:
    """Sizes of one suite run, all derived from ``n_max`` and the config."""

    n_max: int
    oracle_bound: int
    closed_n_max: int
    series_k_max: int
    det_h_max: int
    reference_h_max: int
    bordered_n_max: int
    tau_i_max: int
    cramer_order: int
    cramer_i_max: int
    cramer_margin: int
    gw_k_max: int
    binet_poly_i_max: int
    binet_h_max: int
    fault: Fault | None = None
    workers: int = 1  # Threads for the stabilization scans

    @classmethod
    def build(cls, n_max: int, oracle_bound: int | None = None, fault: Fault | None = None,
              workers: int = 1) -> 'CheckPlan':
        """
        Scale the configured sizes down to ``n_max``.

        :param n_max: Largest length compared.
        :param oracle_bound: Largest oracle length; defaults to the config.
        :param fault: Entry (n, k) of the A-table to corrupt before comparing.
        :param workers: Threads for the stabilization scans.
        :raise OracleBoundError: If ``oracle_bound`` exceeds the hard limit.
        """
        cfg = get_config()
        if n_max < 0:
            raise ValueError(f'Negative length: {n_max}')
        if oracle_bound is None:
            oracle_bound = cfg.ORACLE_BOUND
        if oracle_bound < 0:
            raise ValueError(f'Negative oracle bound: {oracle_bound}')
        if oracle_bound > cfg.ORACLE_HARD_LIMIT:
            raise OracleBoundError(f'Oracle length {oracle_bound} exceeds the hard limit {cfg.ORACLE_HARD_LIMIT}')
        closed_n_max = min(cfg.CLOSED_FORM_N_MAX, 2 * n_max)
        if fault is not None and not 0 <= fault[1] <= fault[0] <= closed_n_max:
            raise ValueError(f'Fault position {fault} outside the compared tables')
        cramer_order = min(cfg.CRAMER_ORDER, n_max)
        return cls(
            n_max=n_max,
            oracle_bound=min(oracle_bound, n_max),
            closed_n_max=closed_n_max,
            series_k_max=min(cfg.SERIES_K_MAX, n_max),
            det_h_max=max(min(cfg.DET_H_MAX, n_max), 1),
            reference_h_max=max(min(cfg.REFERENCE_DET_H_MAX, n_max), 1),
            bordered_n_max=max(min(cfg.BORDERED_N_MAX, n_max), 1),
            tau_i_max=min(cfg.TAU_I_MAX, n_max),
            cramer_order=cramer_order,
            cramer_i_max=min(cfg.CRAMER_I_MAX, cramer_order),
            cramer_margin=cfg.CRAMER_MARGIN,
            gw_k_max=min(cfg.GW_K_MAX, n_max),
            binet_poly_i_max=min(cfg.BINET_POLY_I_MAX, n_max),
            binet_h_max=min(cfg.BINET_H_MAX, n_max),
            fault=fault,
            workers=workers,
        )


def build_tables(plan: CheckPlan) -> dict[FamilyTag, CountTable]:
    """DP tables covering every compared length, with the fault injected if requested."""
    tables = family_tables(max(plan.n_max, plan.closed_n_max))
    if plan.fault is not None:
        n, k = plan.fault
        a = tables[FamilyTag.A]
        tables[FamilyTag.A] = a.with_entry(n, k, a.get(n, k) + 1)
        log.warning('injected fault at a(%d, %d)', n, k)
    return tables


def _ok(compared: int, msg: str = '') -> Result:
    return {'res': True, 'msg': msg, 'compared': compared}


def _fail(compared: int, msg: str) -> Result:
    return {'res': False, 'msg': msg, 'compared': compared}


def check_oracle(plan: CheckPlan, tables) -> Result:
    """Brute-force enumeration against the recurrences."""
    bound = plan.oracle_bound
    compared = 0
    for direction in Direction:
        for table in oracle_counts(direction, bound):
            dp = tables[table.family].restrict(bound)
            mismatch = dp.first_mismatch(table)
            compared += (bound + 1) * (bound + 2) // 2
            if mismatch is not None:
                n, k = mismatch
                return _fail(compared, _('{}({}, {}): recurrence gives {}, enumeration gives {}').format(
                    table.family.value, n, k, dp.get(n, k), table.get(n, k)))
    return _ok(compared)


def check_residues(plan: CheckPlan, tables) -> Result:
    """Residue classes, the diagonal ternary numbers and a(n, 0) = c(n, 0)."""
    compared = 0
    for table in tables.values():
        bad = residue_violations(table)
        compared += len(table.nonzero_entries())
        if bad:
            n, k, _count = bad[0]
            return _fail(compared, _('{}({}, {}) is nonzero outside its residue class').format(
                table.family.value, n, k))
    a, c = tables[FamilyTag.A], tables[FamilyTag.C]
    for m in range(plan.closed_n_max // 3 + 1):
        compared += 1
        if a.get(3 * m, 0) != smotzkin_count(m):
            return _fail(compared, _('a({}, 0) differs from the ternary number of size {}').format(3 * m, m))
    for n in range(plan.closed_n_max + 1):
        compared += 1
        if a.get(n, 0) != c.get(n, 0):
            return _fail(compared, _('a({}, 0) differs from c({}, 0)').format(n, n))
    return _ok(compared)


def check_series(plan: CheckPlan, tables) -> Result:
    """Coefficients of the generating functions against the recurrences."""
    compared = 0
    for family, name in SERIES_NAMES.items():
        table = tables[family]
        for k in range(plan.series_k_max + 1):
            series = series_for(name, k, plan.n_max)
            for n in range(plan.n_max + 1):
                compared += 1
                if series[n] != table.get(n, k):
                    return _fail(compared, _('{}({}, {}): recurrence gives {}, series {}_{} gives {}').format(
                        family.value, n, k, table.get(n, k), name, k, series[n]))
    return _ok(compared)


def check_closed_forms(plan: CheckPlan, tables) -> Result:
    """Binomial closed forms against the recurrences."""
    compared = 0
    for family, closed in CLOSED_FORMS.items():
        table = tables[family]
        for n in range(plan.closed_n_max + 1):
            for k in range(n + 1):
                compared += 1
                if closed(n, k) != table.get(n, k):
                    return _fail(compared, _('{}({}, {}): recurrence gives {}, closed form gives {}').format(
                        family.value, n, k, table.get(n, k), closed(n, k)))
    return _ok(compared)


def check_series_identities(plan: CheckPlan, tables) -> Result:
    """Functional equations and consistency identities of the generating functions."""
    order = plan.n_max
    compared = 0
    t = ternary_tree_series(order)
    iterated = min(order, 20)
    checks = [
        ('t (1 - t)^2 = x', inversion_residual(order).is_zero()),
        ('fixed-point t', ternary_tree_series_iterated(iterated) == ternary_tree_series(iterated)),
    ]
    for n in range(1, order + 1):
        for k in range(1, n + 1):
            checks.append((f'[x^{n}] t^{k}', coeff_t_pow(n, k) == coeff_t_pow_contour(n, k)))
        checks.append((f'[x^{n}] t', coeff_t_pow(n, 1) == t[n]))
    for k in range(plan.series_k_max + 1):
        checks.append((f'f_{k} equation', functional_equation_residual(k, order).is_zero()))
        for name, residual in system_residuals(k, order).items():
            checks.append((f'{name}_{k} system row', residual.is_zero()))
        for name, residual in consistency_residuals(k, order).items():
            checks.append((f'{name} identity at k={k}', residual.is_zero()))
    for label, passed in checks:
        compared += 1
        if not passed:
            return _fail(compared, _('identity failed: {}').format(label))
    return _ok(compared)


def check_determinants(plan: CheckPlan, tables) -> Result:
    """Band determinants against their recursions, sympy and the tau identity."""
    compared = 0
    d_seq = dt.D_sequence(plan.det_h_max)
    for h in range(1, plan.det_h_max + 1):
        specs = [(dt.Orientation.FIRST_SYSTEM, d_seq[h]), (dt.Orientation.TRANSPOSED, d_seq[h])]
        if h >= 2:
            specs.append((dt.Orientation.FIRST_SYSTEM_STAR, dt.D_star(h)))
        for orientation, expected in specs:
            spec = dt.BandMatrixSpec(h, orientation)
            compared += 1
            if dt.det_exact(spec) != expected:
                return _fail(compared, _('determinant of {} size {} differs from the recursion').format(
                    orientation.value, h))
            if h <= plan.reference_h_max:
                compared += 1
                if dt.det_reference(spec) != expected:
                    return _fail(compared, _('sympy determinant of {} size {} differs').format(orientation.value, h))
    for i, value in enumerate(dt.tau_sequence(plan.tau_i_max)):
        compared += 1
        if value != dt.tau_explicit(i):
            return _fail(compared, _('tau_{} differs from its binomial sum').format(i))
    for n in range(1, plan.bordered_n_max + 1):
        for i in range(1, n + 1):
            compared += 1
            if dt.bordered_det(n, i) != dt.bordered_det_tau(n, i):
                return _fail(compared, _('bordered determinant D_({},{}) breaks the tau identity').format(n, i))
    return _ok(compared)


def check_cramer(plan: CheckPlan, tables) -> Result:
    """Cramer quotients at a large size against f_i and psi_i, with measured thresholds."""
    order, margin = plan.cramer_order, plan.cramer_margin
    compared = 0
    f_thresholds, psi_thresholds = [], []
    for i in range(plan.cramer_i_max + 1):
        size = order + i + margin
        compared += 2
        if dt.cramer_f(i, size, order) != series_for('f', i, order):
            return _fail(compared, _('z^(2i) D_(h-i-1) / D*_h differs from f_{} at h = {}').format(i, size))
        if dt.cramer_psi(i, size, order) != series_for('psi', i, order):
            return _fail(compared, _('Cramer quotient differs from psi_{} at n = {}').format(i, size))
        f_thresholds.append(dt.cramer_f_threshold(i, order, size, plan.workers))
        psi_thresholds.append(dt.cramer_psi_threshold(i, order, size, plan.workers))
    size = order + margin
    compared += 1
    if dt.ratio_series(size, 1, order) != dt.ratio_limit(1, order):
        return _fail(compared, _('D_(n-1) / D_n differs from (t - 1)^(-2) at n = {}').format(size))
    log.info('cramer thresholds f: %s psi: %s', f_thresholds, psi_thresholds)
    return _ok(compared, _('h0 for f: {}; n0 for psi: {}').format(f_thresholds, psi_thresholds))


def check_polynomials(plan: CheckPlan, tables) -> Result:
    """Girard-Waring expansion and the tau substitution against the Binet polynomials."""
    compared = 0
    for k in range(plan.gw_k_max + 1):
        compared += 1
        if girard_waring_poly(k) != binet_poly(k + 1):
            return _fail(compared, _('Girard-Waring sum {} differs from S_{}').format(k, k + 1))
    for i in range(plan.binet_poly_i_max + 1):
        compared += 1
        if dt.tau_minus_t_tau(i) != binet_poly(i):
            return _fail(compared, _('tau_{} - t tau_{} differs from S_{}').format(i, i - 1, i))
    return _ok(compared)


def check_binet(plan: CheckPlan, tables) -> Result:
    """Numeric Binet decomposition of D_h and the symmetric functions of its roots."""
    cfg = get_config()
    compared = 0
    for t in cfg.BINET_T_VALUES:
        rd = dt.root_data(t)
        for name, residual in dt.vieta_residuals(rd).items():
            compared += 1
            if residual > cfg.VIETA_TOLERANCE:
                return _fail(compared, _('{} identity of the roots fails at t = {}: {}').format(name, t, residual))
        compared += 1
        residual = dt.numpy_roots_residual(rd)
        if residual > cfg.BINET_TOLERANCE:
            return _fail(compared, _('numpy roots differ from the closed forms at t = {}: {}').format(t, residual))
        for h in range(plan.binet_h_max + 1):
            compared += 1
            residual = dt.binet_numeric(t, h)
            if residual > cfg.BINET_TOLERANCE:
                return _fail(compared, _('Binet form of D_{} fails at t = {}: {}').format(h, t, residual))
    return _ok(compared)


CHECKS = [
    ('oracle-vs-dp', check_oracle),
    ('residue-classes', check_residues),
    ('dp-vs-series', check_series),
    ('dp-vs-closed-form', check_closed_forms),
    ('series-identities', check_series_identities),
    ('determinants', check_determinants),
    ('cramer-stabilization', check_cramer),
    ('polynomial-identities', check_polynomials),
    ('binet-numerics', check_binet),
]


def run_crosscheck(plan: CheckPlan, jobs: int = 1) -> list[tuple[str, Result]]:
    """
    Run every check group.

    :param plan: Sizes of the run.
    :param jobs: Number of threads running the groups. The groups are pure Python
        and hold the GIL, so this overlaps them without speeding them up.
    :return: ``(name, result)`` pairs in the fixed group order.
    """
    tables = build_tables(plan)

    def run(item):
        name, check = item
        log.debug('running %s', name)
        return name, check(plan, tables)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, CHECKS))
    return [run(item) for item in CHECKS]
