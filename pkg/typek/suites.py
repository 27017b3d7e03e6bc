"""
Verification suites. Each suite reproduces one family of printed results and
returns a ``Report`` with one check per claim.
"""
from fractions import Fraction
from random import Random
from typing import Callable, Dict, List, Optional, Sequence
from typek import settings
from typek.errors import TypeKError
from typek.group_lattice import action_summary, check_enriques, coinv_det, enriques_model
from typek.picard_fuchs import (D12Family, D8Family, apply, d12_coefficient, d8_operator, elliptic_suite,
                                residual, verify_theta_inverse, yukawa_check)
from typek.proj_models import (C4_BRANCHING, C6_BRANCHING, D12_BASIS, D8C2_BASIS, c2_branching_family,
                               c2_branching_rep, c4_branching_rep, d12_generator_rep, d12_rep, d8c2_rep,
                               invariant_span_check, parse_polynomial, relation_check)
from typek.qseries import MultiSeries
from typek.report import Report
from typek.type_k import (BrauerRow, brauer_m, c2_coeff, coinvariant_rank_check, h1_exponent, hodge_check,
                          lcsl_check, lcsl_scale, mu_X_eval, mu_typeL, noncyclic_glue_ratio, record, records,
                          record_problems, symplectic_problems, symplectic_table, tables, tube_domain_period, type_l_lattice,
                          verify_duality, elliptic_mirror, elliptic_mirror_inverse)
from typek.utils import get_logger, run_in_threads

logger = get_logger(__name__)

Suite = Callable[[Optional[int]], Report]

BRAUER_ANCHOR = 'Theorem "Br(X) = Z2^m", table of n'
DUALITY_ANCHOR = 'Remark "U + M_G and N_G as quadratic spaces over Q"'
COINV_ANCHOR = 'Lemma on det(gamma), eigenvalue table'
ENRIQUES_ANCHOR = 'Proposition "an Enriques involution if and only if"'
D12_ANCHOR = "B-model, D12 family"
D8_ANCHOR = "B-model, D8 family"
PROJ_ANCHOR = "Examples D12 and D8xC2, projective models"
TABLES_ANCHOR = "Classification tables"


def _series(coeffs: Dict[tuple, int], nvars: int, trunc: int) -> MultiSeries:
    return MultiSeries(nvars, trunc, coeffs)


def _problems(problems: Sequence[str]) -> str:
    return "ok" if not problems else "; ".join(problems)


def brauer_suite(trunc: Optional[int] = None) -> Report:
    report = Report("brauer")
    for r in records():
        expected = BrauerRow(r.disc_lambda_h, r.disc_m, r.disc_n, r.expected_a,
                             r.expected_rank, r.expected_n, r.expected_m)
        report.run(f"brauer.{r.tag}", BRAUER_ANCHOR, expected, lambda tag=r.tag: brauer_m(tag))
    return report


def duality_suite(trunc: Optional[int] = None) -> Report:
    report = Report("duality")
    for r in records():
        expected = "Q-equivalent" + (", equal over Z" if r.tag == "C2" else "")

        def verdict(tag=r.tag) -> str:
            result = verify_duality(tag)
            text = "Q-equivalent" if result.rational else f"not Q-equivalent ({result.rational.reason})"
            if result.integral is not None:
                text += ", equal over Z" if result.integral else ", different over Z"
            return text

        report.run(f"duality.{r.tag}", DUALITY_ANCHOR, expected, verdict)
    return report


def coinv_det_suite(trunc: Optional[int] = None) -> Report:
    report = Report("coinv-det")
    for h, eigenvalues, det in tables().eigenvalues:
        report.run(f"coinv-det.{h}", COINV_ANCHOR, det, lambda eigenvalues=eigenvalues: coinv_det(eigenvalues))
    return report


def enriques_suite(trunc: Optional[int] = None) -> Report:
    report = Report("enriques")
    action = enriques_model(verify=False)
    iota = action.generators[0]
    report.run("enriques.model", ENRIQUES_ANCHOR, "ok", lambda: _problems(check_enriques(action)))
    try:
        summary = action_summary(action, iota)
    except TypeKError as e:
        report.compare("enriques.summary", ENRIQUES_ANCHOR, "summary", f"error: {e.message}")
        return report
    report.compare("enriques.invariant", ENRIQUES_ANCHOR, "rank 10, signature (1, 9), |disc| 1024",
                   f"rank {summary['invariant_rank']}, signature {summary['invariant_signature']}, "
                   f"|disc| {summary['invariant_disc']}")
    report.compare("enriques.coinvariant", ENRIQUES_ANCHOR, "rank 12, signature (2, 10), |disc| 1024",
                   f"rank {summary['coinvariant_rank']}, signature {summary['coinvariant_signature']}, "
                   f"|disc| {summary['coinvariant_disc']}")
    report.compare("enriques.glue", ENRIQUES_ANCHOR, "a = 10", f"a = {summary['a']}")
    torsion = summary['torsion']
    assert isinstance(torsion, list)
    report.compare("enriques.torsion", ENRIQUES_ANCHOR, "Z2^2, n = 12 - 10",
                   f"Z2^{len(torsion)}, n = {summary['coinvariant_rank']} - {summary['a']}")
    return report


D12_PHI0 = {(0, 0): 1, (1, 0): 12, (0, 1): 12, (2, 0): 420, (1, 1): 1680, (0, 2): 420,
            (3, 0): 18480, (2, 1): 166320, (1, 2): 166320, (0, 3): 18480}
D12_R1 = {(1, 0): 40, (0, 1): 64, (2, 0): 1556, (1, 1): 7904, (0, 2): 2816}
D12_Q1 = {(1, 0): 1, (2, 0): 40, (1, 1): 64, (3, 0): 1876, (2, 1): 9216, (1, 2): 4096}


def _swap(coeffs: Dict[tuple, int]) -> Dict[tuple, int]:
    return {(j, i): c for (i, j), c in coeffs.items()}


def pf_d12_suite(trunc: Optional[int] = None) -> Report:
    trunc = trunc or settings.K3_TRUNC
    report = Report("pf-d12")
    try:
        family = D12Family(trunc)
    except TypeKError as e:
        report.compare("pf-d12.solve", D12_ANCHOR, "solved", f"error: {e.message}")
        return report
    low = min(trunc, 3)
    report.compare("pf-d12.phi0", f'{D12_ANCHOR}, "1+12(z1+z2)+420(z1^2+4z1z2+z2^2)+..."',
                   _series(D12_PHI0, 2, low), family.phi0.truncate(low))
    report.compare("pf-d12.phi0.closed-form", f"{D12_ANCHOR}, recursion for Phi0",
                   _series({(m, d - m): d12_coefficient(m, d - m) for d in range(trunc + 1) for m in range(d + 1)}, 2, trunc),
                   family.phi0)
    low = min(trunc, 2)
    report.compare("pf-d12.phi1", f'{D12_ANCHOR}, "Phi0 log(z1)+40z1+64z2+..."',
                   _series(D12_R1, 2, low), family.solutions[0].regular.truncate(low))
    report.compare("pf-d12.phi2", f'{D12_ANCHOR}, "Phi0 log(z2)+64z1+40z2+..."',
                   _series(_swap(D12_R1), 2, low), family.solutions[1].regular.truncate(low))
    report.compare("pf-d12.symmetry", f"{D12_ANCHOR}, z1 <-> z2",
                   family.solutions[1].regular, family.solutions[0].regular.permute([1, 0]))
    low = min(trunc + 1, 3)
    report.compare("pf-d12.q1", f'{D12_ANCHOR}, "q1 = exp(Phi1/Phi0) = z1+8z1(5z1+8z2)+..."',
                   _series(D12_Q1, 2, low), family.mirror.forward[0].truncate(low))
    report.compare("pf-d12.q2", f'{D12_ANCHOR}, "q2 = exp(Phi2/Phi0)"',
                   _series(_swap(D12_Q1), 2, low), family.mirror.forward[1].truncate(low))
    identity = [MultiSeries.variable(i, 2, trunc + 1) for i in range(2)]
    report.compare("pf-d12.round-trip", f"{D12_ANCHOR}, inverse mirror map",
                   ", ".join(map(str, identity)), ", ".join(map(str, family.mirror.round_trip())))
    report.compare("pf-d12.annihilation", f'{D12_ANCHOR}, "Theta_i^2-4z_i(4Theta1+4Theta2+3)(4Theta1+4Theta2+1)"',
                   "0, 0, 0", _residual_text([family.phi0] + family.solutions, family.operators))
    report.run("pf-d12.theta-inverse", f'{D12_ANCHOR}, "z1(q1,q2) = theta2^8(q1)/(64(theta3^4+theta4^4)^2)..."',
               f"agree through degree {trunc}",
               lambda: _theta_inverse_text(trunc, family))
    report.run("pf-d12.yukawa", f'{D12_ANCHOR}, "K_t1t1 = K_t2t2 = 0 and K_t1t2 = 1"',
               "[[0, 1], [1, 0]]", lambda: str([[int(x) for x in row] for row in yukawa_check(trunc, family).gram()]))
    return report


def _residual_text(solutions: list, operators: list) -> str:
    return ", ".join("0" if all(r.is_zero() for r in residual(operators, s)) else "nonzero" for s in solutions)


def _theta_inverse_text(trunc: int, family: D12Family) -> str:
    verify_theta_inverse(trunc, family)
    return f"agree through degree {trunc}"


D8_PHI0 = {(0, 0, 0): 1, (1, 0, 0): 12, (0, 1, 0): 12, (0, 0, 1): 12,
           (2, 0, 0): 420, (0, 2, 0): 420, (0, 0, 2): 420,
           (1, 1, 0): 1680, (0, 1, 1): 1680, (1, 0, 1): 1680}


def pf_d8_suite(trunc: Optional[int] = None) -> Report:
    trunc = trunc or settings.D8_TRUNC
    report = Report("pf-d8")
    try:
        family = D8Family(trunc)
    except TypeKError as e:
        report.compare("pf-d8.solve", D8_ANCHOR, "solved", f"error: {e.message}")
        return report
    low = min(trunc, 2)
    report.compare("pf-d8.phi0", f'{D8_ANCHOR}, "1+12(z1+z2+z3)+420(z1^2+z2^2+z3^2+4z1z2+4z2z3+4z1z3)"',
                   _series(D8_PHI0, 3, low), family.phi0.truncate(low))
    report.compare("pf-d8.symmetry", f"{D8_ANCHOR}, permutations of (z1, z2, z3)", True, family.symmetric())
    rng = Random(settings.RANDOM_SEED)
    failures = []
    for index in range(settings.D8_RANDOM_OPERATORS):
        a = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(6)]
        if not apply(d8_operator(a), family.phi0).is_zero():
            failures.append(f"a = {[str(x) for x in a]}")
    report.compare("pf-d8.random-operators", f'{D8_ANCHOR}, "D_a for a in C^6"',
                   f"{settings.D8_RANDOM_OPERATORS} annihilate", _problems(failures) if failures
                   else f"{settings.D8_RANDOM_OPERATORS} annihilate")
    logger.info(f"D8 Phi0 through degree {trunc}: {family.phi0}")
    return report


def pf_elliptic_suite(trunc: Optional[int] = None) -> Report:
    trunc = trunc or settings.ELLIPTIC_TRUNC
    report = Report("pf-elliptic")
    try:
        report.extend(elliptic_suite(trunc))
    except TypeKError as e:
        report.compare("elliptic.solve", "B-model, X1(6) family", "solved", f"error: {e.message}")
    return report


def proj_models_suite(trunc: Optional[int] = None) -> Report:
    report = Report("proj-models")
    for rep, basis in ((d12_rep(), D12_BASIS), (d8c2_rep(), D8C2_BASIS)):
        report.run(f"proj-models.{rep.name}.relations", PROJ_ANCHOR, "ok",
                   lambda rep=rep: _problems(relation_check(rep).problems))

        def span(rep=rep, basis=basis) -> str:
            verdict = invariant_span_check(rep, [parse_polynomial(p) for p in basis])
            return f"stable, dimension {verdict.dimension}" if verdict else _problems(verdict.problems)

        report.run(f"proj-models.{rep.name}.basis", PROJ_ANCHOR, "stable, dimension 3", span)

    def branching(rep, polynomials) -> str:
        verdict = invariant_span_check(rep, polynomials, with_dimension=False)
        return f"stable, span {verdict.span_dimension}" if verdict else _problems(verdict.problems)

    report.run("proj-models.branching.C6", "Branching curve for H = C6", "stable, span 3",
               lambda: branching(d12_generator_rep(), [parse_polynomial(p) for p in C6_BRANCHING]))
    report.run("proj-models.branching.C4", "Branching curve for H = C4", "stable, span 4",
               lambda: branching(c4_branching_rep(), [parse_polynomial(p) for p in C4_BRANCHING]))
    report.run("proj-models.branching.C2", "Branching curve for H = C2", "stable, span 8",
               lambda: branching(c2_branching_rep(), c2_branching_family()))
    return report


def tables_suite(trunc: Optional[int] = None) -> Report:
    report = Report("tables")
    for s in symplectic_table():
        report.run(f"tables.symplectic.{'/'.join(s.groups)}", f"{TABLES_ANCHOR}, symplectic invariant lattices",
                   "ok", lambda s=s: _problems(symplectic_problems(s)))
    for row in tables().noncyclic:
        report.run(f"tables.noncyclic.{row['H']}", f"{TABLES_ANCHOR}, non-cyclic H", row["ratio"],
                   lambda row=row: noncyclic_glue_ratio(row["K"], row["H"]))
    for h, _, _ in tables().eigenvalues:
        report.run(f"tables.coinvariant-rank.{h}", COINV_ANCHOR, "ok", lambda h=h: _problems(coinvariant_rank_check(h)))
    for r in records():
        tag = r.tag
        report.run(f"tables.lattices.{tag}", f"{TABLES_ANCHOR}, M_G and N_G even of signature (1, *) and (2, *)", "ok",
                   lambda r=r: _problems(record_problems(r)))
        report.run(f"tables.lcsl.{tag}", f"{TABLES_ANCHOR}, N_G = U(k) + M_G", "Q-equivalent",
                   lambda tag=tag: "Q-equivalent" if lcsl_check(tag) else f"not Q-equivalent, U({lcsl_scale(tag)})")
        report.run(f"tables.hodge.{tag}", f"{TABLES_ANCHOR}, Hodge numbers", "ok", lambda tag=tag: _problems(hodge_check(tag)))
        report.run(f"tables.h1.{tag}", f"{TABLES_ANCHOR}, H_1(X, Z) = Br(X) + Z2^2", r.expected_m + 2,
                   lambda tag=tag: h1_exponent(tag))
        report.compare(f"tables.c2.{tag}", f"{TABLES_ANCHOR}, c2 = 24/|G|", C2_COEFFICIENTS[tag], c2_coeff(tag))
        report.run(f"tables.type-l.{tag}", f"{TABLES_ANCHOR}, trilinear form of type L", "ok",
                   lambda tag=tag: _problems(_type_l_problems(tag)))
    report.run("tables.tube-domain", f"{TABLES_ANCHOR}, tube domain period", "<w, w> = 0, <w, conj w> = 16",
               _tube_domain_sample)
    report.run("tables.elliptic-mirror", f"{TABLES_ANCHOR}, elliptic mirror map", "(1/3, 2)",
               lambda: "({}, {})".format(*elliptic_mirror_inverse(elliptic_mirror(Fraction(1, 3), Fraction(2)))))
    return report


C2_COEFFICIENTS = {"C2": "12", "C2xC2": "6", "C2xC2xC2": "3", "D6": "4",
                   "D8": "3", "D10": "12/5", "D12": "2", "C2xD8": "3/2"}


def _type_l_problems(tag: str) -> List[str]:
    r = record(tag)
    lattice = type_l_lattice(tag)
    mu = mu_typeL(lattice)
    problems = []
    for i in range(lattice.rank):
        for j in range(lattice.rank):
            e_i = [int(k == i) for k in range(lattice.rank)]
            e_j = [int(k == j) for k in range(lattice.rank)]
            value = mu_X_eval(tag, e_i, e_j, 1)
            if value != mu.evaluate(e_i, e_j, 1):
                problems.append(f"mu(e{i + 1}, e{j + 1}, 1) = {value} differs from type L")
            if r.h_cyclic and value.denominator != 1:
                problems.append(f"mu(e{i + 1}, e{j + 1}, 1) = {value} is not integral")
    return problems


def _tube_domain_sample() -> str:
    period = tube_domain_period("D12", [Fraction(1, 2), Fraction(-1, 3)], [Fraction(1), Fraction(2)])
    return f"<w, w> = {period.pairing(period)}, <w, conj w> = {period.pairing(period.conjugate())}"


SUITES: Dict[str, Suite] = {
    "duality": duality_suite,
    "brauer": brauer_suite,
    "coinv-det": coinv_det_suite,
    "enriques": enriques_suite,
    "tables": tables_suite,
    "proj-models": proj_models_suite,
    "pf-d12": pf_d12_suite,
    "pf-d8": pf_d8_suite,
    "pf-elliptic": pf_elliptic_suite,
}


def run_suite(name: str, trunc: Optional[int] = None) -> Report:
    logger.info(f"running suite {name}")
    report = SUITES[name](trunc)
    logger.info(f"suite {name}: {report.summary}")
    return report


def run_suites(names: Sequence[str], trunc: Optional[int] = None, jobs: int = 1) -> List[Report]:
    """
    Run independent suites, at most ``jobs`` at a time.
    """
    return run_in_threads([lambda name=name: run_suite(name, trunc) for name in names], jobs)
