"""End-to-end reproduction scorecard against the checked-in reference tables.

Every check compares a computed object with its transcribed counterpart
and reports a named pass/fail row; nothing raises.  Two rows are expected
to fail on the present tables: the listed image basis in degree zero
(three of its four vectors lie in the transpose-convention image and one
lies in no candidate space) and two entries of the listed degree-1 basis
for affine-homology coefficients (their coboundaries are nonzero; the
sign-corrected variants validate).  The rows report those facts rather
than silently repairing the tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fp_linalg
from .bsigma import (
    b_map_analysis,
    bsigma_p3,
    bsigma_p3_from_psi,
    gamma_oracle_p3,
    prime_field_image,
    verify_bsigma,
)
from .cohomology import (
    annihilator,
    build_complex,
    h1u_module,
    h_groups,
    ideal_span,
    lambda1_module,
    validate_basis,
    wedge_module,
)
from .cyclotomic import verify_cyclotomic_identities
from .galois_kummer import KummerCoordinates, psi_from_kummer
from .group_ring import GroupRingElement, d_prime, dlog
from .homology import (
    RelativeClass,
    boundary_delta,
    h1U_basis,
    h1X_subquotient,
    stab_basis,
)
from .reference_tables import load_tables
from .scalars import GF27


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    flag: str = ""


def _pairs():
    return [(c0, c1) for c0 in range(3) for c1 in range(3)]


def _check_b_values(tables, out):
    out.append(
        CheckResult(
            "B at (1,0) equals the listed expansion",
            bsigma_p3(1, 0) == tables.b_sigma(),
        )
    )
    out.append(
        CheckResult(
            "B at (0,1) equals the listed expansion",
            bsigma_p3(0, 1) == tables.b_tau(),
        )
    )
    out.append(
        CheckResult(
            "B at (0,0) is the identity",
            bsigma_p3(0, 0) == GroupRingElement.one(3, 1),
        )
    )


def _check_structural_facts(out):
    reports = [verify_bsigma(bsigma_p3(c0, c1)) for c0, c1 in _pairs()]
    out.append(
        CheckResult(
            "structural facts hold for all nine coordinate pairs",
            all(r.all_pass for r in reports),
        )
    )


def _check_gamma_oracle(out):
    closed_ok = True
    sums_ok = True
    coset_ok = True
    one = GF27.one
    for c1 in range(3):
        for c2 in range(3):
            expected = bsigma_p3_from_psi(c1, c2)
            psi_elt = GroupRingElement.from_dict(
                3,
                0,
                {(1,): GF27.lift_int(c1), (2,): GF27.lift_int(c2)},
                ring=GF27,
            )
            for alpha, gamma in gamma_oracle_p3(c1, c2):
                if prime_field_image(d_prime(gamma)) != expected:
                    closed_ok = False
                total = GF27.zero
                for c in gamma.coeffs:
                    total = GF27.add(total, c)
                if total != one:
                    sums_ok = False
                diff = dlog(gamma).components[0] - psi_elt
                constant = GroupRingElement.from_dict(3, 0, {(0,): alpha}, ring=GF27)
                if diff != constant:
                    coset_ok = False
    out.append(CheckResult("every gamma preimage maps to the closed form", closed_ok))
    out.append(CheckResult("every gamma preimage has coefficient sum one", sums_ok))
    out.append(
        CheckResult(
            "dlog of every gamma preimage represents its class modulo the constant line",
            coset_ok,
        )
    )


def _check_b_map(out):
    report = b_map_analysis()
    out.append(CheckResult("B-map image has dimension 4", report.image_dim == 4))
    out.append(CheckResult("B-map kernel has dimension 5", report.kernel_dim == 5))
    out.append(
        CheckResult(
            "the five listed kernel relations hold", all(report.relations)
        )
    )
    out.append(
        CheckResult(
            "B-map image is the symmetric zero-lower-row-sum space",
            report.image_shape_matches,
        )
    )


def _check_homology(tables, out):
    ranks_ok = all(len(h1U_basis(n)) == (n - 1) ** 2 for n in range(3, 9))
    stab_ok = all(len(stab_basis(n)) == n - 1 for n in range(3, 9))
    proj_ok = all(h1X_subquotient(n).dim == (n - 1) * (n - 2) for n in range(3, 9))
    out.append(CheckResult("affine homology rank is (n-1)^2 for n=3..8", ranks_ok))
    out.append(CheckResult("stabilizer rank is n-1 for n=3..8", stab_ok))
    out.append(
        CheckResult("projective homology rank is (n-1)(n-2) for n=3..8", proj_ok)
    )
    boundary_ok = True
    for n in (3, 5, 7):
        rows = [
            boundary_delta(RelativeClass(GroupRingElement.monomial(n, 1, (i, j))))
            for i in range(n)
            for j in range(n)
        ]
        matrix = fp_linalg.FpMatrix.from_rows(
            n, [tuple(d.r.coeffs) + tuple(d.q.coeffs) for d in rows]
        )
        boundary_ok = boundary_ok and fp_linalg.rank(matrix) == 2 * n - 1
    out.append(CheckResult("boundary image rank is 2n-1 for n in {3,5,7}", boundary_ok))
    listed = [rc.vector() for rc in tables.v_classes()]
    mine = [rc.vector() for rc in h1U_basis(3)]
    out.append(
        CheckResult(
            "the n=3 kernel basis equals the four listed classes in order",
            listed == mine,
        )
    )
    generator = boundary_delta(RelativeClass(GroupRingElement.one(3, 1)))
    expected = (
        generator.r == GroupRingElement.one(3, 0)
        and generator.q == -GroupRingElement.one(3, 0)
    )
    out.append(CheckResult("boundary of the generator is (1, -1)", expected))


def _check_matrices(tables, out):
    mod = lambda1_module()
    ident = fp_linalg.FpMatrix.identity(3, 9)
    s = ident - mod.act_sigma
    t = ident - mod.act_tau
    out.append(CheckResult("matrix of 1 - B(1,0) equals the listed S", s == tables.s_matrix()))
    out.append(CheckResult("matrix of 1 - B(0,1) equals the listed T", t == tables.t_matrix()))
    all_ones = fp_linalg.FpMatrix.from_rows(3, [[1] * 9] * 9)
    norm_ok = (s @ s) == all_ones and (t @ t).is_zero()
    out.append(
        CheckResult("norm blocks: all-ones for sigma, zero for tau", norm_ok)
    )
    sub = h1u_module()
    ident4 = fp_linalg.FpMatrix.identity(3, 4)
    s1 = ident4 - sub.act_sigma
    t1 = ident4 - sub.act_tau
    u1 = (s1 @ s1)
    restricted_ok = (
        s1 == tables.s1_matrix() and t1.is_zero() and u1.is_zero()
    )
    out.append(
        CheckResult("restricted matrices: S1 matches, T1 = U1 = V1 = 0", restricted_ok)
    )
    out.append(
        CheckResult(
            "exterior square of S1 is the zero matrix",
            fp_linalg.exterior_square(tables.s1_matrix()).is_zero(),
        )
    )


def _check_cohomology_dims(out):
    groups = h_groups(lambda1_module())
    out.append(
        CheckResult(
            "group-ring coefficients: H1 = 9 and H2 = 13",
            (groups.h1.dim, groups.h2.dim) == (9, 13),
        )
    )
    groups = h_groups(h1u_module())
    out.append(
        CheckResult(
            "affine homology coefficients: H1 = 6 and H2 = 9",
            (groups.h1.dim, groups.h2.dim) == (6, 9),
        )
    )
    groups = h_groups(wedge_module())
    out.append(
        CheckResult(
            "wedge coefficients: H1 = 12 and H2 = 18",
            (groups.h1.dim, groups.h2.dim) == (12, 18),
        )
    )


def _check_listed_bases(tables, out):
    mod = lambda1_module()
    x, y, _ = build_complex(mod)
    kernel_vectors = tables.kernel_y_vectors()
    kernel_ok = len(kernel_vectors) == 13 and all(
        not any(y.apply_row(v)) for v in kernel_vectors
    )
    out.append(
        CheckResult(
            "listed degree-1 kernel basis: 13 vectors, all cocycles", kernel_ok
        )
    )

    image = fp_linalg.image_basis(x.transpose())
    image_pivots = fp_linalg.pivot_columns(image)
    listed_image = tables.image_x_vectors()
    in_image = [
        not any(fp_linalg.reduce_vector(3, v, image, image_pivots))
        for v in listed_image
    ]
    transpose_stack = fp_linalg.FpMatrix.from_rows(
        3, list(tables.s_matrix().entries) + list(tables.t_matrix().entries)
    )
    transpose_image = fp_linalg.image_basis(transpose_stack)
    transpose_pivots = fp_linalg.pivot_columns(transpose_image)
    in_transpose = [
        not any(fp_linalg.reduce_vector(3, v, transpose_image, transpose_pivots))
        for v in listed_image
    ]
    out.append(
        CheckResult(
            "listed image basis spans the computed image",
            all(in_image),
            detail=(
                f"membership in computed image: {in_image}; "
                f"membership in the transpose-convention image: {in_transpose}"
            ),
        )
    )

    misprint = tables.h1_lambda1_misprint()
    val = validate_basis(tables.h1_lambda1_vectors(), mod, 1)
    out.append(
        CheckResult(
            "listed degree-1 basis over the group ring validates",
            val.all_pass,
            flag=(
                f"entry {misprint['index'] + 1} printed as '{misprint['printed']}' "
                f"is read as '{misprint['reading']}'"
            ),
        )
    )
    val = validate_basis(tables.h2_lambda1_vectors(), mod, 2)
    out.append(
        CheckResult("listed degree-2 basis over the group ring validates", val.all_pass)
    )

    sub = h1u_module()
    val = validate_basis(tables.h1_h1u_vectors(), sub, 1)
    failing = [i + 1 for i, ok in enumerate(val.memberships) if not ok]
    corrected = [
        (0, 0, 0, 0, 0, 1, 0, 1),
        (0, 0, 0, 0, 0, 0, 1, 1),
    ]
    corrected_val = validate_basis(
        [v for v, ok in zip(tables.h1_h1u_vectors(), val.memberships) if ok]
        + corrected,
        sub,
        1,
    )
    out.append(
        CheckResult(
            "listed degree-1 basis over affine homology validates",
            val.all_pass,
            detail=(
                f"entries {failing} have nonzero coboundary; replacing the "
                f"differences by the sums v2+v4, v3+v4 yields a valid basis: "
                f"{corrected_val.all_pass}"
            ),
        )
    )
    val = validate_basis(tables.h2_h1u_vectors(), sub, 2)
    out.append(
        CheckResult("listed degree-2 basis over affine homology validates", val.all_pass)
    )


def _check_annihilators(out):
    one = GroupRingElement.one(3, 1)
    e = GroupRingElement.monomial(3, 1, (1, 0))
    f = GroupRingElement.monomial(3, 1, (0, 1))
    b_sigma = bsigma_p3(1, 0)
    b_tau = bsigma_p3(0, 1)
    dim_tau_norm = len(annihilator(one + b_tau + b_tau * b_tau))
    out.append(
        CheckResult("annihilator of the tau norm is everything", dim_tau_norm == 9)
    )
    dim_sigma_norm = len(annihilator(one + b_sigma + b_sigma * b_sigma))
    out.append(
        CheckResult(
            "annihilator of the sigma norm is the sum-zero hyperplane",
            dim_sigma_norm == 8,
        )
    )
    ann_s = annihilator(one - b_sigma)
    ideal_s = ideal_span([one + e + e * e, one + f + f * f])
    out.append(
        CheckResult(
            "annihilator of 1 - B(1,0) equals the ideal (1+e+e^2, 1+f+f^2) of dim 5",
            len(ann_s) == 5 and ann_s == ideal_s,
        )
    )
    ann_t = annihilator(one - b_tau)
    ideal_t = ideal_span([e - f, one + f + f * f])
    t_matrix = load_tables().t_matrix()
    ker_t = fp_linalg.kernel_basis(t_matrix.transpose())
    out.append(
        CheckResult(
            "annihilator of 1 - B(0,1) equals the ideal (e-f, 1+f+f^2) and ker T",
            ann_t == ideal_t and ann_t == ker_t,
            detail=f"common dimension {len(ann_t)}",
        )
    )


def _check_kummer(out):
    sigma = psi_from_kummer(KummerCoordinates(3, (1, 0)))
    tau = psi_from_kummer(KummerCoordinates(3, (0, 1)))
    out.append(
        CheckResult(
            "the generators map to (0,1) and (1,1)",
            sigma.entries == (0, 1) and tau.entries == (1, 1),
        )
    )


def _check_cyclotomic(out):
    ok = all(verify_cyclotomic_identities(p).all_pass for p in (3, 5, 7, 11, 13))
    out.append(
        CheckResult("multiplicative identities hold for p in {3,5,7,11,13}", ok)
    )


def run_reproduction() -> list[CheckResult]:
    """All reproduction checks in dependency order."""
    tables = load_tables()
    out: list[CheckResult] = []
    _check_b_values(tables, out)
    _check_structural_facts(out)
    _check_gamma_oracle(out)
    _check_b_map(out)
    _check_homology(tables, out)
    _check_matrices(tables, out)
    _check_cohomology_dims(out)
    _check_listed_bases(tables, out)
    _check_annihilators(out)
    _check_kummer(out)
    _check_cyclotomic(out)
    return out


def format_results(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name}"
        if r.flag:
            line += f"  [flagged: {r.flag}]"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
    total = len(results)
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{total} checks passed")
    return "\n".join(lines)
