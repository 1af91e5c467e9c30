"""Self-orthogonal codes from designs, orbit matrices, and fixed splits.

Every construction here has the same shape: take an integer matrix attached
to a 1-design (the incidence matrix, an orbit matrix under an automorphism
group, or the fixed/moving corners of one), choose a field, and border it
with a scalar identity block on the left and/or a scalar all-ones column on
the right. Which borders appear, and with which scalars, is dispatched from
the residues (a, d) of the intersection profile -- and, for orbit matrices,
from the common orbit length w.

Over GF(q) the border scalars are square roots of prime-subfield residues;
when a needed residue is not a square the construction settles in GF(q^2)
instead, and the report says which scalar forced the move. Characteristic 2
never extends, since squaring is a bijection there.

Reports are hard-checked on the way out: the generator's gram matrix must
vanish, identity-bordered generators must have full row rank, and claimed
self-dualities must actually hold. Those are consequences of the theorems,
so a failure raises ArithmeticError rather than returning a bad code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import LinearCode, display, is_self_dual
from .designs import Design, intersection_profile, validate
from .fields import Field, field_for_order
from .groups import PermGroup
from .matrices import GFMatrix, bordered
from .orbitmat import BadOrbitProfile, build, fixed_split


class NotWSO(ValueError):
    """Binary construction on a design whose intersections have mixed parity."""


class NonConstantProfile(ValueError):
    """GF(q) construction on a design whose intersections vary mod p."""


class CaseMismatch(ValueError):
    """The theorem named by the caller is not the one the profile selects."""


@dataclass(frozen=True)
class ConstructionReport:
    """One constructed code plus the context needed to audit it.

    c_left / c_right are element codes of the scalars placed on the identity
    border and the all-ones border, None when the recipe has no such border.
    self_dual records the computed fact, not the theorem's claim.
    extension_reason says why the field grew to GF(q^2), or is None.
    """

    source: str
    theorem: str
    field: Field
    c_left: int | None
    c_right: int | None
    code: LinearCode
    self_dual: bool
    extension_reason: str | None

    def to_text(self) -> str:
        def scal(c):
            return "-" if c is None else str(c)

        head = [
            f"theorem {self.theorem}",
            f"field {self.field.q}",
            f"scalars {scal(self.c_left)} {scal(self.c_right)}",
            f"code {display(self.code)}",
        ]
        return "\n".join(head) + "\n" + self.code.generator.to_text()


def _settle_field(q: int, needed) -> tuple[Field, str | None]:
    """GF(q) if every needed residue is a square there, else GF(q^2).

    needed: (label, residue) pairs. In characteristic 2 the base field
    always suffices.
    """
    F = field_for_order(q)
    if F.p != 2 and needed:
        bad = [lab for lab, r in needed if not F.is_square(F.from_int(r))]
        if bad:
            ext, _ = F.extend_quadratic()
            return ext, ", ".join(bad) + f" not square in GF({q})"
    return F, None


def _finish(source: str, tag: str, F: Field, left_res, right_res, base,
            sd_claim: bool, reason, forced) -> ConstructionReport:
    """Border, check, and wrap one generator matrix.

    left_res / right_res are prime-subfield residues (None = no border);
    their square roots in F become the placed scalars. The gram, rank, and
    self-duality checks are theorem consequences, so failing them means a
    bug, not bad input.
    """
    if forced is not None and forced != tag:
        raise CaseMismatch(f"profile dispatches to {tag}, not {forced}")
    c_left = None if left_res is None else int(F.sqrt(F.from_int(left_res)))
    c_right = None if right_res is None else int(F.sqrt(F.from_int(right_res)))
    gen = bordered(GFMatrix.from_int(F, base), left=c_left, right=c_right)
    if not gen.gram().is_zero():
        raise ArithmeticError(f"{tag}: generator rows are not self-orthogonal")
    code = LinearCode(gen)
    if c_left is not None and code.k != gen.rows:
        raise ArithmeticError(f"{tag}: identity-bordered generator lost rank")
    sd = is_self_dual(code)
    if sd_claim and not sd:
        raise ArithmeticError(f"{tag}: claimed self-duality does not hold")
    return ConstructionReport(source, tag, F, c_left, c_right, code, sd, reason)


# ---------------------------------------------------------------- incidence


def from_incidence_binary(D: Design,
                          theorem: str | None = None) -> ConstructionReport:
    """Code of the incidence matrix over GF(2), bordered by parity case:
    (a,d) = (0,0) -> M; (0,1) -> [I_b, M, 1]; (1,0) -> [I_b, M];
    (1,1) -> [M, 1]."""
    validate(D)
    prof = intersection_profile(D, 2)
    if not prof.constant:
        raise NotWSO("pairwise intersection sizes have mixed parity")
    case = prof.dispatch_case()
    left = 1 if case in (2, 3) else None
    right = 1 if case in (2, 4) else None
    src = f"1-({D.v},{D.k},{D.r}) design, {D.b} blocks"
    return _finish(src, f"T2.1.{case}", field_for_order(2), left, right,
                   D.incidence_array(), False, None, theorem)


def from_incidence_q(D: Design, q: int,
                     theorem: str | None = None) -> ConstructionReport:
    """Bordered incidence code over GF(q), or GF(q^2) when a needed square
    root is missing, dispatched on the residues (a, d) mod p."""
    validate(D)
    p = field_for_order(q).p
    prof = intersection_profile(D, p)
    if not prof.constant:
        raise NonConstantProfile(f"intersection sizes vary mod {p}")
    a, d = prof.a, prof.d
    sd = False
    if a == 0 and d == 0:
        tag, left, right, need = "T2.2.1", None, None, []
    elif a == 0:
        tag, left, right = "T2.2.2", d, (-d) % p
        need = [("d", d), ("-d", -d)]
    elif d == 0:
        tag, left, right = "T2.2.3", (-a) % p, None
        need, sd = [("-a", -a)], D.b == D.v
    elif a == d:
        tag, left, right = "T2.2.4a", None, (-a) % p
        need = [("-a", -a)]
    else:
        tag, left, right = "T2.2.4b", (d - a) % p, (-d) % p
        need = [("d-a", d - a), ("-d", -d)]
    F, reason = _settle_field(q, need)
    src = f"1-({D.v},{D.k},{D.r}) design, {D.b} blocks"
    return _finish(src, tag, F, left, right, D.incidence_array(), sd,
                   reason, theorem)


# ------------------------------------------------------------ orbit matrices


def _val2(n: int) -> int:
    return (n & -n).bit_length() - 1


def _om_profile_binary(point_sizes, block_sizes) -> tuple[int, int, int]:
    """Common point-orbit length w = 2^u w' and the uniform 2-adic valuation
    o of the block-orbit lengths; the binary theorems need o <= u."""
    ws = {int(s) for s in point_sizes}
    if len(ws) != 1:
        raise BadOrbitProfile(f"point orbit lengths {sorted(ws)} differ")
    w = ws.pop()
    u = _val2(w)
    os_ = {_val2(int(s)) for s in block_sizes}
    if len(os_) != 1:
        raise BadOrbitProfile("block orbit lengths have mixed 2-adic valuation")
    o = os_.pop()
    if o > u:
        raise BadOrbitProfile(f"block valuation {o} exceeds point valuation {u}")
    return w, o, u


def _branch_binary_om(case: int, o: int, u: int):
    """Tag, border flags (1 = unit scalar), and self-dual claim template for
    the binary orbit-matrix theorems. The claim applies only when m = n."""
    if case == 1:
        return "T3.1.bin", None, None, False
    if case == 2:
        if o == u == 0:
            return "T3.2.bina", 1, 1, False
        if o == u:
            return "T3.2.binb", 1, None, True
        return "T3.2.binc", None, None, False
    if case == 3:
        if o == u:
            return "T3.3.bina", 1, None, True
        return "T3.3.binb", None, None, False
    if o == u == 0:
        return "T3.4.bina", None, 1, False
    return "T3.4.binb", None, None, False


def from_orbitmatrix_binary(D: Design, H: PermGroup,
                            theorem: str | None = None) -> ConstructionReport:
    """Code of the orbit matrix over GF(2). Point orbits must share one
    length w = 2^u w'; block orbit lengths must share one 2-adic valuation
    o <= u. The (case, o, u) combination picks the border."""
    validate(D)
    prof = intersection_profile(D, 2)
    if not prof.constant:
        raise NotWSO("pairwise intersection sizes have mixed parity")
    OM = build(D, H)
    w, o, u = _om_profile_binary(OM.point_orbit_sizes, OM.block_orbit_sizes)
    tag, left, right, claim = _branch_binary_om(prof.dispatch_case(), o, u)
    src = (f"1-({D.v},{D.k},{D.r}) design, orbit matrix {OM.m}x{OM.n}, w={w}")
    return _finish(src, tag, field_for_order(2), left, right, OM.entries,
                   claim and OM.m == OM.n, None, theorem)


def _om_profile_q(point_sizes, block_sizes) -> int:
    """The single orbit length w shared by every point and block orbit."""
    sizes = {int(s) for s in point_sizes} | {int(s) for s in block_sizes}
    if len(sizes) != 1:
        raise BadOrbitProfile(f"orbit lengths {sorted(sizes)} are not uniform")
    return sizes.pop()


def _branch_q_om(a: int, d: int, w: int, p: int):
    """Tag, border residues, and self-dual claim template for the GF(q)
    orbit-matrix theorems. Residues are mod-p integers; the caller takes
    square roots. The claim applies only when m = n."""
    a %= p
    d %= p
    wr = w % p
    if a == 0 and d == 0:
        return "T3.1.q", None, None, False
    if a == 0:
        if wr == 0:
            return "T3.2.qa", d, None, True
        if wr == 1:
            return "T3.2.qb", (w * d) % p, (-w * d) % p, False
        return "T3.2.qc", d, (-w * d) % p, False
    if d == 0:
        return "T3.3.q", (-a) % p, None, True
    if a == d:
        if wr == 0:
            return "T3.4.q", None, None, False
        return "T3.4.q", None, (-w * d) % p, False
    if wr == 0:
        return "T3.4.q", (d - a) % p, None, True
    if wr == 1:
        return "T3.4.q", (w * d - a) % p, (-w * d) % p, False
    return "T3.4.q", (d - a) % p, (-w * d) % p, False


def _qom_labels(a: int, d: int, w: int, p: int, tag: str):
    # names of the left/right scalars, for extension_reason text only
    if tag == "T3.2.qa":
        return "d", None
    if tag == "T3.2.qb":
        return "wd", "-wd"
    if tag == "T3.2.qc":
        return "d", "-wd"
    if tag == "T3.3.q":
        return "-a", None
    if tag == "T3.4.q":
        left = None if a % p == d % p else ("wd-a" if w % p == 1 else "d-a")
        right = None if w % p == 0 else "-wd"
        return left, right
    return None, None


def from_orbitmatrix_q(D: Design, H: PermGroup, q: int,
                       theorem: str | None = None) -> ConstructionReport:
    """Bordered orbit-matrix code over GF(q)/GF(q^2); every point and block
    orbit must share one length w, and the branch depends on (a, d) and
    w mod p."""
    validate(D)
    p = field_for_order(q).p
    prof = intersection_profile(D, p)
    if not prof.constant:
        raise NonConstantProfile(f"intersection sizes vary mod {p}")
    OM = build(D, H)
    w = _om_profile_q(OM.point_orbit_sizes, OM.block_orbit_sizes)
    tag, left, right, claim = _branch_q_om(prof.a, prof.d, w, p)
    llab, rlab = _qom_labels(prof.a, prof.d, w, p, tag)
    need = [(lab, res) for lab, res in ((llab, left), (rlab, right))
            if res is not None]
    F, reason = _settle_field(q, need)
    src = f"1-({D.v},{D.k},{D.r}) design, orbit matrix {OM.m}x{OM.n}, w={w}"
    return _finish(src, tag, F, left, right, OM.entries,
                   claim and OM.m == OM.n, reason, theorem)


# -------------------------------------------------------------- fixed splits


def from_fixed_split_binary(D: Design, H: PermGroup,
                            theorem: str | None = None):
    """Two codes from the fixed/moving split of an orbit matrix under a
    subgroup with orbit lengths {1, 2}: one on the f1 fixed points from OM1,
    one on the n moving point orbits from OM2."""
    validate(D)
    prof = intersection_profile(D, 2)
    if not prof.constant:
        raise NotWSO("pairwise intersection sizes have mixed parity")
    fs = fixed_split(D, H, 2, 1)
    case = prof.dispatch_case()
    tag = f"T3.{case}.fix"
    if case == 1:
        parts = (None, None, False), (None, None, False)
    elif case == 2:
        parts = (1, 1, False), (1, None, fs.m == fs.n)
    elif case == 3:
        parts = (1, None, False), (1, None, fs.m == fs.n)
    else:
        parts = (None, 1, False), (None, None, False)
    (l1, r1, s1), (l2, r2, s2) = parts
    F = field_for_order(2)
    base = f"1-({D.v},{D.k},{D.r}) design, fixed split"
    rep1 = _finish(f"{base}, OM1 {fs.f2}x{fs.f1}", tag, F, l1, r1, fs.om1,
                   s1, None, theorem)
    rep2 = _finish(f"{base}, OM2 {fs.m}x{fs.n}", tag, F, l2, r2, fs.om2,
                   s2, None, theorem)
    return rep1, rep2


def from_fixed_split_q(D: Design, H: PermGroup, q: int, alpha: int,
                       theorem: str | None = None):
    """Fixed/moving split over GF(q) for orbit lengths {1, p^alpha}.

    OM1 takes the incidence-style borders of its case; OM2 is plain when
    a = d and [sqrt(d-a) I_m, OM2] otherwise. The two reports settle their
    fields independently: each extends to GF(q^2) only for its own scalars.
    """
    validate(D)
    F0 = field_for_order(q)
    p = F0.p
    if not 1 <= alpha <= F0.l:
        raise ValueError(f"alpha must lie in 1..{F0.l} for GF({q})")
    prof = intersection_profile(D, p)
    if not prof.constant:
        raise NonConstantProfile(f"intersection sizes vary mod {p}")
    fs = fixed_split(D, H, p, alpha)
    a, d = prof.a, prof.d
    case = prof.dispatch_case()
    tag = f"T3.{case}.fix.q"
    if case == 1:
        l1, r1, need1 = None, None, []
    elif case == 2:
        l1, r1, need1 = d, (-d) % p, [("d", d), ("-d", -d)]
    elif case == 3:
        l1, r1, need1 = (-a) % p, None, [("-a", -a)]
    elif a == d:
        l1, r1, need1 = None, (-a) % p, [("-a", -a)]
    else:
        l1, r1, need1 = (d - a) % p, (-d) % p, [("d-a", d - a), ("-d", -d)]
    if a == d:
        l2, need2, s2 = None, [], False
    else:
        lab2 = "d" if a == 0 else "d-a"
        l2, need2, s2 = (d - a) % p, [(lab2, d - a)], fs.m == fs.n
    F1, reason1 = _settle_field(q, need1)
    F2, reason2 = _settle_field(q, need2)
    base = f"1-({D.v},{D.k},{D.r}) design, fixed split"
    rep1 = _finish(f"{base}, OM1 {fs.f2}x{fs.f1}", tag, F1, l1, r1, fs.om1,
                   False, reason1, theorem)
    rep2 = _finish(f"{base}, OM2 {fs.m}x{fs.n}", tag, F2, l2, None, fs.om2,
                   s2, reason2, theorem)
    return rep1, rep2
