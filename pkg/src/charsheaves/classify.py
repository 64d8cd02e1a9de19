"""Orbital complexes, character sheaves and the Fourier bijection between them.

Both sides split by the order ``m`` of the central character (the action of
Z/nZ).  For odd ``m`` a sheaf lives on a stratum ``(m, l, mu)`` and carries a
partition ``tau`` of ``l``; for ``m = 2k`` it lives on ``(k, n/2k, empty)``
and carries a bipartition ``rho`` of ``n/2k``.

Characters on the two sides are matched through the central character they
pull back to: an order-``m`` character of Z/dZ is identified with the angle
``j/m`` (``gcd(j, m) = 1``) it takes on the generator, and the Fourier map
keeps that angle.  Any generator-compatible convention gives a bijection;
this one is fixed so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .combinat import (
    Bipartition,
    CyclicCharacter,
    Partition,
    bipartitions_of,
    characters_of_order,
    divisors,
    partitions_of,
)
from .orbits import (
    PairContext,
    SignatureMismatch,
    SignedYoungDiagram,
    d_lambda,
    enumerate_orbits,
    is_richardson,
    pair_diagram,
    uniform_diagram,
)
from .strata import (
    DualStratumLabel,
    merged_diagram,
    pi1_data,
    strata_for_central_order,
)


@dataclass(frozen=True)
class OrbitalComplex:
    """IC sheaf of a nilpotent orbit with the local system given by ``character``."""

    orbit: SignedYoungDiagram
    character: CyclicCharacter

    def __post_init__(self) -> None:
        if self.orbit.is_empty:
            raise ValueError("orbital complex needs a nonempty diagram")
        d = d_lambda(self.orbit)
        if self.character.modulus != d:
            raise ValueError(
                f"character modulus {self.character.modulus} does not match d_lambda = {d}"
            )

    @property
    def central_order(self) -> int:
        return self.character.order

    @property
    def signature(self) -> tuple[int, int]:
        return self.orbit.signature


@dataclass(frozen=True)
class OddSheaf:
    """Sheaf on the stratum ``(m, l, mu)``, ``m`` odd, labelled by ``tau`` in P(l)."""

    stratum: DualStratumLabel
    tau: Partition
    psi: CyclicCharacter

    kind = "odd"

    def __post_init__(self) -> None:
        m = self.stratum.m
        if m % 2 == 0:
            raise ValueError(f"odd-type sheaf needs odd m, got {m}")
        if self.tau.size != self.stratum.l:
            raise ValueError(f"|tau| = {self.tau.size} but l = {self.stratum.l}")
        modulus = pi1_data(self.stratum).cyclic_modulus
        if self.psi.modulus != modulus:
            raise ValueError(f"psi must live on Z/{modulus}Z, got modulus {self.psi.modulus}")
        if self.psi.order != m:
            raise ValueError(f"psi must have order {m}, got {self.psi.order}")

    @property
    def central_order(self) -> int:
        return self.stratum.m

    @property
    def l(self) -> int:
        return self.stratum.l

    @property
    def is_nilpotent_support(self) -> bool:
        return self.stratum.l == 0


@dataclass(frozen=True)
class EvenSheaf:
    """Sheaf on ``(k, n/2k, empty)`` with central order ``2k``, labelled by ``rho`` in P_2(l)."""

    stratum: DualStratumLabel
    rho: Bipartition
    psi: CyclicCharacter

    kind = "even"

    def __post_init__(self) -> None:
        k = self.stratum.m
        if not self.stratum.mu.is_empty:
            raise ValueError("even-type sheaves live on strata with empty mu")
        if self.rho.size != self.stratum.l:
            raise ValueError(f"|rho| = {self.rho.size} but l = {self.stratum.l}")
        if self.psi.modulus != 2 * k or self.psi.order != 2 * k:
            raise ValueError(f"psi must be a primitive character of Z/{2 * k}Z, got {self.psi}")

    @property
    def central_order(self) -> int:
        return 2 * self.stratum.m

    @property
    def k(self) -> int:
        return self.stratum.m

    @property
    def l(self) -> int:
        return self.stratum.l

    @property
    def is_nilpotent_support(self) -> bool:
        return False


CharacterSheaf = Union[OddSheaf, EvenSheaf]


@dataclass(frozen=True)
class LeviDatum:
    """Combinatorial shadow of a theta-stable Levi and the source data induced from it.

    ``block_sizes[a] == m * l_sequence[a]``; ``theta_blocks[a]`` is the
    (plus, minus) split of that block; ``source_orbits[a]`` is the diagram
    (orbit or, for strata, the orbit naming the stratum) on that factor.
    ``signs`` is filled only for the Richardson-orbit construction, where it
    alternates.
    """

    m: int
    target: SignedYoungDiagram
    block_sizes: tuple[int, ...]
    theta_blocks: tuple[tuple[int, int], ...]
    source_orbits: tuple[SignedYoungDiagram, ...]
    l_sequence: tuple[int, ...]
    signs: tuple[str, ...] = ()
    construction: str = field(default="richardson")

    @property
    def is_whole_group(self) -> bool:
        return len(self.block_sizes) == 1


class NotApplicable(ValueError):
    """Input outside the domain of a construction."""


# --- the two sides of the classification ---------------------------------


def orbital_complexes(ctx: PairContext, m: int) -> list[OrbitalComplex]:
    """All (orbit, character) pairs whose character has order ``m``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    out = []
    for lam in enumerate_orbits(ctx):
        for chi in characters_of_order(d_lambda(lam), m):
            out.append(OrbitalComplex(lam, chi))
    return out


def all_orbital_complexes(ctx: PairContext) -> list[OrbitalComplex]:
    return [c for m in divisors(ctx.n) for c in orbital_complexes(ctx, m)]


def character_sheaves(ctx: PairContext, m: int) -> list[CharacterSheaf]:
    """Character sheaves whose central character has order ``m``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    out: list[CharacterSheaf] = []
    if m % 2:
        for stratum in strata_for_central_order(ctx, m):
            modulus = pi1_data(stratum).cyclic_modulus
            psis = characters_of_order(modulus, m)
            for tau in partitions_of(stratum.l):
                for psi in psis:
                    out.append(OddSheaf(stratum, tau, psi))
    else:
        for stratum in strata_for_central_order(ctx, m):
            psis = characters_of_order(m, m)
            for rho in bipartitions_of(stratum.l):
                for psi in psis:
                    out.append(EvenSheaf(stratum, rho, psi))
    return out


def all_character_sheaves(ctx: PairContext) -> list[CharacterSheaf]:
    return [s for m in divisors(ctx.n) for s in character_sheaves(ctx, m)]


def nilpotent_support_sheaves(ctx: PairContext) -> list[OrbitalComplex]:
    """Pairs (Richardson orbit, character of odd order)."""
    out = []
    for lam in enumerate_orbits(ctx):
        if not is_richardson(lam):
            continue
        d = d_lambda(lam)
        for m in divisors(d):
            if m % 2:
                out.extend(OrbitalComplex(lam, chi) for chi in characters_of_order(d, m))
    return out


# --- the bijection ---------------------------------------------------------


def fourier_forward(c: OrbitalComplex) -> CharacterSheaf:
    """Sheaf label of the Fourier transform of an orbital complex."""
    m = c.central_order
    lam = c.orbit
    if any(L % m for L in lam.lengths):
        raise NotApplicable(f"order {m} does not divide every row length of {lam}")
    if m % 2:
        tau_mults: dict[int, int] = {}
        rest: dict[int, tuple[int, int]] = {}
        l = 0
        for L, a, b in lam.blocks:
            d = L // m
            paired = min(a, b)
            if paired:
                tau_mults[d] = paired
            l += d * paired
            rest[L] = (a - paired, b - paired)
        mu = SignedYoungDiagram.from_multiplicities(rest)
        stratum = DualStratumLabel(m, l, mu)
        psi = CyclicCharacter.from_angle(c.character.angle, pi1_data(stratum).cyclic_modulus)
        return OddSheaf(stratum, Partition.from_multiplicities(tau_mults), psi)
    k = m // 2
    plus = {L // m: a for L, a, _ in lam.blocks if a}
    minus = {L // m: b for L, _, b in lam.blocks if b}
    rho = Bipartition(Partition.from_multiplicities(plus), Partition.from_multiplicities(minus))
    stratum = DualStratumLabel(k, lam.n // m)
    psi = CyclicCharacter.from_angle(c.character.angle, m)
    return EvenSheaf(stratum, rho, psi)


def fourier_inverse(s: CharacterSheaf, ctx: PairContext) -> OrbitalComplex:
    """The orbital complex whose Fourier transform carries the label ``s``."""
    if isinstance(s, OddSheaf):
        m = s.stratum.m
        lam = s.stratum.mu
        for t, count in s.tau.multiplicities().items():
            lam = lam.union(pair_diagram(m * t, count))
    else:
        m = 2 * s.k
        rows = [(m * a, "+") for a in s.rho.first] + [(m * b, "-") for b in s.rho.second]
        lam = SignedYoungDiagram.from_rows(rows)
    if lam.signature != (ctx.p, ctx.q):
        raise SignatureMismatch(f"label {s} does not belong to the pair {ctx}")
    return OrbitalComplex(lam, CyclicCharacter.from_angle(s.psi.angle, d_lambda(lam)))


# --- cuspidal sheaves ----------------------------------------------------


def cuspidal_sheaves(ctx: PairContext) -> list[CharacterSheaf]:
    """Cuspidal character sheaves, which exist only for |p - q| <= 1.

    For |p - q| = 1 they are the nilpotent-support sheaves on the regular
    orbit ``n_eps`` (``eps`` the sign of p - q) with primitive characters.
    For p = q they live on the stratum ``(n/2, 1, empty)``: all even-type
    labels of central order n, plus the odd-type ones of order n/2 when n/2
    is odd.
    """
    p, q, n = ctx.p, ctx.q, ctx.n
    out: list[CharacterSheaf] = []
    if abs(p - q) == 1:
        regular = uniform_diagram(n, 1, "+" if p > q else "-")
        stratum = DualStratumLabel(n, 0, regular)
        for psi in characters_of_order(n, n):
            out.append(OddSheaf(stratum, Partition(()), psi))
    elif p == q:
        half = n // 2
        stratum = DualStratumLabel(half, 1)
        for rho in bipartitions_of(1):
            for psi in characters_of_order(n, n):
                out.append(EvenSheaf(stratum, rho, psi))
        if half % 2:
            for tau in partitions_of(1):
                for psi in characters_of_order(n, half):
                    out.append(OddSheaf(stratum, tau, psi))
    return out


def is_cuspidal(s: CharacterSheaf, ctx: PairContext) -> bool:
    return s in set(cuspidal_sheaves(ctx))


# --- Levi data -------------------------------------------------------------


def levi_for_nilpotent_support(lam: SignedYoungDiagram, m: int) -> LeviDatum:
    """Theta-stable Levi and source orbit from which IC(O_lam, E) of central order ``m`` is induced.

    ``lam`` must be Richardson with every row length divisible by the odd
    number ``m``.  Rows are scaled down by ``m``; ``l_1 < ... < l_j0 = s``
    are the ends of the constant-sign runs of rows, followed by the
    conjugate of what remains after removing the conjugate of
    ``(l_j0, ..., l_1)``.  Signs alternate starting from the sign of the
    longest row.
    """
    if m < 1 or m % 2 == 0:
        raise NotApplicable(f"m must be a positive odd integer, got {m}")
    if lam.is_empty:
        raise NotApplicable("empty diagram")
    if not is_richardson(lam):
        raise NotApplicable(f"{lam} has a row length carrying both signs")
    if any(L % m for L in lam.lengths):
        raise NotApplicable(f"{m} does not divide every row length of {lam}")

    rows = [(L // m, sign) for L, sign in lam.rows()]
    s = len(rows)
    run_ends = [i + 1 for i in range(s) if i + 1 == s or rows[i][1] != rows[i + 1][1]]
    j0 = len(run_ends)
    # conjugate of (l_j0 >= ... >= l_1): row i lies in run r and gets j0 - r
    first_part = []
    run = 0
    for i in range(s):
        while i + 1 > run_ends[run]:
            run += 1
        first_part.append(j0 - run)
    remainder = [rows[i][0] - first_part[i] for i in range(s)]
    remainder = [x for x in remainder if x > 0]
    tail = [sum(1 for x in remainder if x > j) for j in range(remainder[0])] if remainder else []
    l_seq = tuple(run_ends + tail)
    assert len(l_seq) == rows[0][0]

    signs = [rows[0][1]]
    for _ in range(len(l_seq) - 1):
        signs.append("-" if signs[-1] == "+" else "+")
    k = (m - 1) // 2
    theta = tuple(
        ((k + (sg == "+")) * la, (k + (sg == "-")) * la) for la, sg in zip(l_seq, signs)
    )
    return LeviDatum(
        m=m,
        target=lam,
        block_sizes=tuple(m * la for la in l_seq),
        theta_blocks=theta,
        source_orbits=tuple(uniform_diagram(m, la, sg) for la, sg in zip(l_seq, signs)),
        l_sequence=l_seq,
        signs=tuple(signs),
    )


def _theta_split(m: int, count: int, sign: str) -> tuple[int, int]:
    k = (m - 1) // 2
    return ((k + (sign == "+")) * count, (k + (sign == "-")) * count)


def induction_datum_for_sheaf(s: CharacterSheaf, ctx: PairContext) -> LeviDatum | None:
    """Levi datum from which the sheaf ``s`` is parabolically induced; ``None`` if cuspidal.

    * ``mu`` empty, ``l > 1``: ``l`` blocks of size ``2m``, each split (m, m).
    * odd type, ``l > 0``, ``mu`` nonempty: blocks ``2ml`` and ``n - 2ml``.
    * odd type, ``l = 0``: the Richardson construction on ``mu``.  When it
      returns the whole group and ``mu`` has ``s >= 2`` rows, the orbit
      ``m^s`` is instead split as ``m x m^(s-1)``; central character order
      ``m`` then forces the induced complex onto orbits of that type.
    * ``mu`` empty, ``l = 1``, and ``l = 0`` with ``mu`` a single row:
      cuspidal.
    """
    stratum = s.stratum
    m, l, mu = stratum.m, stratum.l, stratum.mu
    target = merged_diagram(stratum)
    if target.signature != (ctx.p, ctx.q):
        raise SignatureMismatch(f"label {s} does not belong to the pair {ctx}")
    if mu.is_empty:
        if l == 1:
            return None
        return LeviDatum(
            m=m,
            target=target,
            block_sizes=(2 * m,) * l,
            theta_blocks=((m, m),) * l,
            source_orbits=(pair_diagram(m, 1),) * l,
            l_sequence=(2,) * l,
            construction="split-strata",
        )
    if l > 0:
        return LeviDatum(
            m=m,
            target=target,
            block_sizes=(2 * m * l, ctx.n - 2 * m * l),
            theta_blocks=((m * l, m * l), (ctx.p - m * l, ctx.q - m * l)),
            source_orbits=(pair_diagram(m, l), mu),
            l_sequence=(2 * l, mu.n // m),
            construction="stratum-times-orbit",
        )
    datum = levi_for_nilpotent_support(mu, m)
    if not datum.is_whole_group:
        return datum
    rows = mu.rows()
    if len(rows) == 1:
        return None
    sign = rows[0][1]
    rest = len(rows) - 1
    return LeviDatum(
        m=m,
        target=target,
        block_sizes=(m, m * rest),
        theta_blocks=(_theta_split(m, 1, sign), _theta_split(m, rest, sign)),
        source_orbits=(uniform_diagram(m, 1, sign), uniform_diagram(m, rest, sign)),
        l_sequence=(1, rest),
        construction="central-character",
    )


def sheaf_flags(s: CharacterSheaf, ctx: PairContext) -> dict[str, bool]:
    return {"cuspidal": is_cuspidal(s, ctx), "nilpotent_support": s.is_nilpotent_support}

