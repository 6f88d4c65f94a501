"""Normal forms and decision procedures for the two-generator wrapper group.

The construction stacks two shift extensions over the base group H.  On the
inner integer line, b^(i) is the step function taking the value a^(i) at
every positive shift power and 1 elsewhere; together with the shift z these
generate the middle group, and the commutators [z, b^(i)] (supported only at
the origin) generate an embedded copy of H.  On the outer line, c is the
function with c(1) = z and c(2^i) = b^(i), and together with the shift s it
generates the two-generator group.  The embedding phi sends a^(i) to the
commutator of c with its conjugate shifted by 2^i - 1; that word's function
part is supported only at the point 1, which is what makes membership and
preimage extraction work.

Conjugation convention throughout: x^y = y x y^{-1}, so s^a c^b = (c^{s^a})^b s^a.

Triviality of a {c,s} word reduces to base-group oracle queries in three
steps: collect the c-blocks into shift-conjugated powers (prefix sums of
s-exponents), evaluate that product's function part at each outer point mu
in a finite window, and decide each resulting middle-group word by evaluating
its own function part on a finite inner window of points nu.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracles import Oracle
from .words import CSWord, HWord, encode_hword


@dataclass(frozen=True)
class ConjugateNormalForm:
    """Product of s-conjugated c-powers followed by a trailing s-power.

    factors[j] = (gamma_j, beta_j): gamma_j is the net s-shift accumulated in
    front of the j-th c-block, beta_j its exponent; gamma is the total
    s-exponent.  gamma0 bounds the window of outer points worth checking.
    """

    factors: tuple[tuple[int, int], ...]
    gamma: int

    @property
    def gamma0(self) -> int:
        return max((abs(g) for g, _ in self.factors), default=0)


def conjugate_normal_form(w: CSWord) -> ConjugateNormalForm:
    factors = []
    shift = 0
    for alpha, beta in zip(w.alphas, w.betas):
        shift += alpha
        factors.append((shift, beta))
    return ConjugateNormalForm(tuple(factors), shift + w.alphas[-1])


def class_sums(nf: ConjugateNormalForm) -> dict[int, int]:
    """Net c-exponent of each shift class, keyed and ordered by shift value.

    Every class sum must vanish for the word to be trivial, and this test is
    not subsumed by the section scan: for a bare c-power the window is just
    {0} and every section there is empty.
    """
    sums: dict[int, int] = {}
    for gamma_j, beta_j in nf.factors:
        sums[gamma_j] = sums.get(gamma_j, 0) + beta_j
    return dict(sorted(sums.items()))


def evaluate_section(nf: ConjugateNormalForm, mu: int) -> list[tuple]:
    """Function part of the c-factor product, evaluated at outer point mu.

    Returns a raw middle-group word: items ("z", exponent) and
    ("b", index, exponent) in factor order.  A factor lands on the support of
    c only when gamma_j + mu is 1 (giving a z-power) or a power of 2 with
    positive exponent x (giving a power of b^(x)); anything else contributes
    nothing.
    """
    out = []
    for gamma_j, beta_j in nf.factors:
        v = gamma_j + mu
        if v == 1:
            out.append(("z", beta_j))
        elif v >= 2 and v & (v - 1) == 0:
            out.append(("b", v.bit_length() - 1, beta_j))
    return out


@dataclass(frozen=True)
class KNormalForm:
    """Middle-group word as shift-conjugated b-powers and a trailing z-power.

    factors[j] = (index_j, eta_j, xi_j) with eta_j the net z-shift in front
    of the j-th b-power; eta is the total z-exponent.
    """

    factors: tuple[tuple[int, int, int], ...]
    eta: int

    @property
    def eta0(self) -> int:
        return max((abs(e) for _, e, _ in self.factors), default=0)


def k_normal_form(raw: list[tuple]) -> KNormalForm:
    factors = []
    shift = 0
    for item in raw:
        if item[0] == "z":
            shift += item[1]
        else:
            _, index, xi = item
            factors.append((index, shift, xi))
    return KNormalForm(tuple(factors), shift)


def k_evaluate_at(kf: KNormalForm, nu: int) -> HWord:
    """Value of the function part at inner point nu, as an unreduced word.

    A b-power conjugated by z^eta_j contributes (a^(i_j))^{xi_j} exactly when
    eta_j + nu > 0.  No free reduction is applied; equality of the results is
    always judged by the oracle.
    """
    letters = [(index, xi) for index, eta_j, xi in kf.factors if eta_j + nu > 0]
    return HWord(tuple(letters))


def k_is_trivial(kf: KNormalForm, oracle: Oracle) -> bool:
    """Middle-group triviality via oracle queries on a window of inner points.

    Requires eta = 0 plus a trivial value at every |nu| <= eta0 + 1.  The +1
    is load-bearing: a factor with front shift eta_j switches on at
    nu = 1 - eta_j, so a single unconjugated b-power has eta0 = 0 and value 1
    at nu = 0 yet is nontrivial at nu = 1.  Beyond eta0 + 1 the value is
    constant, and below -eta0 it is empty.
    """
    if kf.eta != 0:
        return False
    if not kf.factors:
        return True
    reach = kf.eta0 + 1
    for nu in range(-reach, reach + 1):
        value = k_evaluate_at(kf, nu)
        if value.letters and not oracle.is_trivial(encode_hword(value)):
            return False
    return True


def g_is_trivial(w: CSWord, oracle: Oracle) -> bool:
    """Word problem for the two-generator group, reduced to the oracle.

    Trivial iff the total s-exponent is zero, every shift-class sum is zero,
    and the section at every outer point |mu| <= 3*gamma0 is trivial in the
    middle group.  Sections further out vanish automatically once the class
    sums do: two distinct shift classes can only hit the support of c at a
    common point when that point is within 3*gamma0.
    """
    nf = conjugate_normal_form(w)
    if nf.gamma != 0:
        return False
    if any(total != 0 for total in class_sums(nf).values()):
        return False
    reach = 3 * nf.gamma0
    for mu in range(-reach, reach + 1):
        if not k_is_trivial(k_normal_form(evaluate_section(nf, mu)), oracle):
            return False
    return True


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    value: HWord | None = None


def membership(w: CSWord, oracle: Oracle) -> MembershipResult:
    """Decide whether w lies in the embedded copy of H; extract the preimage.

    Membership needs the same zero conditions as triviality, sections away
    from the outer point 1 all trivial, and the section at 1 supported only
    at the inner origin: zero z-exponent and trivial values at every nonzero
    |nu| <= eta0 + 1.  The preimage is that section's value at nu = 0.
    """
    nf = conjugate_normal_form(w)
    if nf.gamma != 0:
        return MembershipResult(False)
    if any(total != 0 for total in class_sums(nf).values()):
        return MembershipResult(False)
    reach = 3 * nf.gamma0
    for mu in range(-reach, reach + 1):
        if mu == 1:
            continue
        if not k_is_trivial(k_normal_form(evaluate_section(nf, mu)), oracle):
            return MembershipResult(False)
    kf1 = k_normal_form(evaluate_section(nf, 1))
    if kf1.eta != 0:
        return MembershipResult(False)
    inner = kf1.eta0 + 1
    for nu in range(-inner, inner + 1):
        if nu == 0:
            continue
        value = k_evaluate_at(kf1, nu)
        if value.letters and not oracle.is_trivial(encode_hword(value)):
            return MembershipResult(False)
    return MembershipResult(True, k_evaluate_at(kf1, 0))


def phi(u: HWord) -> CSWord:
    """Embed a base-group word into the two-generator group.

    Each letter (i, e) expands to the commutator
    c s^t c s^-t c^-1 s^t c^-1 s^-t with t = 2^i - 1, raised to the power e;
    letters concatenate in order and the result is canonicalized.
    """
    blocks = []
    for index, exponent in u.letters:
        t = (1 << index) - 1
        letter = [
            ("c", 1), ("s", t), ("c", 1), ("s", -t),
            ("c", -1), ("s", t), ("c", -1), ("s", -t),
        ]
        if exponent < 0:
            letter = [(name, -e) for name, e in reversed(letter)]
        blocks.extend(letter * abs(exponent))
    return CSWord.from_blocks(blocks)
