"""The module action of operator algebras on symbolic powers f^s.

An independent oracle: it evaluates operators by termwise calculus on
rational-function coefficients (exact, fraction-free with an explicit
denominator exponent), never through Groebner bases, so it can certify the
annihilator computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .compoly import differentiate, exact_div, subst_central
from .galgebra import GAlgebra, OpPoly, commutative, transfer


def _state_snames(p):
    return ["s"] if p == 1 else [f"s{j+1}" for j in range(p)]


@dataclass
class ActionValue:
    """A coefficient of f^s: num / prod f_j^den_j, exact."""

    num: OpPoly  # in the state ring K[x, s]
    den: tuple   # non-negative f-exponents in the denominator
    f_list: tuple

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def normalized(self) -> "ActionValue":
        num, den = self.num, list(self.den)
        for j, fj in enumerate(self.f_list):
            while den[j] > 0:
                q = exact_div(num, fj)
                if q is None:
                    break
                num = q
                den[j] -= 1
        return ActionValue(num, tuple(den), self.f_list)

    def __eq__(self, other):
        if not isinstance(other, ActionValue):
            if other == 0:
                return self.num.is_zero()
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.den == b.den and a.num == b.num

    def __repr__(self):
        dens = "*".join(f"({f.render()})^{d}" for f, d in zip(self.f_list, self.den) if d)
        return f"({self.num.render()})" + (f" / {dens}" if dens else "")


def _action_plan(alg: GAlgebra, p: int):
    """Per-variable action descriptors for an operator algebra over p symbolic
    exponents: ('x', state index), ('d', x index), ('s', j) or ('gl', i, j)."""
    plan = []
    xcount = alg.roles.count("x")
    spos = 0
    for idx in range(alg.n):
        role = alg.roles[idx]
        if role == "x":
            plan.append(("x", len([i for i in range(idx) if alg.roles[i] == "x"])))
        elif role == "d":
            xi, = [k for k, pair in enumerate(alg.pairs) if pair[1] == idx]
            xvar = alg.pairs[xi][0]
            if alg.roles[xvar] != "x":
                plan.append(None)  # a (t, Dt) pair: outside the oracle
            else:
                plan.append(("d", len([i for i in range(xvar) if alg.roles[i] == "x"])))
        elif role == "s":
            if idx in alg.gl_index:
                i, j = alg.gl_index[idx]
                plan.append(("s", i) if i == j else ("gl", i, j))
            else:
                plan.append(("s", spos))
                spos += 1
        else:
            plan.append(None)
    return plan


def apply_to_fs(P: OpPoly, f_list, normalize=True) -> ActionValue:
    """Evaluate P acting on f^s = f_1^{s_1} ... f_p^{s_p}.

    P must be polynomial in x_i, the partials D_i and the symbolic-exponent
    generators (s_j, or the gl generators s_ij); f_j are non-zero commutative
    polynomials in the x variables.  Returns the exact rational-function
    coefficient G with P(f^s) = G * f^s.
    """
    f_list = list(f_list)
    if not f_list or any(f.is_zero() for f in f_list):
        raise ValueError("need non-zero polynomials f_j")
    p = len(f_list)
    alg = P.alg
    plan = _action_plan(alg, p)
    fring = f_list[0].alg
    xnames = [nm for nm in fring.names]
    R = commutative(list(xnames) + _state_snames(p))
    nglparams = max((ij[0] + 1 for ij in alg.gl_index.values()), default=0)
    if alg.gl_index and nglparams != p:
        raise ValueError(f"operator algebra carries {nglparams} exponents, got {p} polynomials")
    fs = [transfer(f, R) for f in f_list]
    svars = [R.gen(nm) for nm in _state_snames(p)]
    dfs = [[differentiate(fj, i) for i in range(len(xnames))] for fj in fs]

    def d_action(num, den, xi):
        # D_xi (num * f^{s-den}) scaled by prod f_j
        total = differentiate(num, xi)
        for j in range(p):
            total = total * fs[j]
        for j in range(p):
            if dfs[j][xi].is_zero():
                continue
            part = num * (svars[j] - int(den[j])) * dfs[j][xi]
            for k in range(p):
                if k != j:
                    part = part * fs[k]
            total = total + part
        return total, tuple(d + 1 for d in den)

    acc_num = R.zero()
    acc_den = (0,) * p
    for e, c in P.terms:
        num = R.scalar(c)
        den = (0,) * p
        for idx in range(alg.n - 1, -1, -1):
            k = e[idx]
            if not k:
                continue
            act = plan[idx]
            if act is None:
                raise ValueError(
                    f"variable {alg.names[idx]} has no action on f^s")
            if act[0] == "x":
                num = num * R.gen(act[1]) ** k
            elif act[0] == "s":
                num = num * svars[act[1]] ** k
            elif act[0] == "d":
                for _ in range(k):
                    num, den = d_action(num, den, act[1])
            else:  # gl generator s_ij, i != j
                _, i, j = act
                for _ in range(k):
                    num = subst_central(num, _state_snames(p)[j], svars[j] + 1)
                    num = subst_central(num, _state_snames(p)[i], svars[i] - 1)
                    num = num * svars[i] * fs[j]
                    den = tuple(d + (1 if t == i else 0) for t, d in enumerate(den))
        # align denominators and accumulate
        lift_acc = tuple(max(a, b) - a for a, b in zip(acc_den, den))
        lift_new = tuple(max(a, b) - b for a, b in zip(acc_den, den))
        for j in range(p):
            for _ in range(lift_acc[j]):
                acc_num = acc_num * fs[j]
            for _ in range(lift_new[j]):
                num = num * fs[j]
        acc_num = acc_num + num
        acc_den = tuple(max(a, b) for a, b in zip(acc_den, den))
    out = ActionValue(acc_num, acc_den, tuple(fs))
    return out.normalized() if normalize else out


def annihilates(P: OpPoly, f_list) -> bool:
    """True when P kills f^s under the direct action."""
    return apply_to_fs(P, f_list, normalize=False).is_zero()


def annihilates_power(P: OpPoly, f: OpPoly, alpha) -> bool:
    """True when P (with no symbolic-exponent variables) kills f^alpha."""
    val = apply_to_fs(P, [f], normalize=False)
    num = subst_central(val.num, "s", mpq(alpha))
    return num.is_zero()
