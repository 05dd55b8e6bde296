"""AST nodes for the one-sorted hyperfield language (terms over {0, 1, *,
variables, phat}; atoms plus/divides/equality) and the three-sorted valued
field language (field, residue, value-group-with-infinity sorts; res and nu
connect them). Connectives and quantifiers are shared node shapes; the val
quantifiers carry a sort tag.

Formulas are immutable; renderers produce the canonical concrete syntax that
the parsers round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass

# ---- hyperfield language terms and atoms -------------------------------------------


@dataclass(frozen=True)
class VVar:
    name: str


@dataclass(frozen=True)
class VZero:
    pass


@dataclass(frozen=True)
class VOne:
    pass


@dataclass(frozen=True)
class VPhat:
    pass


@dataclass(frozen=True)
class VMul:
    left: object
    right: object


@dataclass(frozen=True)
class VPlus:
    t1: object
    t2: object
    t3: object     # t3 is a member of t1 + t2


@dataclass(frozen=True)
class VDivides:
    t1: object
    t2: object


@dataclass(frozen=True)
class VEq:
    t1: object
    t2: object


# ---- valued-field language ----------------------------------------------------------

SORT_FIELD, SORT_RESIDUE, SORT_GROUP = "K", "k", "G"


@dataclass(frozen=True)
class FVar:
    name: str


@dataclass(frozen=True)
class FZero:
    pass


@dataclass(frozen=True)
class FOne:
    pass


@dataclass(frozen=True)
class FPConst:
    pass


@dataclass(frozen=True)
class FAdd:
    left: object
    right: object


@dataclass(frozen=True)
class FMul:
    left: object
    right: object


@dataclass(frozen=True)
class FNeg:
    body: object


@dataclass(frozen=True)
class RVar:
    name: str


@dataclass(frozen=True)
class RZero:
    pass


@dataclass(frozen=True)
class ROne:
    pass


@dataclass(frozen=True)
class RRes:
    body: object   # field term


@dataclass(frozen=True)
class RAdd:
    left: object
    right: object


@dataclass(frozen=True)
class RMul:
    left: object
    right: object


@dataclass(frozen=True)
class GVar:
    name: str


@dataclass(frozen=True)
class GNu:
    body: object   # field term


@dataclass(frozen=True)
class GInf:
    pass


@dataclass(frozen=True)
class GZero:
    pass


@dataclass(frozen=True)
class GAdd:
    left: object
    right: object


@dataclass(frozen=True)
class FEq:
    left: object
    right: object


@dataclass(frozen=True)
class REq:
    left: object
    right: object


@dataclass(frozen=True)
class GEq:
    left: object
    right: object


@dataclass(frozen=True)
class GLe:
    left: object
    right: object


@dataclass(frozen=True)
class GLt:
    left: object
    right: object


# ---- shared connectives and quantifiers -----------------------------------------------


@dataclass(frozen=True)
class LAnd:
    left: object
    right: object


@dataclass(frozen=True)
class LOr:
    left: object
    right: object


@dataclass(frozen=True)
class LNot:
    body: object


@dataclass(frozen=True)
class LImp:
    left: object
    right: object


@dataclass(frozen=True)
class LExists:
    var: str
    sort: str      # "" for the one-sorted hyperfield language
    body: object


@dataclass(frozen=True)
class LForall:
    var: str
    sort: str
    body: object


ATOMS = (VPlus, VDivides, VEq, FEq, REq, GEq, GLe, GLt)


def is_positive(phi) -> bool:
    """No negation, no implication."""
    if isinstance(phi, (LNot, LImp)):
        return False
    if isinstance(phi, (LAnd, LOr)):
        return is_positive(phi.left) and is_positive(phi.right)
    if isinstance(phi, (LExists, LForall)):
        return is_positive(phi.body)
    return True


def is_existential(phi, polarity=True) -> bool:
    """No universal quantifier, and every existential sits in positive
    polarity (prenex-reachable)."""
    if isinstance(phi, LForall):
        return False
    if isinstance(phi, LExists):
        return polarity and is_existential(phi.body, polarity)
    if isinstance(phi, LNot):
        return is_existential(phi.body, not polarity)
    if isinstance(phi, LImp):
        return (is_existential(phi.left, not polarity)
                and is_existential(phi.right, polarity))
    if isinstance(phi, (LAnd, LOr)):
        return is_existential(phi.left, polarity) and is_existential(phi.right, polarity)
    return True


def is_positive_existential(phi) -> bool:
    return is_positive(phi) and is_existential(phi)


def quantifier_depth(phi) -> int:
    if isinstance(phi, (LExists, LForall)):
        return 1 + quantifier_depth(phi.body)
    if isinstance(phi, (LAnd, LOr, LImp)):
        return max(quantifier_depth(phi.left), quantifier_depth(phi.right))
    if isinstance(phi, LNot):
        return quantifier_depth(phi.body)
    return 0


def free_vars(phi):
    def term_vars(t):
        if isinstance(t, (VVar, FVar, RVar, GVar)):
            return {t.name}
        out = set()
        for attr in ("left", "right", "body", "t1", "t2", "t3"):
            if hasattr(t, attr):
                out |= term_vars(getattr(t, attr))
        return out

    if isinstance(phi, ATOMS):
        return term_vars(phi)
    if isinstance(phi, (LAnd, LOr, LImp)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, LNot):
        return free_vars(phi.body)
    if isinstance(phi, (LExists, LForall)):
        return free_vars(phi.body) - {phi.var}
    return set()


def all_var_names(phi):
    out = set()
    if isinstance(phi, (LExists, LForall)):
        out.add(phi.var)
        out |= all_var_names(phi.body)
    elif isinstance(phi, (LAnd, LOr, LImp)):
        out |= all_var_names(phi.left) | all_var_names(phi.right)
    elif isinstance(phi, LNot):
        out |= all_var_names(phi.body)
    else:
        out |= free_vars(phi)
    return out


# ---- rendering ---------------------------------------------------------------------------


def render_vhf_term(t) -> str:
    if isinstance(t, VVar):
        return t.name
    if isinstance(t, VZero):
        return "0"
    if isinstance(t, VOne):
        return "1"
    if isinstance(t, VPhat):
        return "phat"
    if isinstance(t, VMul):
        return f"{render_vhf_term(t.left)}*{render_vhf_term(t.right)}"
    raise TypeError(f"not a hyperfield term: {t!r}")


def render_vhf(phi) -> str:
    if isinstance(phi, VPlus):
        return (f"plus({render_vhf_term(phi.t1)}, {render_vhf_term(phi.t2)}, "
                f"{render_vhf_term(phi.t3)})")
    if isinstance(phi, VDivides):
        return f"{render_vhf_term(phi.t1)} | {render_vhf_term(phi.t2)}"
    if isinstance(phi, VEq):
        return f"{render_vhf_term(phi.t1)} = {render_vhf_term(phi.t2)}"
    return _render_connectives(phi, render_vhf, with_sorts=False)


def _render_connectives(phi, rec, with_sorts):
    if isinstance(phi, LAnd):
        return f"({rec(phi.left)} and {rec(phi.right)})"
    if isinstance(phi, LOr):
        return f"({rec(phi.left)} or {rec(phi.right)})"
    if isinstance(phi, LImp):
        return f"({rec(phi.left)} -> {rec(phi.right)})"
    if isinstance(phi, LNot):
        return f"not ({rec(phi.body)})"
    if isinstance(phi, (LExists, LForall)):
        kw = "exists" if isinstance(phi, LExists) else "forall"
        tag = f"{phi.var}:{phi.sort}" if with_sorts else phi.var
        return f"{kw} {tag}. {rec(phi.body)}"
    raise TypeError(f"cannot render {phi!r}")


def render_fterm(t) -> str:
    if isinstance(t, FVar):
        return t.name
    if isinstance(t, FZero):
        return "0"
    if isinstance(t, FOne):
        return "1"
    if isinstance(t, FPConst):
        return "p"
    if isinstance(t, FAdd):
        return f"({render_fterm(t.left)} + {render_fterm(t.right)})"
    if isinstance(t, FMul):
        return f"{render_fterm(t.left)}*{render_fterm(t.right)}"
    if isinstance(t, FNeg):
        return f"(-{render_fterm(t.body)})"
    raise TypeError(f"not a field term: {t!r}")


def render_rterm(t) -> str:
    if isinstance(t, RVar):
        return t.name
    if isinstance(t, RZero):
        return "0"
    if isinstance(t, ROne):
        return "1"
    if isinstance(t, RRes):
        return f"res({render_fterm(t.body)})"
    if isinstance(t, RAdd):
        return f"({render_rterm(t.left)} + {render_rterm(t.right)})"
    if isinstance(t, RMul):
        return f"{render_rterm(t.left)}*{render_rterm(t.right)}"
    raise TypeError(f"not a residue term: {t!r}")


def render_gterm(t) -> str:
    if isinstance(t, GVar):
        return t.name
    if isinstance(t, GNu):
        return f"nu({render_fterm(t.body)})"
    if isinstance(t, GInf):
        return "inf"
    if isinstance(t, GZero):
        return "0"
    if isinstance(t, GAdd):
        return f"({render_gterm(t.left)} + {render_gterm(t.right)})"
    raise TypeError(f"not a group term: {t!r}")


def render_val(phi) -> str:
    if isinstance(phi, FEq):
        return f"{render_fterm(phi.left)} = {render_fterm(phi.right)}"
    if isinstance(phi, REq):
        return f"{render_rterm(phi.left)} = {render_rterm(phi.right)}"
    if isinstance(phi, GEq):
        return f"{render_gterm(phi.left)} = {render_gterm(phi.right)}"
    if isinstance(phi, GLe):
        return f"{render_gterm(phi.left)} <= {render_gterm(phi.right)}"
    if isinstance(phi, GLt):
        return f"{render_gterm(phi.left)} < {render_gterm(phi.right)}"
    return _render_connectives(phi, render_val, with_sorts=True)
