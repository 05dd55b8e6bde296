"""Recursive-descent parsers for the hyperfield and valued-field surface
syntax, with positioned syntax errors and parse-time sort checking.

Hyperfield sentences:   exists x. plus(x, 1, phat) and x | phat
Valued-field sentences: exists x:K. nu(x*x) = nu(p) and res(x) = 1

The valued-field parser infers sorts bottom-up (numerals are polymorphic,
resolved against the other side of an atom with priority K > k > G).
"""

from __future__ import annotations

from ..errors import FormulaSyntaxError, SortError
from . import nodes as N

_KEYWORDS = {"exists", "forall", "and", "or", "not", "plus", "phat",
             "nu", "res", "inf", "p"}
_SYMBOLS = ("->", "<=", "(", ")", ",", ".", ":", "*", "+", "-", "|", "=", "<")


class _Lexer:
    def __init__(self, text):
        self.tokens = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                i += 1
                col += 1
                continue
            for sym in _SYMBOLS:
                if text.startswith(sym, i):
                    self.tokens.append((sym, sym, line, col))
                    i += len(sym)
                    col += len(sym)
                    break
            else:
                if ch.isdigit():
                    j = i
                    while j < len(text) and text[j].isdigit():
                        j += 1
                    self.tokens.append(("INT", int(text[i:j]), line, col))
                    col += j - i
                    i = j
                elif ch.isalpha() or ch == "_":
                    j = i
                    while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                        j += 1
                    word = text[i:j]
                    kind = word if word in _KEYWORDS else "IDENT"
                    self.tokens.append((kind, word, line, col))
                    col += j - i
                    i = j
                else:
                    raise FormulaSyntaxError(f"unexpected character {ch!r}", line, col)
        self.tokens.append(("EOF", None, line, col))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise FormulaSyntaxError(f"expected {kind!r}, found {tok[1]!r}",
                                     tok[2], tok[3])
        self.pos += 1
        return tok

    def error(self, msg):
        tok = self.tokens[self.pos]
        raise FormulaSyntaxError(msg, tok[2], tok[3])


# ---- hyperfield language ------------------------------------------------------------


def parse_vhf(text: str):
    lx = _Lexer(text)
    phi = _vhf_formula(lx)
    if lx.peek() != "EOF":
        lx.error("trailing input")
    return phi


def _vhf_formula(lx):
    if lx.peek() in ("exists", "forall"):
        kw = lx.next()[0]
        names = [lx.next("IDENT")[1]]
        while lx.peek() == ",":
            lx.next()
            names.append(lx.next("IDENT")[1])
        lx.next(".")
        body = _vhf_formula(lx)
        cls = N.LExists if kw == "exists" else N.LForall
        for name in reversed(names):
            body = cls(name, "", body)
        return body
    return _vhf_imp(lx)


def _vhf_imp(lx):
    left = _vhf_or(lx)
    if lx.peek() == "->":
        lx.next()
        return N.LImp(left, _vhf_imp(lx))
    return left


def _vhf_or(lx):
    out = _vhf_and(lx)
    while lx.peek() == "or":
        lx.next()
        out = N.LOr(out, _vhf_and(lx))
    return out


def _vhf_and(lx):
    out = _vhf_unary(lx)
    while lx.peek() == "and":
        lx.next()
        out = N.LAnd(out, _vhf_unary(lx))
    return out


def _vhf_unary(lx):
    if lx.peek() == "not":
        lx.next()
        return N.LNot(_vhf_unary(lx))
    if lx.peek() == "(":
        lx.next()
        inner = _vhf_formula(lx)
        lx.next(")")
        return inner
    return _vhf_atom(lx)


def _vhf_atom(lx):
    if lx.peek() == "plus":
        lx.next()
        lx.next("(")
        t1 = _vhf_term(lx)
        lx.next(",")
        t2 = _vhf_term(lx)
        lx.next(",")
        t3 = _vhf_term(lx)
        lx.next(")")
        return N.VPlus(t1, t2, t3)
    t1 = _vhf_term(lx)
    op = lx.peek()
    if op == "=":
        lx.next()
        return N.VEq(t1, _vhf_term(lx))
    if op == "|":
        lx.next()
        return N.VDivides(t1, _vhf_term(lx))
    lx.error("expected '=' or '|' after term")


def _vhf_term(lx):
    out = _vhf_factor(lx)
    while lx.peek() == "*":
        lx.next()
        out = N.VMul(out, _vhf_factor(lx))
    return out


def _vhf_factor(lx):
    kind, value, line, col = lx.next()
    if kind == "INT":
        if value == 0:
            return N.VZero()
        if value == 1:
            return N.VOne()
        raise FormulaSyntaxError("only the constants 0 and 1 exist", line, col)
    if kind == "phat":
        return N.VPhat()
    if kind == "IDENT":
        return N.VVar(value)
    raise FormulaSyntaxError(f"unexpected token {value!r} in term", line, col)


# ---- valued-field language -----------------------------------------------------------

_SORTS = (N.SORT_FIELD, N.SORT_RESIDUE, N.SORT_GROUP)


def parse_val(text: str, env=None):
    lx = _Lexer(text)
    phi = _val_formula(lx, dict(env or {}))
    if lx.peek() != "EOF":
        lx.error("trailing input")
    return phi


def _val_formula(lx, env):
    if lx.peek() in ("exists", "forall"):
        kw = lx.next()[0]
        binders = []
        while True:
            name = lx.next("IDENT")[1]
            lx.next(":")
            skind, sval, line, col = lx.next()
            sort = sval if sval in _SORTS else None
            if sort is None:
                raise FormulaSyntaxError(f"unknown sort {sval!r}", line, col)
            binders.append((name, sort))
            if lx.peek() != ",":
                break
            lx.next()
        lx.next(".")
        inner_env = dict(env)
        inner_env.update(binders)
        body = _val_formula(lx, inner_env)
        cls = N.LExists if kw == "exists" else N.LForall
        for name, sort in reversed(binders):
            body = cls(name, sort, body)
        return body
    return _val_imp(lx, env)


def _val_imp(lx, env):
    left = _val_or(lx, env)
    if lx.peek() == "->":
        lx.next()
        return N.LImp(left, _val_imp(lx, env))
    return left


def _val_or(lx, env):
    out = _val_and(lx, env)
    while lx.peek() == "or":
        lx.next()
        out = N.LOr(out, _val_and(lx, env))
    return out


def _val_and(lx, env):
    out = _val_unary(lx, env)
    while lx.peek() == "and":
        lx.next()
        out = N.LAnd(out, _val_unary(lx, env))
    return out


def _val_unary(lx, env):
    if lx.peek() == "not":
        lx.next()
        return N.LNot(_val_unary(lx, env))
    if lx.peek() == "(":
        # parenthesized subformula vs parenthesized term: resolve by trying
        # the formula first and falling back to an atomic comparison
        save = lx.pos
        try:
            lx.next()
            inner = _val_formula(lx, env)
            lx.next(")")
            return inner
        except (FormulaSyntaxError, SortError):
            lx.pos = save
    return _val_atom(lx, env)


def _val_atom(lx, env):
    left = _val_expr(lx, env)
    op = lx.peek()
    if op not in ("=", "<=", "<"):
        lx.error("expected a comparison operator")
    lx.next()
    right = _val_expr(lx, env)
    return _type_atom(op, left, right, env)


def _val_expr(lx, env):
    out = _val_mul(lx, env)
    while lx.peek() in ("+", "-"):
        op = lx.next()[0]
        rhs = _val_mul(lx, env)
        out = ("add", out, rhs) if op == "+" else ("sub", out, rhs)
    return out


def _val_mul(lx, env):
    out = _val_prim(lx, env)
    while lx.peek() == "*":
        lx.next()
        out = ("mul", out, _val_prim(lx, env))
    return out


def _val_prim(lx, env):
    kind, value, line, col = lx.next()
    if kind == "-":
        return ("neg", _val_prim(lx, env))
    if kind == "INT":
        if value in (0, 1):
            return ("num", value)
        raise FormulaSyntaxError("only the constants 0 and 1 exist", line, col)
    if kind == "p":
        return ("p",)
    if kind == "inf":
        return ("inf",)
    if kind in ("nu", "res"):
        lx.next("(")
        inner = _val_expr(lx, env)
        lx.next(")")
        return (kind, inner)
    if kind == "IDENT":
        if value not in env:
            raise FormulaSyntaxError(f"unbound variable {value!r}", line, col)
        return ("var", value)
    if kind == "(":
        inner = _val_expr(lx, env)
        lx.next(")")
        return inner
    raise FormulaSyntaxError(f"unexpected token {value!r} in term", line, col)


def _possible_sorts(t, env):
    tag = t[0]
    if tag == "var":
        return {env[t[1]]}
    if tag == "num":
        return {"K", "k", "G"} if t[1] == 0 else {"K", "k"}
    if tag == "p":
        return {"K"}
    if tag == "inf":
        return {"G"}
    if tag == "nu":
        _require(t[1], "K", env)
        return {"G"}
    if tag == "res":
        _require(t[1], "K", env)
        return {"k"}
    if tag == "add":
        return _possible_sorts(t[1], env) & _possible_sorts(t[2], env)
    if tag == "mul":
        return (_possible_sorts(t[1], env) & _possible_sorts(t[2], env)) - {"G"}
    if tag == "sub":
        # subtraction is field-sort sugar for + with negation
        return (_possible_sorts(t[1], env) & _possible_sorts(t[2], env)) & {"K"}
    if tag == "neg":
        return _possible_sorts(t[1], env) & {"K"}
    raise SortError(f"unknown term {t!r}")


def _require(t, sort, env):
    if sort not in _possible_sorts(t, env):
        raise SortError(f"term {t!r} cannot have sort {sort}")


def _build_term(t, sort, env):
    tag = t[0]
    if tag == "var":
        return {"K": N.FVar, "k": N.RVar, "G": N.GVar}[sort](t[1])
    if tag == "num":
        if sort == "K":
            return N.FZero() if t[1] == 0 else N.FOne()
        if sort == "k":
            return N.RZero() if t[1] == 0 else N.ROne()
        if t[1] == 0:
            return N.GZero()
        raise SortError("the value group has no constant 1")
    if tag == "p":
        return N.FPConst()
    if tag == "inf":
        return N.GInf()
    if tag == "nu":
        return N.GNu(_build_term(t[1], "K", env))
    if tag == "res":
        return N.RRes(_build_term(t[1], "K", env))
    if tag == "add":
        cls = {"K": N.FAdd, "k": N.RAdd, "G": N.GAdd}[sort]
        return cls(_build_term(t[1], sort, env), _build_term(t[2], sort, env))
    if tag == "mul":
        cls = {"K": N.FMul, "k": N.RMul}[sort]
        return cls(_build_term(t[1], sort, env), _build_term(t[2], sort, env))
    if tag == "sub":
        return N.FAdd(_build_term(t[1], "K", env),
                      N.FNeg(_build_term(t[2], "K", env)))
    if tag == "neg":
        return N.FNeg(_build_term(t[1], "K", env))
    raise SortError(f"cannot build term {t!r}")


def _type_atom(op, left, right, env):
    ls, rs = _possible_sorts(left, env), _possible_sorts(right, env)
    if op in ("<=", "<"):
        if "G" not in ls or "G" not in rs:
            raise SortError("order comparisons live in the value group sort")
        l, r = _build_term(left, "G", env), _build_term(right, "G", env)
        return N.GLe(l, r) if op == "<=" else N.GLt(l, r)
    common = ls & rs
    if not common:
        raise SortError(f"equality between incompatible sorts {ls} and {rs}")
    sort = next(s for s in ("K", "k", "G") if s in common)
    l, r = _build_term(left, sort, env), _build_term(right, sort, env)
    return {"K": N.FEq, "k": N.REq, "G": N.GEq}[sort](l, r)
