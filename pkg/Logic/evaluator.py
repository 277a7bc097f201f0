# DESCRIZIONE: valutatore delle formule su una knowledge base finita, a mondo chiuso.
    # Enumerazione a forza bruta con cortocircuito. I guard Is(tipo, var) restringono i candidati
    # di ogni variabile quantificata alle istanze del tipo, e i congiunti vengono valutati
    # appena tutte le loro variabili sono legate.
    # Gli id sono sempre visitati in ordine: il primo testimone trovato e' il minimo lessicografico.

import logging
from dataclasses import dataclass
from functools import lru_cache

from Logic.formula import (
    And, AttrEq, AttrNeq, Exists, Forall, Iff, Implies, Is, LinkAtom, Not, Or, Tag, VarNeq,
    check_well_formed, flatten_and, free_vars, individual_tags,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalResult:
    value: bool
    witness: dict | None = None


@dataclass(frozen=True)
class _Plan:
    guards: tuple       # per variabile: tuple dei tipi richiesti dai guard
    ready: tuple        # per variabile: congiunti valutabili appena la variabile e' legata
    upfront: tuple      # congiunti senza variabili locali
    leaf: object        # formula da valutare ad assegnamento completo (None = nulla da valutare)


@lru_cache(maxsize=None)
def _plan(node):
    vars = node.vars
    if isinstance(node, Forall) and isinstance(node.body, Implies):
        # controesempio: antecedente vero e conseguente falso
        conjuncts, leaf = flatten_and(node.body.lhs), node.body.rhs
    elif isinstance(node, Exists):
        conjuncts, leaf = flatten_and(node.body), None
    else:
        conjuncts, leaf = (), node.body

    guards = {v: [] for v in vars}
    ready = {v: [] for v in vars}
    upfront = []
    for c in conjuncts:
        if isinstance(c, Is) and c.var in guards:
            guards[c.var].append(c.type_name)
            continue
        local = free_vars(c) & set(vars)
        if not local:
            upfront.append(c)
        else:
            last = max(vars.index(v) for v in local)
            ready[vars[last]].append(c)
    return _Plan(
        guards=tuple(tuple(guards[v]) for v in vars),
        ready=tuple(tuple(ready[v]) for v in vars),
        upfront=tuple(upfront),
        leaf=leaf,
    )


class Evaluator:
    """Contesto di valutazione per una coppia (kb, schema); non modifica nulla dopo la costruzione."""

    def __init__(self, kb, schema):
        self.kb = kb
        self.schema = schema
        self.universe = kb.ids()
        self._types = {}
        for id in self.universe:
            type_name = kb.individual(id).type_name
            self._types[id] = schema.ancestors(type_name) if schema.has_term(type_name) else frozenset()
        self._instances = {}

    def instances(self, type_name):
        if type_name not in self._instances:
            self._instances[type_name] = [id for id in self.universe if type_name in self._types[id]]
        return self._instances[type_name]

    def candidates(self, type_names):
        if not type_names:
            return self.universe
        result = self.instances(type_names[0])
        for other in type_names[1:]:
            allowed = set(self.instances(other))
            result = [id for id in result if id in allowed]
        return result

    # ------------------------------------------------------------------ atomi e connettivi
    def holds(self, node, env):
        if isinstance(node, Is):
            return node.type_name in self._types[env[node.var]]
        if isinstance(node, LinkAtom):
            return self.kb.has_link(node.rel_name, env[node.left], env[node.right])
        if isinstance(node, And):
            return all(self.holds(p, env) for p in node.parts)
        if isinstance(node, Or):
            return any(self.holds(p, env) for p in node.parts)
        if isinstance(node, Not):
            return not self.holds(node.operand, env)
        if isinstance(node, Implies):
            return not self.holds(node.lhs, env) or self.holds(node.rhs, env)
        if isinstance(node, Iff):
            return self.holds(node.lhs, env) == self.holds(node.rhs, env)
        if isinstance(node, Forall):
            return self.first_binding(node, env) is None
        if isinstance(node, Exists):
            return self.first_binding(node, env) is not None
        if isinstance(node, VarNeq):
            return env[node.left] != env[node.right]
        if isinstance(node, (AttrEq, AttrNeq)):
            left = self.kb.individual(env[node.left_var]).attrs.get(node.left_attr)
            right = self.kb.individual(env[node.right_var]).attrs.get(node.right_attr)
            if left is None or right is None:
                return False
            return left == right if isinstance(node, AttrEq) else left != right
        if isinstance(node, Tag):
            return node.tag_name in individual_tags(self.kb.individual(env[node.var]), self.schema)
        raise TypeError(f"not a formula node: {node!r}")

    # ------------------------------------------------------------------ quantificatori
    def first_binding(self, node, env):
        """Forall: primo assegnamento che falsifica il corpo. Exists: primo che lo soddisfa."""
        plan = _plan(node)
        local = dict(env)
        if not all(self.holds(c, local) for c in plan.upfront):
            return None
        target = isinstance(node, Exists)
        vars = node.vars
        pools = [self.candidates(g) for g in plan.guards]

        def search(i):
            if i == len(vars):
                if plan.leaf is None or self.holds(plan.leaf, local) == target:
                    return {v: local[v] for v in vars}
                return None
            for id in pools[i]:
                local[vars[i]] = id
                if all(self.holds(c, local) for c in plan.ready[i]):
                    found = search(i + 1)
                    if found is not None:
                        return found
            return None

        return search(0)

    def run(self, formula, bindings=None):
        env = dict(bindings or {})
        if isinstance(formula, (Forall, Exists)):
            witness = self.first_binding(formula, env)
            value = witness is None if isinstance(formula, Forall) else witness is not None
            return EvalResult(value, witness)
        return EvalResult(self.holds(formula, env), None)


def evaluate_with_witness(kb, schema, formula, bindings=None, evaluator=None):
    check_well_formed(formula, schema, bound=tuple(bindings or ()))
    evaluator = evaluator or Evaluator(kb, schema)
    return evaluator.run(formula, bindings)


def evaluate(kb, schema, formula, bindings=None):
    return evaluate_with_witness(kb, schema, formula, bindings).value
