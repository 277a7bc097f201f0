# Valutatore di riferimento: cicli annidati su tutte le assegnazioni.
# Solo il cortocircuito di and/or/implica, nessuna potatura e nessun indice.
# Serve come oracolo per i test e per il Benchmark.

from itertools import product

from Logic.formula import (
    And, AttrEq, AttrNeq, Exists, Forall, Iff, Implies, Is, LinkAtom, Not, Or, Tag, VarNeq,
    check_well_formed, individual_tags,
)


def _holds(node, kb, schema, universe, env):
    if isinstance(node, Is):
        individual = kb.individual(env[node.var])
        return schema.has_term(individual.type_name) and schema.is_subtype(individual.type_name, node.type_name)
    if isinstance(node, Tag):
        return node.tag_name in individual_tags(kb.individual(env[node.var]), schema)
    if isinstance(node, LinkAtom):
        return kb.has_link(node.rel_name, env[node.left], env[node.right])
    if isinstance(node, (AttrEq, AttrNeq)):
        left = kb.individual(env[node.left_var]).attrs.get(node.left_attr)
        right = kb.individual(env[node.right_var]).attrs.get(node.right_attr)
        if left is None or right is None:
            return False
        return (left == right) if isinstance(node, AttrEq) else (left != right)
    if isinstance(node, VarNeq):
        return env[node.left] != env[node.right]
    if isinstance(node, Not):
        return not _holds(node.operand, kb, schema, universe, env)
    if isinstance(node, And):
        return all(_holds(p, kb, schema, universe, env) for p in node.parts)
    if isinstance(node, Or):
        return any(_holds(p, kb, schema, universe, env) for p in node.parts)
    if isinstance(node, Implies):
        return (not _holds(node.lhs, kb, schema, universe, env)) or _holds(node.rhs, kb, schema, universe, env)
    if isinstance(node, Iff):
        return _holds(node.lhs, kb, schema, universe, env) == _holds(node.rhs, kb, schema, universe, env)
    if isinstance(node, (Forall, Exists)):
        found = _first_binding(node, kb, schema, universe, env)
        return found is None if isinstance(node, Forall) else found is not None
    raise TypeError(f"not a formula node: {node!r}")


def _first_binding(node, kb, schema, universe, env):
    # Forall: primo assegnamento che falsifica il corpo; Exists: primo che lo soddisfa
    target = isinstance(node, Exists)
    for values in product(universe, repeat=len(node.vars)):
        local = dict(env)
        local.update(zip(node.vars, values))
        if _holds(node.body, kb, schema, universe, local) == target:
            return dict(zip(node.vars, values))
    return None


def naive_evaluate(kb, schema, formula, bindings=None):
    check_well_formed(formula, schema, bound=tuple(bindings or ()))
    return _holds(formula, kb, schema, kb.ids(), dict(bindings or {}))


def naive_witness(kb, schema, formula, bindings=None):
    """Testimone atteso per un quantificatore al livello piu' esterno (None se non previsto)."""
    check_well_formed(formula, schema, bound=tuple(bindings or ()))
    if not isinstance(formula, (Forall, Exists)):
        return None
    return _first_binding(formula, kb, schema, kb.ids(), dict(bindings or {}))
