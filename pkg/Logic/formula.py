# DESCRIZIONE: AST delle formule del primo ordine usate dagli assiomi.
    # I nodi sono dataclass immutabili e hashable (le cache dell'evaluator le usano come chiavi).
    # Contiene anche il controllo di buona formazione e la stampa in notazione prefissa.

from dataclasses import dataclass
from functools import lru_cache

from errors import FormulaError
from Schema.schema import CLASSIFICATION_ATTR, CLASSIFICATION_TAGS


@dataclass(frozen=True)
class Forall:
    vars: tuple
    body: object


@dataclass(frozen=True)
class Exists:
    vars: tuple
    body: object


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Or:
    parts: tuple


@dataclass(frozen=True)
class Not:
    operand: object


@dataclass(frozen=True)
class Implies:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Iff:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Is:
    type_name: str
    var: str


@dataclass(frozen=True)
class LinkAtom:
    rel_name: str
    left: str
    right: str


@dataclass(frozen=True)
class AttrEq:
    left_var: str
    left_attr: str
    right_var: str
    right_attr: str


@dataclass(frozen=True)
class AttrNeq:
    left_var: str
    left_attr: str
    right_var: str
    right_attr: str


@dataclass(frozen=True)
class VarNeq:
    left: str
    right: str


@dataclass(frozen=True)
class Tag:
    tag_name: str
    var: str


QUANTIFIERS = (Forall, Exists)
ATOMS = (Is, LinkAtom, AttrEq, AttrNeq, VarNeq, Tag)


# costruttori brevi, usati dal catalogo degli assiomi
def forall(vars, body):
    return Forall(tuple(vars.split()) if isinstance(vars, str) else tuple(vars), body)


def exists(vars, body):
    return Exists(tuple(vars.split()) if isinstance(vars, str) else tuple(vars), body)


def conj(*parts):
    return And(tuple(parts))


def disj(*parts):
    return Or(tuple(parts))


def children(node):
    if isinstance(node, QUANTIFIERS):
        return (node.body,)
    if isinstance(node, (And, Or)):
        return node.parts
    if isinstance(node, Not):
        return (node.operand,)
    if isinstance(node, (Implies, Iff)):
        return (node.lhs, node.rhs)
    return ()


def atom_vars(node):
    if isinstance(node, (Is, Tag)):
        return (node.var,)
    if isinstance(node, (LinkAtom, VarNeq)):
        return (node.left, node.right)
    if isinstance(node, (AttrEq, AttrNeq)):
        return (node.left_var, node.right_var)
    return ()


@lru_cache(maxsize=None)
def free_vars(node):
    if isinstance(node, ATOMS):
        return frozenset(atom_vars(node))
    if isinstance(node, QUANTIFIERS):
        return free_vars(node.body) - set(node.vars)
    result = frozenset()
    for child in children(node):
        result |= free_vars(child)
    return result


def flatten_and(node):
    """Congiunti di primo livello (gli And annidati vengono appiattiti)."""
    if isinstance(node, And):
        return tuple(p for part in node.parts for p in flatten_and(part))
    return (node,)


def depth(node):
    kids = children(node)
    return 1 + max((depth(k) for k in kids), default=0)


def check_well_formed(formula, schema, bound=()):
    """Solleva FormulaError se una variabile e' libera o un nome non si risolve sullo schema."""
    attr_names = schema.attribute_names() | {CLASSIFICATION_ATTR}

    def visit(node, scope):
        if isinstance(node, QUANTIFIERS):
            if not node.vars:
                raise FormulaError("quantifier without variables")
            if len(set(node.vars)) != len(node.vars):
                raise FormulaError(f"repeated variable in quantifier {node.vars}")
            visit(node.body, scope | set(node.vars))
            return
        if isinstance(node, ATOMS):
            for var in atom_vars(node):
                if var not in scope:
                    raise FormulaError(f"unbound variable '{var}' in {pretty(node)}")
            if isinstance(node, Is) and not schema.has_term(node.type_name):
                raise FormulaError(f"unknown type '{node.type_name}'")
            if isinstance(node, LinkAtom) and not schema.knows_relation(node.rel_name):
                raise FormulaError(f"unknown relationship '{node.rel_name}'")
            if isinstance(node, (AttrEq, AttrNeq)):
                for attr in (node.left_attr, node.right_attr):
                    if attr not in attr_names:
                        raise FormulaError(f"unknown attribute '{attr}'")
            if isinstance(node, Tag) and node.tag_name not in CLASSIFICATION_TAGS:
                raise FormulaError(f"unknown classification tag '{node.tag_name}'")
            return
        kids = children(node)
        if isinstance(node, (And, Or)) and not kids:
            raise FormulaError(f"empty {type(node).__name__}")
        if not isinstance(node, (And, Or, Not, Implies, Iff)):
            raise FormulaError(f"not a formula node: {node!r}")
        for child in kids:
            visit(child, scope)

    visit(formula, set(bound))
    return formula


def pretty(node):
    """Notazione prefissa, stabile (usata da `axioms show`)."""
    if isinstance(node, Forall):
        return f"forall({', '.join(node.vars)}; {pretty(node.body)})"
    if isinstance(node, Exists):
        return f"exists({', '.join(node.vars)}; {pretty(node.body)})"
    if isinstance(node, And):
        return f"and({', '.join(pretty(p) for p in node.parts)})"
    if isinstance(node, Or):
        return f"or({', '.join(pretty(p) for p in node.parts)})"
    if isinstance(node, Not):
        return f"not({pretty(node.operand)})"
    if isinstance(node, Implies):
        return f"implies({pretty(node.lhs)}, {pretty(node.rhs)})"
    if isinstance(node, Iff):
        return f"iff({pretty(node.lhs)}, {pretty(node.rhs)})"
    if isinstance(node, Is):
        return f"{node.type_name}({node.var})"
    if isinstance(node, LinkAtom):
        return f"{node.rel_name}({node.left}, {node.right})"
    if isinstance(node, AttrEq):
        return f"eq({node.left_var}.{node.left_attr}, {node.right_var}.{node.right_attr})"
    if isinstance(node, AttrNeq):
        return f"neq({node.left_var}.{node.left_attr}, {node.right_var}.{node.right_attr})"
    if isinstance(node, VarNeq):
        return f"distinct({node.left}, {node.right})"
    if isinstance(node, Tag):
        return f"tag:{node.tag_name}({node.var})"
    raise FormulaError(f"not a formula node: {node!r}")


def individual_tags(individual, schema):
    """Tag di classificazione validi per un individuo: attributo `classification` o sottotipo del termine."""
    tags = set()
    raw = individual.attrs.get(CLASSIFICATION_ATTR)
    if raw is not None:
        tags.update(part.strip() for part in raw.split(",") if part.strip())
    if schema.has_term(individual.type_name):
        tags.update(t for t in CLASSIFICATION_TAGS if schema.is_subtype(individual.type_name, t))
    return tags
