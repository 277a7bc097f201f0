# DESCRIZIONE: parser a discesa ricorsiva del formato .tkb e serializzazione canonica.
    # Grammatica:
    #   document        := statement* ;
    #   statement       := individual_decl | link_decl ;
    #   individual_decl := "individual" IDENT ":" TYPENAME [ "{" attr_assign* "}" ] ;
    #   attr_assign     := ATTRNAME "=" STRING ;
    #   link_decl       := "link" RELNAME "(" IDENT "," IDENT ")" ;
    # I link possono riferirsi a id dichiarati piu' avanti: la risoluzione avviene a fine parsing.

import re
import logging

from errors import TkbParseError
from KnowledgeBase.kb import KnowledgeBase
from Parser.lexer import EOF, IDENT, PUNCT, STRING, Lexer, ParseDiagnostic, escape_string

logger = logging.getLogger(__name__)

STATEMENT_KEYWORDS = ("individual", "link")
TYPENAME_RE = re.compile(r"[A-Z][A-Za-z0-9]*\Z")
SNAKE_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class _Recover(Exception):
    """Interrompe lo statement corrente: il parser si risincronizza sulla prossima keyword."""


class TkbParser:

    def __init__(self, text):
        lexer = Lexer(text)
        self.tokens = lexer.tokens()
        self.diagnostics = list(lexer.diagnostics)
        self.index = 0
        self.individuals = []   # (id_token, type_token, {attr: value})
        self.links = []         # (rel_token, source_token, target_token)

    # utilita' ------------------------------------------------------------------
    @property
    def current(self):
        return self.tokens[self.index]

    def _error(self, token, message):
        self.diagnostics.append(ParseDiagnostic(token.line, token.column, message))
        raise _Recover()

    def _describe(self, token):
        return "end of input" if token.kind == EOF else f"'{token.value}'"

    def _expect_punct(self, value):
        token = self.current
        if token.kind != PUNCT or token.value != value:
            self._error(token, f"expected '{value}' but found {self._describe(token)}")
        self.index += 1
        return token

    def _expect_ident(self, what, pattern=None):
        token = self.current
        if token.kind != IDENT:
            self._error(token, f"expected {what} but found {self._describe(token)}")
        if pattern is not None and not pattern.match(token.value):
            self._error(token, f"invalid {what} '{token.value}'")
        self.index += 1
        return token

    def _synchronize(self):
        # salta fino al prossimo inizio di statement
        while self.current.kind != EOF:
            if self.current.kind == IDENT and self.current.value in STATEMENT_KEYWORDS:
                return
            self.index += 1

    # grammatica ----------------------------------------------------------------
    def parse_document(self):
        while self.current.kind != EOF:
            start = self.index
            try:
                self._statement()
            except _Recover:
                if self.index == start:
                    self.index += 1
                self._synchronize()

    def _statement(self):
        token = self.current
        if token.kind == IDENT and token.value == "individual":
            self.index += 1
            self._individual_decl()
        elif token.kind == IDENT and token.value == "link":
            self.index += 1
            self._link_decl()
        elif token.kind == IDENT:
            self._error(token, f"unknown statement keyword '{token.value}'")
        else:
            self._error(token, f"expected 'individual' or 'link' but found {self._describe(token)}")

    def _individual_decl(self):
        id_token = self._expect_ident("individual id")
        self._expect_punct(":")
        type_token = self._expect_ident("CamelCase type name", TYPENAME_RE)
        attrs = {}
        # registrato subito: un errore negli attributi non deve far sparire l'id
        self.individuals.append((id_token, type_token, attrs))
        if self.current.kind == PUNCT and self.current.value == "{":
            self.index += 1
            while not (self.current.kind == PUNCT and self.current.value == "}"):
                if self.current.kind == EOF:
                    self._error(self.current, "expected '}' but found end of input")
                name_token = self._expect_ident("snake_case attribute name", SNAKE_RE)
                self._expect_punct("=")
                value_token = self.current
                if value_token.kind != STRING:
                    self._error(value_token, f"expected string value but found {self._describe(value_token)}")
                self.index += 1
                if name_token.value in attrs:
                    self.diagnostics.append(ParseDiagnostic(
                        name_token.line, name_token.column,
                        f"duplicate attribute '{name_token.value}' for '{id_token.value}'"))
                attrs[name_token.value] = value_token.value
            self.index += 1

    def _link_decl(self):
        rel_token = self._expect_ident("snake_case relationship name", SNAKE_RE)
        self._expect_punct("(")
        source_token = self._expect_ident("individual id")
        self._expect_punct(",")
        target_token = self._expect_ident("individual id")
        self._expect_punct(")")
        self.links.append((rel_token, source_token, target_token))

    # costruzione della KB ------------------------------------------------------
    def build(self):
        kb = KnowledgeBase()
        declared = set()
        for id_token, type_token, attrs in self.individuals:
            if id_token.value in declared:
                self.diagnostics.append(ParseDiagnostic(
                    id_token.line, id_token.column, f"duplicate individual id '{id_token.value}'"))
                continue
            declared.add(id_token.value)
            kb.add_individual(id_token.value, type_token.value, attrs)
        for rel_token, source_token, target_token in self.links:
            resolved = True
            for token in (source_token, target_token):
                if token.value not in declared:
                    self.diagnostics.append(ParseDiagnostic(
                        token.line, token.column, f"unresolved identifier '{token.value}'"))
                    resolved = False
            if resolved:
                kb.add_link(rel_token.value, source_token.value, target_token.value)
        return kb


def parse_with_diagnostics(text):
    """Restituisce (kb, diagnostiche); kb e' None se c'e' almeno una diagnostica."""
    parser = TkbParser(text)
    parser.parse_document()
    kb = parser.build()
    diagnostics = sorted(parser.diagnostics, key=lambda d: (d.line, d.column, d.message))
    if diagnostics:
        logger.debug("parse failed with %d diagnostic(s)", len(diagnostics))
        return None, diagnostics
    return kb.finalize(), []


def parse(text):
    kb, diagnostics = parse_with_diagnostics(text)
    if diagnostics:
        raise TkbParseError(diagnostics)
    return kb


def serialize(kb):
    lines = []
    for id in kb.ids():
        individual = kb.individual(id)
        header = f"individual {individual.id} : {individual.type_name}"
        if not individual.attrs:
            lines.append(header)
            continue
        lines.append(header + " {")
        for name in sorted(individual.attrs):
            lines.append(f"    {name} = {escape_string(individual.attrs[name])}")
        lines.append("}")
    links = kb.sorted_links()
    if links and lines:
        lines.append("")
    for link in links:
        lines.append(f"link {link.rel_name}({link.source}, {link.target})")
    return "\n".join(lines) + "\n" if lines else ""
