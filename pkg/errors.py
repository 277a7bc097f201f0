# Eccezioni comuni a tutti i moduli.
# Il codice di libreria solleva queste eccezioni; solo main.py le trasforma in exit code e messaggi su stderr.


class TdoError(Exception):
    """Base di tutte le eccezioni del validatore."""


class SchemaIntegrityError(TdoError):
    """Il self-check dello schema builtin e' fallito (errore di programmazione, fatale)."""


class ConfigError(TdoError):
    """File di configurazione del pacchetto mancante o malformato."""


class UnknownTermError(TdoError):
    def __init__(self, name):
        super().__init__(f"unknown term '{name}'")
        self.name = name


class DuplicateIndividualError(TdoError):
    def __init__(self, individual_id):
        super().__init__(f"duplicate individual id '{individual_id}'")
        self.individual_id = individual_id


class DanglingReferenceError(TdoError):
    def __init__(self, missing_ids):
        self.missing_ids = sorted(set(missing_ids))
        names = ", ".join(f"'{i}'" for i in self.missing_ids)
        super().__init__(f"dangling reference to undeclared individual(s): {names}")


class KnowledgeBaseFrozenError(TdoError):
    """Modifica di una knowledge base gia' finalizzata."""


class TkbParseError(TdoError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else None
        summary = f"{first.line}:{first.column}: {first.message}" if first else "parse failed"
        super().__init__(f"{len(self.diagnostics)} parse error(s), first at {summary}")


class FormulaError(TdoError):
    """Formula non ben formata (variabile libera o nome non risolvibile)."""


class UnknownAxiomError(TdoError):
    def __init__(self, axiom_id):
        super().__init__(f"unknown axiom '{axiom_id}'")
        self.axiom_id = axiom_id


class NotApplicableError(TdoError):
    """La perturbazione richiesta non e' iniettabile sulla knowledge base."""


class GeneratorError(TdoError):
    """Configurazione del generatore non valida o modello non riparabile."""
